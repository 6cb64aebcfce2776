#pragma once

// Numeric verification of the reciprocity relation
//   Sel_n(a, b, g) Sel_n(-a, -b, -g) = (Delta . Delta) (omega . omega)
// using a Lanczos complex Gamma and factorwise evaluation of the two
// closed-form products.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "terada/cohomology.hpp"
#include "terada/homology.hpp"

namespace terada::selberg {

using Complex = std::complex<double>;

struct SelbergParams {
    int n = 1;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double margin = 1e-3;  // required distance of all linear forms from the integers

    SelbergParams negated() const { return {n, -alpha, -beta, -gamma, margin}; }

    /// Distance from the nearest nonpositive integer (a Gamma pole) of the
    /// worst of the linear forms alpha+(j-1)gamma, beta+(j-1)gamma,
    /// j gamma + 1, alpha+beta+(n+j-2)gamma.
    double pole_margin() const {
        auto dist = [](double v) {
            double nearest = std::min(0.0, std::round(v));
            return std::abs(v - nearest);
        };
        double m = 1.0;
        for (int j = 1; j <= n; ++j) {
            m = std::min(m, dist(alpha + (j - 1) * gamma));
            m = std::min(m, dist(beta + (j - 1) * gamma));
            m = std::min(m, dist(j * gamma + 1.0));
            m = std::min(m, dist(alpha + beta + (n + j - 2) * gamma));
        }
        return m;
    }

    bool valid() const { return n >= 1 && pole_margin() >= margin; }

    void require_valid() const {
        if (n < 1) throw std::domain_error("needs n >= 1");
        if (!valid()) throw std::domain_error("pole margin violated");
    }
};

/// Gamma(z) by the 9-coefficient Lanczos approximation with parameter 7;
/// reflection formula for Re z < 0.5. Relative error around 1e-13 for
/// moderate |z|.
inline Complex gamma_complex(Complex z) {
    static constexpr double coeff[9] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

    if (std::abs(z.imag()) < 1e-9) {
        double r = std::round(z.real());
        if (r <= 0.0 && std::abs(z.real() - r) < 1e-9) throw std::domain_error("gamma pole");
    }
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::numbers::pi / (std::sin(std::numbers::pi * z) * gamma_complex(1.0 - z));
    }
    z -= 1.0;
    Complex x = coeff[0];
    for (int i = 1; i < 9; ++i) x += coeff[i] / (z + static_cast<double>(i));
    Complex t = z + 7.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

/// Closed Gamma-product value of the n-fold Selberg function
///   prod_j Gamma(a+(j-1)g) Gamma(b+(j-1)g) Gamma(jg+1)
///          / (Gamma(a+b+(n+j-2)g) Gamma(g+1)).
inline Complex selberg_closed(const SelbergParams& p) {
    p.require_valid();
    Complex v = 1.0;
    for (int j = 1; j <= p.n; ++j) {
        v *= gamma_complex(p.alpha + (j - 1) * p.gamma) * gamma_complex(p.beta + (j - 1) * p.gamma) *
             gamma_complex(j * p.gamma + 1.0);
        v /= gamma_complex(p.alpha + p.beta + (p.n + j - 2) * p.gamma) * gamma_complex(p.gamma + 1.0);
    }
    return v;
}

inline std::map<Var, Complex> exponential_point(const Registry& reg, const SelbergParams& p) {
    auto e = [](double t) {
        return std::exp(Complex(0.0, 2.0 * std::numbers::pi * t));
    };
    return {{reg["a"], e(p.alpha)}, {reg["b"], e(p.beta)}, {reg["g"], e(p.gamma)}};
}

/// Homology closed form evaluated factorwise at a = e^(2 pi i alpha), etc.
inline Complex theorem1_numeric(const SelbergParams& p) {
    p.require_valid();
    Registry reg = Registry::standard();
    auto assign = polytope::ExponentAssignment::uniform(reg);
    return homology::jn_closed(p.n, assign).eval(exponential_point(reg, p));
}

/// Cohomology closed form times (2 pi i)^n.
inline Complex theorem2_numeric(const SelbergParams& p) {
    p.require_valid();
    Complex v = 1.0;
    for (int j = 1; j <= p.n; ++j) {
        v *= p.alpha + p.beta + (p.n + j - 2) * p.gamma;
        v /= (p.alpha + (j - 1) * p.gamma) * (p.beta + (j - 1) * p.gamma);
    }
    Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
    for (int j = 0; j < p.n; ++j) v *= two_pi_i;
    return v;
}

/// | Sel(p) Sel(-p) / (theorem1 * theorem2) - 1 |.
inline double reciprocity_residual(const SelbergParams& p) {
    p.require_valid();
    p.negated().require_valid();
    Complex lhs = selberg_closed(p) * selberg_closed(p.negated());
    Complex rhs = theorem1_numeric(p) * theorem2_numeric(p);
    if (std::abs(rhs) < 1e-300) throw std::domain_error("division underflow in reciprocity");
    return std::abs(lhs / rhs - 1.0);
}

/// Seeded parameter draws in (0.05, 0.45), rejecting draws where either the
/// parameters or their negation come within `margin` of a Gamma pole.
inline std::vector<SelbergParams> draw_params(int n, int count, std::uint64_t seed,
                                              double margin = 1e-2) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.05, 0.45);
    std::vector<SelbergParams> out;
    while (static_cast<int>(out.size()) < count) {
        SelbergParams p{n, dist(rng), dist(rng), dist(rng), margin};
        if (p.valid() && p.negated().valid()) out.push_back(p);
    }
    return out;
}

}  // namespace terada::selberg
