#pragma once

// Cohomological self-intersection of the logarithmic n-form on the Terada-n:
// contributions live at the admissible vertices only, with additive exponents
// (linear forms in alpha, beta, gamma) along the hyperfaces. The (2 pi i)^n
// prefactor is carried as an integer power tag and never expanded.

#include <stdexcept>
#include <vector>

#include "terada/polytope.hpp"
#include "terada/rational.hpp"

namespace terada::cohomology {

using polytope::Interval;
using polytope::LaminarFamily;

struct AdditiveAssignment {
    Var alpha, beta, gamma;

    static AdditiveAssignment standard(const Registry& reg) {
        return {reg["alpha"], reg["beta"], reg["gamma"]};
    }
};

/// The linear form i*alpha + j*beta + k*gamma attached to a hyperface.
struct AdditiveExponent {
    int coeff_alpha = 0, coeff_beta = 0, coeff_gamma = 0;

    LaurentPolynomial to_poly(const AdditiveAssignment& assign) const {
        LaurentPolynomial p;
        if (coeff_alpha) p += LaurentPolynomial::monomial(Monomial::of(assign.alpha), coeff_alpha);
        if (coeff_beta) p += LaurentPolynomial::monomial(Monomial::of(assign.beta), coeff_beta);
        if (coeff_gamma) p += LaurentPolynomial::monomial(Monomial::of(assign.gamma), coeff_gamma);
        return p;
    }

    friend bool operator==(const AdditiveExponent&, const AdditiveExponent&) = default;
};

/// Additive exponent along a hyperface: with k = span, boundary-0 faces carry
/// k alpha + k(k-1) gamma, boundary-top faces k beta + k(k-1) gamma, interior
/// faces of m letters m(m-1) gamma.
inline AdditiveExponent additive_exponent_of(const Interval& I) {
    int k = I.span();
    switch (I.kind()) {
        case Interval::Kind::Boundary0: return {k, 0, k * (k - 1)};
        case Interval::Kind::BoundaryTop: return {0, k, k * (k - 1)};
        case Interval::Kind::Interior: {
            int m = I.size();
            return {0, 0, m * (m - 1)};
        }
    }
    throw std::logic_error("unreachable");
}

/// The n+1 vertices of the Terada-n not touching any other chamber. Vertex k
/// is the chain {[0..i] : i = 1..k} joined with {[j..n+1] : j = k+1..n}; each
/// family has exactly n members and is laminar.
inline std::vector<LaminarFamily> admissible_vertices(int n) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    std::vector<LaminarFamily> out;
    for (int k = 0; k <= n; ++k) {
        LaminarFamily fam;
        for (int i = 1; i <= k; ++i) fam.members.emplace_back(0, i, n);
        for (int j = k + 1; j <= n; ++j) fam.members.emplace_back(j, n + 1, n);
        out.push_back(std::move(fam));
    }
    return out;
}

/// Reciprocal of the product of the additive exponents over the members of
/// the k-th admissible vertex.
inline RationalFunction vertex_contribution(int n, int k, const AdditiveAssignment& assign) {
    if (k < 0 || k > n) throw std::domain_error("needs 0 <= k <= n");
    LaminarFamily fam = admissible_vertices(n)[static_cast<std::size_t>(k)];
    LaurentPolynomial den = LaurentPolynomial::one();
    for (const Interval& I : fam.members) den *= additive_exponent_of(I).to_poly(assign);
    return {LaurentPolynomial::one(), std::move(den)};
}

/// A value of the shape (2 pi i)^power * rational_part.
struct TwoPiPower {
    int power = 0;
    RationalFunction rational_part;
};

/// Self-intersection of the form: (2 pi i)^n n! times the sum of the vertex
/// contributions. The sum is accumulated over the common denominator of all
/// vertex products.
inline TwoPiPower omega_self_intersection(int n, const AdditiveAssignment& assign) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    std::vector<LaurentPolynomial> dens;
    for (int k = 0; k <= n; ++k) {
        LaminarFamily fam = admissible_vertices(n)[static_cast<std::size_t>(k)];
        LaurentPolynomial d = LaurentPolynomial::one();
        for (const Interval& I : fam.members) d *= additive_exponent_of(I).to_poly(assign);
        dens.push_back(std::move(d));
    }
    LaurentPolynomial common = LaurentPolynomial::one();
    for (const auto& d : dens) common *= d;
    LaurentPolynomial num;
    for (int k = 0; k <= n; ++k) {
        LaurentPolynomial t = LaurentPolynomial::one();
        for (int j = 0; j <= n; ++j)
            if (j != k) t *= dens[static_cast<std::size_t>(j)];
        num += t;
    }
    BigInt fact = 1;
    for (int j = 2; j <= n; ++j) fact *= j;
    return {n, RationalFunction(num.times_monomial(Monomial::one(), fact), std::move(common))};
}

/// Closed product prod_{j=1}^n (alpha + beta + (n+j-2) gamma)
///                          / ((alpha + (j-1) gamma)(beta + (j-1) gamma)).
inline FactoredRational omega_closed_factored(int n, const AdditiveAssignment& assign) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    FactoredRational f;
    auto lin = [&](int ca, int cb, int cg) { return AdditiveExponent{ca, cb, cg}.to_poly(assign); };
    for (int j = 1; j <= n; ++j) {
        f.multiply_factor(lin(1, 1, n + j - 2), 1);
        f.multiply_factor(lin(1, 0, j - 1), -1);
        f.multiply_factor(lin(0, 1, j - 1), -1);
    }
    return f;
}

inline TwoPiPower omega_closed(int n, const AdditiveAssignment& assign) {
    return {n, omega_closed_factored(n, assign).expanded()};
}

/// Vertex-sum route equals the closed product, exactly.
inline bool verify_theorem2(int n, const AdditiveAssignment& assign) {
    return rat_eq(omega_self_intersection(n, assign).rational_part,
                  omega_closed(n, assign).rational_part);
}

/// Self-intersection of the loaded n-simplex for the multi-variable weight:
/// (-1)^n times the sum over proper subsets S of {0..n} of
/// prod_{i in S} 1/(a_i - 1), over multiplicative variables a_0..a_n declared
/// on demand. The orientation factor is the same one the chamber pairings
/// carry; with it the sum collapses to (1 - prod a_i) / prod (1 - a_i).
inline RationalFunction beta_n_simplex_self(int n, Registry& reg) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    std::vector<LaurentPolynomial> dens;
    for (int i = 0; i <= n; ++i)
        dens.push_back(LaurentPolynomial::variable(reg.declare("a" + std::to_string(i))) -
                       LaurentPolynomial::one());
    LaurentPolynomial common = LaurentPolynomial::one();
    for (const auto& d : dens) common *= d;
    LaurentPolynomial num;
    unsigned full = (1u << (n + 1)) - 1u;
    for (unsigned mask = 0; mask < full; ++mask) {  // proper subsets only
        LaurentPolynomial t = LaurentPolynomial::one();
        for (int i = 0; i <= n; ++i)
            if (!(mask & (1u << i))) t *= dens[static_cast<std::size_t>(i)];
        num += t;
    }
    if (n % 2 != 0) num = -num;
    return {std::move(num), std::move(common)};
}

/// Vertex sum for the n-beta form: sum_i prod_{j != i} 1/alpha_j, over
/// additive variables alpha_0..alpha_n declared on demand. Each vertex term
/// is alpha_i over the full product, so the sum is (sum alpha) / (prod alpha).
inline RationalFunction beta_n_form_self(int n, Registry& reg) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    std::vector<LaurentPolynomial> vars;
    for (int i = 0; i <= n; ++i)
        vars.push_back(LaurentPolynomial::variable(reg.declare("alpha" + std::to_string(i))));
    LaurentPolynomial common = LaurentPolynomial::one();
    for (const auto& v : vars) common *= v;
    LaurentPolynomial num;
    for (const auto& v : vars) num += v;
    return {std::move(num), std::move(common)};
}

}  // namespace terada::cohomology
