#pragma once

// Quotients of Laurent polynomials and factored products. Equality is decided
// by exact cross multiplication; no polynomial gcd is ever computed, so
// stored numerators and denominators may be unreduced.

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "terada/ring.hpp"

namespace terada {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(LaurentPolynomial::one()) {}

    /*implicit*/ RationalFunction(LaurentPolynomial p)
        : num_(std::move(p)), den_(LaurentPolynomial::one()) {}

    RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction integer(long v) { return {LaurentPolynomial::constant(v)}; }
    static RationalFunction variable(Var v, std::int32_t e = 1) {
        return {LaurentPolynomial::variable(v, e)};
    }
    static RationalFunction monomial(Monomial m, BigInt c = 1) {
        return {LaurentPolynomial::monomial(std::move(m), std::move(c))};
    }

    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        r.normalize();
        return r;
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (num_.is_zero()) throw std::domain_error("division by zero rational function");
        return {den_, num_};
    }

    /// Integer power; negative exponents go through the inverse.
    RationalFunction pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        return {num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k))};
    }

    RationalFunction substitute(const std::map<Var, Monomial>& images) const {
        return {num_.substitute(images), den_.substitute(images)};
    }

    /// Evaluate at a complex point. Throws when the denominator suffers
    /// near-total cancellation at the point.
    std::complex<double> eval(const std::map<Var, std::complex<double>>& point) const {
        double den_mag = 0.0;
        std::complex<double> d = den_.eval(point, &den_mag);
        if (std::abs(d) < 1e-12 * den_mag) throw std::domain_error("near-pole evaluation");
        return num_.eval(point) / d;
    }

    /// Structural equality (same stored representation).
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string(const Registry& reg) const {
        if (den_.is_one()) return num_.to_string(reg);
        return "(" + num_.to_string(reg) + ") / (" + den_.to_string(reg) + ")";
    }

private:
    // den nonzero; leading coefficient of den positive; joint integer content
    // of num and den equal to 1; zero stored as 0/1.
    void normalize() {
        if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPolynomial::one();
            return;
        }
        if (den_.leading().coeff < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
        if (c > 1) {
            num_ = num_.divided_by_constant(c);
            den_ = den_.divided_by_constant(c);
        }
    }

    LaurentPolynomial num_, den_;
};

inline RationalFunction rat_add(const RationalFunction& r, const RationalFunction& s) { return r + s; }
inline RationalFunction rat_mul(const RationalFunction& r, const RationalFunction& s) { return r * s; }
inline RationalFunction rat_neg(const RationalFunction& r) { return -r; }
inline RationalFunction rat_inv(const RationalFunction& r) { return r.inverse(); }

/// Exact equality in the rational-function field, by cross multiplication.
/// Independent of whether either side is reduced.
inline bool rat_eq(const RationalFunction& r, const RationalFunction& s) {
    if (r.num() == s.num() && r.den() == s.den()) return true;
    if (r.den() == s.den()) return r.num() == s.num();
    return r.num() * s.den() == s.num() * r.den();
}

inline std::complex<double> rat_eval_complex(const RationalFunction& r,
                                             const std::map<Var, std::complex<double>>& point) {
    return r.eval(point);
}

/// Product of polynomial factors with signed integer multiplicities, times an
/// exact rational constant. Used for the closed-form products before
/// expansion. Factors are kept content-free with positive leading
/// coefficient; the extracted constants fold into `constant`.
class FactoredRational {
public:
    struct Factor {
        LaurentPolynomial poly;
        int multiplicity;
    };

    FactoredRational() = default;
    explicit FactoredRational(BigRational c) : constant_(std::move(c)) {}

    const BigRational& constant() const { return constant_; }
    std::span<const Factor> factors() const { return factors_; }

    /// Multiply by poly^mult, normalizing and merging equal factors.
    FactoredRational& multiply_factor(LaurentPolynomial poly, int mult) {
        if (mult == 0) return *this;
        if (poly.is_zero()) throw std::invalid_argument("zero factor in factored rational");
        BigInt c = poly.content();
        bool neg = poly.leading().coeff < 0;
        if (neg) poly = -poly;
        if (c > 1) poly = poly.divided_by_constant(c);
        BigRational scale(neg ? -c : c);
        constant_ *= pow_rational(scale, mult);
        if (poly.is_one()) return *this;
        for (auto& f : factors_) {
            if (f.poly == poly) {
                f.multiplicity += mult;
                if (f.multiplicity == 0) {
                    f = factors_.back();
                    factors_.pop_back();
                }
                return *this;
            }
        }
        factors_.push_back({std::move(poly), mult});
        return *this;
    }

    FactoredRational& multiply_constant(const BigRational& c) {
        constant_ *= c;
        return *this;
    }

    FactoredRational& operator*=(const FactoredRational& o) {
        constant_ *= o.constant_;
        for (const auto& f : o.factors_) multiply_factor(f.poly, f.multiplicity);
        return *this;
    }

    friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) {
        a *= b;
        return a;
    }

    static FactoredRational of(const RationalFunction& r) {
        FactoredRational f;
        f.multiply_factor(r.num(), 1);
        f.multiply_factor(r.den(), -1);
        return f;
    }

    RationalFunction expanded() const {
        LaurentPolynomial num = LaurentPolynomial::constant(BigInt(boost::multiprecision::numerator(constant_)));
        LaurentPolynomial den = LaurentPolynomial::constant(BigInt(boost::multiprecision::denominator(constant_)));
        for (const auto& f : factors_) {
            if (f.multiplicity > 0) num *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
            else den *= f.poly.pow(static_cast<unsigned>(-f.multiplicity));
        }
        return {std::move(num), std::move(den)};
    }

    /// Factorwise numeric evaluation (no expansion).
    std::complex<double> eval(const std::map<Var, std::complex<double>>& point) const {
        std::complex<double> v = boost::multiprecision::numerator(constant_).convert_to<double>() /
                                 boost::multiprecision::denominator(constant_).convert_to<double>();
        for (const auto& f : factors_) {
            double mag = 0.0;
            std::complex<double> fv = f.poly.eval(point, &mag);
            if (f.multiplicity < 0 && std::abs(fv) < 1e-12 * mag)
                throw std::domain_error("near-pole evaluation");
            v *= cpow(fv, f.multiplicity);
        }
        return v;
    }

private:
    static BigRational pow_rational(BigRational b, int k) {
        bool inv = k < 0;
        if (inv) k = -k;
        BigRational r(1);
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        if (inv) {
            if (r == 0) throw std::domain_error("inverse of zero constant");
            r = BigRational(1) / r;
        }
        return r;
    }

    static std::complex<double> cpow(std::complex<double> z, int e) {
        if (e < 0) return 1.0 / cpow(z, -e);
        std::complex<double> r = 1.0;
        while (e) {
            if (e & 1) r *= z;
            e >>= 1;
            if (e) z *= z;
        }
        return r;
    }

    BigRational constant_ = 1;
    std::vector<Factor> factors_;
};

inline RationalFunction expand(const FactoredRational& f) { return f.expanded(); }

/// Sum of factored rationals over the least common factored denominator.
/// Keeps the result denominator a product of the input factors instead of a
/// fully multiplied-out cross product.
inline FactoredRational fr_sum(std::span<const FactoredRational> terms) {
    struct PolyLess {
        bool operator()(const LaurentPolynomial& a, const LaurentPolynomial& b) const {
            return LaurentPolynomial::cmp(a, b) == std::strong_ordering::less;
        }
    };
    std::map<LaurentPolynomial, int, PolyLess> lcm;
    for (const auto& t : terms)
        for (const auto& f : t.factors())
            if (f.multiplicity < 0) {
                int need = -f.multiplicity;
                auto [it, fresh] = lcm.emplace(f.poly, need);
                if (!fresh && it->second < need) it->second = need;
            }

    BigInt common_den = 1;
    for (const auto& t : terms)
        common_den = boost::multiprecision::lcm(common_den, BigInt(boost::multiprecision::denominator(t.constant())));

    LaurentPolynomial total;
    for (const auto& t : terms) {
        LaurentPolynomial scaled = LaurentPolynomial::one();
        std::map<LaurentPolynomial, int, PolyLess> have;
        for (const auto& f : t.factors()) {
            if (f.multiplicity > 0) scaled *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
            else have[f.poly] = -f.multiplicity;
        }
        for (const auto& [poly, mult] : lcm) {
            auto it = have.find(poly);
            int missing = mult - (it == have.end() ? 0 : it->second);
            if (missing > 0) scaled *= poly.pow(static_cast<unsigned>(missing));
        }
        BigInt c = BigInt(boost::multiprecision::numerator(t.constant())) *
                   (common_den / BigInt(boost::multiprecision::denominator(t.constant())));
        total += scaled.times_monomial(Monomial::one(), c);
    }

    if (total.is_zero()) return FactoredRational(BigRational(0));
    FactoredRational r(BigRational(BigInt(1), common_den));
    r.multiply_factor(std::move(total), 1);
    for (const auto& [poly, mult] : lcm) r.multiply_factor(poly, -mult);
    return r;
}

}  // namespace terada
