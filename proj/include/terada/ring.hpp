#pragma once

// Exact multivariate Laurent-polynomial arithmetic over arbitrary-precision
// integers. Monomials may carry negative exponents, so q^-n is a monomial and
// not a fraction. The term order is graded-lexicographic over the registry
// order of the variables; it is translation invariant, which lets products by
// a fixed monomial reuse the sorted term vector.

#include <algorithm>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace terada {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A declared variable. Identity (and the registry order used by the term
/// order) is the declaration index.
struct Var {
    std::uint32_t id = 0;
    friend auto operator<=>(Var, Var) = default;
};

/// Interning table for variable names. Names are unique; re-declaring a name
/// returns the existing variable.
class Registry {
public:
    Var declare(const std::string& name) {
        if (auto it = ids_.find(name); it != ids_.end()) return Var{it->second};
        auto id = static_cast<std::uint32_t>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return Var{id};
    }

    Var operator[](const std::string& name) const {
        auto it = ids_.find(name);
        if (it == ids_.end()) throw std::invalid_argument("unknown variable: " + name);
        return Var{it->second};
    }

    bool contains(const std::string& name) const { return ids_.count(name) != 0; }

    const std::string& name(Var v) const {
        if (v.id >= names_.size()) throw std::invalid_argument("variable not in registry");
        return names_[v.id];
    }

    std::size_t size() const { return names_.size(); }

    /// Registry with the standard symbol set used throughout the engine,
    /// declared in a fixed order.
    static Registry standard() {
        Registry r;
        for (const char* n : {"a", "b", "g", "f", "h", "c", "q", "x", "alpha", "beta", "gamma"})
            r.declare(n);
        return r;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> ids_;
};

/// Product of variable powers with signed exponents. Stored sparsely, sorted
/// by variable id, zero exponents omitted.
class Monomial {
public:
    struct VarPow {
        std::uint32_t var;
        std::int32_t exp;
        friend bool operator==(const VarPow&, const VarPow&) = default;
    };

    Monomial() = default;

    static Monomial one() { return {}; }

    static Monomial of(Var v, std::int32_t e = 1) {
        Monomial m;
        if (e != 0) m.pw_.push_back({v.id, e});
        return m;
    }

    bool is_one() const { return pw_.empty(); }

    std::int64_t degree() const {
        std::int64_t d = 0;
        for (const auto& p : pw_) d += p.exp;
        return d;
    }

    std::int32_t exponent(Var v) const {
        for (const auto& p : pw_)
            if (p.var == v.id) return p.exp;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.pw_.reserve(pw_.size() + o.pw_.size());
        std::size_t i = 0, j = 0;
        while (i < pw_.size() && j < o.pw_.size()) {
            if (pw_[i].var < o.pw_[j].var) r.pw_.push_back(pw_[i++]);
            else if (pw_[i].var > o.pw_[j].var) r.pw_.push_back(o.pw_[j++]);
            else {
                std::int32_t e = pw_[i].exp + o.pw_[j].exp;
                if (e != 0) r.pw_.push_back({pw_[i].var, e});
                ++i, ++j;
            }
        }
        for (; i < pw_.size(); ++i) r.pw_.push_back(pw_[i]);
        for (; j < o.pw_.size(); ++j) r.pw_.push_back(o.pw_[j]);
        return r;
    }

    /// Raise to an integer power (negative allowed: exponents scale).
    Monomial pow(std::int32_t k) const {
        if (k == 0) return one();
        Monomial r = *this;
        for (auto& p : r.pw_) p.exp *= k;
        return r;
    }

    /// Graded-lexicographic comparison over the registry order.
    static std::strong_ordering cmp(const Monomial& x, const Monomial& y) {
        std::int64_t dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx <=> dy;
        std::size_t i = 0, j = 0;
        while (i < x.pw_.size() || j < y.pw_.size()) {
            std::uint32_t vx = i < x.pw_.size() ? x.pw_[i].var : UINT32_MAX;
            std::uint32_t vy = j < y.pw_.size() ? y.pw_[j].var : UINT32_MAX;
            if (vx < vy) {
                // x has a nonzero exponent on an earlier variable, y has 0
                if (x.pw_[i].exp != 0) return x.pw_[i].exp > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
                ++i;
            } else if (vy < vx) {
                if (y.pw_[j].exp != 0) return y.pw_[j].exp > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
                ++j;
            } else {
                if (x.pw_[i].exp != y.pw_[j].exp) return x.pw_[i].exp <=> y.pw_[j].exp;
                ++i, ++j;
            }
        }
        return std::strong_ordering::equal;
    }

    bool operator==(const Monomial& o) const { return pw_ == o.pw_; }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (const auto& p : pw_) {
            h = (h ^ p.var) * 1099511628211ull;
            h = (h ^ static_cast<std::uint32_t>(p.exp)) * 1099511628211ull;
        }
        return h;
    }

    auto begin() const { return pw_.begin(); }
    auto end() const { return pw_.end(); }
    std::size_t var_count() const { return pw_.size(); }

private:
    boost::container::small_vector<VarPow, 3> pw_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class LaurentPolynomial {
public:
    struct Term {
        Monomial mono;
        BigInt coeff;
    };

    LaurentPolynomial() = default;  // the zero polynomial

    static LaurentPolynomial zero() { return {}; }

    static LaurentPolynomial constant(BigInt c) {
        LaurentPolynomial p;
        if (c != 0) p.terms_.push_back({Monomial::one(), std::move(c)});
        return p;
    }

    static LaurentPolynomial one() { return constant(1); }

    static LaurentPolynomial variable(Var v, std::int32_t e = 1) {
        return monomial(Monomial::of(v, e));
    }

    static LaurentPolynomial monomial(Monomial m, BigInt c = 1) {
        LaurentPolynomial p;
        if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Build from an arbitrary term list: sorts, combines, drops zeros.
    static LaurentPolynomial from_terms(std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
            return Monomial::cmp(a.mono, b.mono) == std::strong_ordering::greater;
        });
        LaurentPolynomial p;
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
                p.terms_.back().coeff += t.coeff;
            else
                p.terms_.push_back(std::move(t));
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    bool is_one() const {
        return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
    }

    std::size_t term_count() const { return terms_.size(); }

    std::span<const Term> terms() const { return terms_; }

    /// Leading term under the graded-lex order.
    const Term& leading() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.front();
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return merge(a, b, false);
    }

    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return merge(a, b, true);
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    /// Multiply every term by coeff * mono. Order is translation invariant,
    /// so the sorted term vector is reused as is.
    LaurentPolynomial times_monomial(const Monomial& mono, const BigInt& coeff = 1) const {
        if (coeff == 0) return zero();
        LaurentPolynomial r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * mono, t.coeff * coeff});
        return r;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        const LaurentPolynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
        const LaurentPolynomial& big = a.terms_.size() <= b.terms_.size() ? b : a;
        if (small.terms_.size() <= 8) {
            LaurentPolynomial acc;
            for (const auto& t : small.terms_) acc += big.times_monomial(t.mono, t.coeff);
            return acc;
        }
        std::unordered_map<Monomial, BigInt, MonomialHash> acc;
        acc.reserve(big.terms_.size() * 2);
        for (const auto& s : small.terms_)
            for (const auto& t : big.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
        std::vector<Term> ts;
        ts.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) ts.push_back({m, std::move(c)});
        return from_terms(std::move(ts));
    }

    LaurentPolynomial pow(unsigned k) const {
        LaurentPolynomial r = one(), base = *this;
        while (k) {
            if (k & 1u) r *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return r;
    }

    /// gcd of the coefficient magnitudes; 0 for the zero polynomial.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& t : terms_) {
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(t.coeff));
            if (g == 1) break;
        }
        return g;
    }

    LaurentPolynomial divided_by_constant(const BigInt& c) const {
        if (c == 0) throw std::domain_error("division by zero constant");
        LaurentPolynomial r = *this;
        for (auto& t : r.terms_) {
            if (t.coeff % c != 0) throw std::logic_error("non-exact constant division");
            t.coeff /= c;
        }
        return r;
    }

    /// Exact polynomial division; throws std::logic_error when the division
    /// is not exact (which indicates an arithmetic bug upstream).
    LaurentPolynomial exact_div(const LaurentPolynomial& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        LaurentPolynomial q, r = *this;
        const Term& dl = d.leading();
        std::size_t guard = 4 * (terms_.size() + 16) * (d.terms_.size() + 16);
        while (!r.is_zero()) {
            if (guard-- == 0) throw std::logic_error("non-exact polynomial division");
            const Term& rl = r.leading();
            if (rl.coeff % dl.coeff != 0) throw std::logic_error("non-exact polynomial division");
            Monomial qm = rl.mono * dl.mono.pow(-1);
            BigInt qc = rl.coeff / dl.coeff;
            q += monomial(qm, qc);
            r -= d.times_monomial(qm, qc);
        }
        return q;
    }

    /// Substitute each mapped variable by a monomial image (a variable
    /// rename, scaling by another variable, etc.). Exponents multiply into
    /// the image, so Laurent exponents are preserved.
    LaurentPolynomial substitute(const std::map<Var, Monomial>& images) const {
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m = Monomial::one();
            for (const auto& p : t.mono) {
                auto it = images.find(Var{p.var});
                if (it == images.end()) m = m * Monomial::of(Var{p.var}, p.exp);
                else m = m * it->second.pow(p.exp);
            }
            ts.push_back({std::move(m), t.coeff});
        }
        return from_terms(std::move(ts));
    }

    /// Evaluate at a complex point, summing terms in canonical order. When
    /// `magnitude` is given it receives the sum of the term magnitudes, used
    /// by the near-pole guard.
    std::complex<double> eval(const std::map<Var, std::complex<double>>& point,
                              double* magnitude = nullptr) const {
        std::complex<double> sum = 0.0;
        double mag = 0.0;
        for (const auto& t : terms_) {
            std::complex<double> v = t.coeff.convert_to<double>();
            for (const auto& p : t.mono) {
                auto it = point.find(Var{p.var});
                if (it == point.end()) throw std::invalid_argument("evaluation point misses a variable");
                v *= ipow(it->second, p.exp);
            }
            sum += v;
            mag += std::abs(v);
        }
        if (magnitude) *magnitude = terms_.empty() ? 1.0 : mag;
        return sum;
    }

    bool operator==(const LaurentPolynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }

    /// Total order on polynomials (term-by-term), used to key factor maps.
    static std::strong_ordering cmp(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        std::size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            auto c = Monomial::cmp(a.terms_[i].mono, b.terms_[i].mono);
            if (c != std::strong_ordering::equal) return c;
            if (a.terms_[i].coeff != b.terms_[i].coeff)
                return a.terms_[i].coeff < b.terms_[i].coeff ? std::strong_ordering::less
                                                             : std::strong_ordering::greater;
        }
        return a.terms_.size() <=> b.terms_.size();
    }

    std::string to_string(const Registry& reg) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            BigInt c = t.coeff;
            if (first) {
                if (c < 0) { s += "-"; c = -c; }
            } else {
                s += c < 0 ? " - " : " + ";
                if (c < 0) c = -c;
            }
            first = false;
            std::string vars;
            for (const auto& p : t.mono) {
                if (!vars.empty()) vars += "*";
                vars += reg.name(Var{p.var});
                if (p.exp != 1) vars += "^" + std::to_string(p.exp);
            }
            if (vars.empty()) s += c.str();
            else if (c == 1) s += vars;
            else s += c.str() + "*" + vars;
        }
        return s;
    }

private:
    static std::complex<double> ipow(std::complex<double> z, std::int32_t e) {
        if (e < 0) return 1.0 / ipow(z, -e);
        std::complex<double> r = 1.0;
        while (e) {
            if (e & 1) r *= z;
            e >>= 1;
            if (e) z *= z;
        }
        return r;
    }

    static LaurentPolynomial merge(const LaurentPolynomial& a, const LaurentPolynomial& b, bool subtract) {
        LaurentPolynomial r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            auto c = Monomial::cmp(a.terms_[i].mono, b.terms_[j].mono);
            if (c == std::strong_ordering::greater) r.terms_.push_back(a.terms_[i++]);
            else if (c == std::strong_ordering::less) {
                r.terms_.push_back(b.terms_[j]);
                if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
                ++j;
            } else {
                BigInt s = subtract ? BigInt(a.terms_[i].coeff - b.terms_[j].coeff)
                                    : BigInt(a.terms_[i].coeff + b.terms_[j].coeff);
                if (s != 0) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            r.terms_.push_back(b.terms_[j]);
            if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
        }
        return r;
    }

    std::vector<Term> terms_;
};

inline LaurentPolynomial poly_add(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p + q; }
inline LaurentPolynomial poly_mul(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p * q; }

}  // namespace terada
