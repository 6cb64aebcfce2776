#pragma once

// q-combinatorial quantities (Gauss brackets, q-factorials, q-binomials,
// q-Pochhammer symbols) and exact finite verification of the q-identities the
// intersection-number engine relies on. Identities are checked per fixed n as
// exact rational-function equalities.

#include <stdexcept>
#include <vector>

#include "terada/rational.hpp"

namespace terada::qseries {

struct QContext {
    Var base;  // the multiplicative shift variable, typically g or q
};

/// [n] = 1 + g + ... + g^(n-1)
inline LaurentPolynomial gauss_bracket(int n, const QContext& ctx) {
    if (n <= 0) throw std::domain_error("gauss bracket needs n >= 1");
    std::vector<LaurentPolynomial::Term> ts;
    ts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ts.push_back({Monomial::of(ctx.base, i), 1});
    return LaurentPolynomial::from_terms(std::move(ts));
}

/// [n]! = [n][n-1]...[1]; empty product for n = 0.
inline LaurentPolynomial q_factorial(int n, const QContext& ctx) {
    if (n < 0) throw std::domain_error("q-factorial needs n >= 0");
    LaurentPolynomial r = LaurentPolynomial::one();
    for (int j = 1; j <= n; ++j) r *= gauss_bracket(j, ctx);
    return r;
}

/// [n m] = [n]! / ([m]! [n-m]!), computed by exact polynomial division.
inline LaurentPolynomial q_binom(int n, int m, const QContext& ctx) {
    if (m < 0 || m > n) throw std::domain_error("q-binomial needs 0 <= m <= n");
    return q_factorial(n, ctx).exact_div(q_factorial(m, ctx) * q_factorial(n - m, ctx));
}

/// (x; g)_k = (1 - x)(1 - x g)...(1 - x g^(k-1)); empty product for k = 0.
inline RationalFunction q_pochhammer(const RationalFunction& x, int k, const QContext& ctx) {
    if (k < 0) throw std::domain_error("q-Pochhammer needs k >= 0");
    RationalFunction r = RationalFunction::integer(1);
    for (int i = 0; i < k; ++i)
        r *= RationalFunction::integer(1) - x * RationalFunction::variable(ctx.base, i);
    return r;
}

/// Same product as a factor list, for common-denominator sums.
inline FactoredRational q_pochhammer_factored(const RationalFunction& x, int k, int multiplicity,
                                              const QContext& ctx) {
    FactoredRational f;
    for (int i = 0; i < k; ++i) {
        RationalFunction fac =
            RationalFunction::integer(1) - x * RationalFunction::variable(ctx.base, i);
        f.multiply_factor(fac.num(), multiplicity);
        f.multiply_factor(fac.den(), -multiplicity);
    }
    return f;
}

inline long long choose2(long long n) { return n * (n - 1) / 2; }

/// True iff sum_{k=0}^n [n k] g^C(k,2) (-1)^k is the zero polynomial.
inline bool verify_g_binomial_alternating(int n, const QContext& ctx) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    LaurentPolynomial sum;
    for (int k = 0; k <= n; ++k) {
        BigInt sign = (k % 2 == 0) ? 1 : -1;
        sum += q_binom(n, k, ctx).times_monomial(
            Monomial::of(ctx.base, static_cast<std::int32_t>(choose2(k))), sign);
    }
    return sum.is_zero();
}

/// Terminating basic hypergeometric sum
///   sum_{i=0}^n (q^-n; q)_i (b; q)_i / ((q; q)_i (c; q)_i) x^i
/// as an exact rational function. The parameters may be arbitrary rational
/// expressions; in particular Laurent monomials like q^-n substitute directly.
inline RationalFunction phi21_finite(int n, const RationalFunction& b, const RationalFunction& c,
                                     const RationalFunction& x, const QContext& ctx) {
    if (n < 0) throw std::domain_error("needs n >= 0");
    RationalFunction q_inv_n = RationalFunction::variable(ctx.base, -n);
    std::vector<FactoredRational> terms;
    terms.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        FactoredRational t;
        t *= q_pochhammer_factored(q_inv_n, i, 1, ctx);
        t *= q_pochhammer_factored(b, i, 1, ctx);
        t *= q_pochhammer_factored(RationalFunction::variable(ctx.base), i, -1, ctx);
        t *= q_pochhammer_factored(c, i, -1, ctx);
        RationalFunction xi = x.pow(i);
        t.multiply_factor(xi.num(), 1);
        t.multiply_factor(xi.den(), -1);
        terms.push_back(std::move(t));
    }
    return fr_sum(terms).expanded();
}

/// Checks both terminating q-Chu-Vandermonde evaluations as identities in the
/// symbols b, c, q:
///   phi(q^-n, b; c; q, q)          = (c/b)_n b^n / (c)_n
///   phi(q^-n, b; c; q, (c/b) q^n)  = (c/b)_n / (c)_n
inline bool verify_q_chu_vandermonde(int n, Var b_var, Var c_var, const QContext& ctx) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    RationalFunction b = RationalFunction::variable(b_var);
    RationalFunction c = RationalFunction::variable(c_var);
    RationalFunction q = RationalFunction::variable(ctx.base);
    RationalFunction cb_poch = q_pochhammer(c / b, n, ctx);
    RationalFunction c_poch = q_pochhammer(c, n, ctx);

    RationalFunction lhs1 = phi21_finite(n, b, c, q, ctx);
    RationalFunction rhs1 = cb_poch * b.pow(n) / c_poch;
    if (!rat_eq(lhs1, rhs1)) return false;

    RationalFunction lhs2 = phi21_finite(n, b, c, (c / b) * q.pow(n), ctx);
    RationalFunction rhs2 = cb_poch / c_poch;
    return rat_eq(lhs2, rhs2);
}

/// Checks the sum-reversal identity in the symbols b, c, q, x:
///   phi(q^-n, b; c; q, x) = (-1)^n q^-C(n+1,2) (b)_n/(c)_n x^n
///                           * phi(q^-n, c^-1 q^(1-n); b^-1 q^(1-n); q, (c/b) q^(n+1) / x).
inline bool verify_reversal_identity(int n, Var b_var, Var c_var, Var x_var, const QContext& ctx) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    RationalFunction b = RationalFunction::variable(b_var);
    RationalFunction c = RationalFunction::variable(c_var);
    RationalFunction x = RationalFunction::variable(x_var);
    RationalFunction q = RationalFunction::variable(ctx.base);

    RationalFunction lhs = phi21_finite(n, b, c, x, ctx);

    RationalFunction b2 = c.inverse() * q.pow(1 - n);
    RationalFunction c2 = b.inverse() * q.pow(1 - n);
    RationalFunction x2 = (c / b) * q.pow(n + 1) / x;
    RationalFunction scale =
        RationalFunction::monomial(Monomial::of(ctx.base, static_cast<std::int32_t>(-choose2(n + 1))),
                                   (n % 2 == 0) ? 1 : -1) *
        q_pochhammer(b, n, ctx) / q_pochhammer(c, n, ctx) * x.pow(n);
    RationalFunction rhs = scale * phi21_finite(n, b2, c2, x2, ctx);
    return rat_eq(lhs, rhs);
}

/// Rising factorial x (x+1) ... (x+n-1); empty product for n = 0.
inline RationalFunction rising_factorial(const RationalFunction& x, int n) {
    if (n < 0) throw std::domain_error("rising factorial needs n >= 0");
    RationalFunction r = RationalFunction::integer(1);
    for (int i = 0; i < n; ++i) r *= x + RationalFunction::integer(i);
    return r;
}

/// Checks sum_{k=0}^n (-n)_k (beta)_k / (k! (gamma)_k) = (gamma-beta)_n / (gamma)_n
/// as an identity in the symbols beta, gamma (rising factorials).
inline bool verify_classical_chu_vandermonde(int n, Var beta_var, Var gamma_var) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    RationalFunction beta = RationalFunction::variable(beta_var);
    RationalFunction gamma = RationalFunction::variable(gamma_var);
    RationalFunction sum;
    BigInt k_factorial = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) k_factorial *= k;
        RationalFunction minus_n_rising = rising_factorial(RationalFunction::integer(-n), k);
        sum += minus_n_rising * rising_factorial(beta, k) /
               (RationalFunction(LaurentPolynomial::constant(k_factorial)) * rising_factorial(gamma, k));
    }
    RationalFunction rhs = rising_factorial(gamma - beta, n) / rising_factorial(gamma, n);
    return rat_eq(sum, rhs);
}

}  // namespace terada::qseries
