#include <catch2/catch_amalgamated.hpp>

#include "terada/qseries.hpp"

using namespace terada;
using namespace terada::qseries;

namespace {

Registry reg = Registry::standard();
const QContext gctx{reg["g"]};
const QContext qctx{reg["q"]};
const LaurentPolynomial one = LaurentPolynomial::one();
const LaurentPolynomial G = LaurentPolynomial::variable(reg["g"]);

// Independent oracle: the Pascal-type recursion
//   [n m] = [n-1 m-1] + g^m [n-1 m].
LaurentPolynomial q_binom_oracle(int n, int m) {
    if (m == 0 || m == n) return LaurentPolynomial::one();
    return q_binom_oracle(n - 1, m - 1) +
           q_binom_oracle(n - 1, m).times_monomial(Monomial::of(reg["g"], m));
}

}  // namespace

TEST_CASE("gauss bracket", "[qseries]") {
    CHECK(gauss_bracket(1, gctx) == one);
    CHECK(gauss_bracket(2, gctx) == one + G);
    CHECK(gauss_bracket(3, gctx) == one + G + G.pow(2));
    CHECK_THROWS_AS(gauss_bracket(0, gctx), std::domain_error);
}

TEST_CASE("gauss bracket tends to n as g tends to 1", "[qseries]") {
    std::map<Var, std::complex<double>> pt{{reg["g"], 1.0 + 1e-6}};
    for (int n = 1; n <= 10; ++n) {
        double v = gauss_bracket(n, gctx).eval(pt).real();
        CHECK(std::abs(v - n) <= 1e-4 * n);
    }
}

TEST_CASE("q-factorial", "[qseries]") {
    CHECK(q_factorial(0, gctx) == one);
    CHECK(q_factorial(2, gctx) == one + G);
    CHECK(q_factorial(3, gctx) == (one + G) * (one + G + G.pow(2)));
}

TEST_CASE("q-binomial by exact division matches the Pascal oracle", "[qseries]") {
    CHECK(q_binom(4, 2, gctx) == q_binom_oracle(4, 2));
    // frozen expansion of the oracle value
    CHECK(q_binom(4, 2, gctx) == one + G + G.pow(2) + G.pow(2) + G.pow(3) + G.pow(4));
    for (int n = 1; n <= 10; ++n) {
        CHECK(q_binom(n, 0, gctx) == one);
        CHECK(q_binom(n, n, gctx) == one);
        for (int m = 1; m < n; ++m) {
            CHECK(q_binom(n, m, gctx) == q_binom_oracle(n, m));
            CHECK(q_binom(n, m, gctx) == q_binom(n, n - m, gctx));
        }
    }
}

TEST_CASE("q-Pochhammer products", "[qseries]") {
    RationalFunction av = RationalFunction::variable(reg["a"]);
    RationalFunction expect((one - LaurentPolynomial::variable(reg["a"])) *
                            (one - LaurentPolynomial::variable(reg["a"]) * G));
    CHECK(rat_eq(q_pochhammer(av, 2, gctx), expect));
    CHECK(rat_eq(q_pochhammer(av, 0, gctx), RationalFunction::integer(1)));
    for (int n = 1; n <= 4; ++n) {
        RationalFunction vanish = q_pochhammer(RationalFunction::variable(reg["g"], -n), n + 1, gctx);
        CHECK(vanish.is_zero());
    }
}

TEST_CASE("q-Pochhammer splitting", "[qseries][property]") {
    RationalFunction x = RationalFunction::variable(reg["a"]);
    for (int m = 0; m <= 8; ++m)
        for (int k = 0; m + k <= 8; ++k) {
            RationalFunction lhs = q_pochhammer(x, m + k, gctx);
            RationalFunction shifted = x * RationalFunction::variable(reg["g"], m);
            RationalFunction rhs = q_pochhammer(x, m, gctx) * q_pochhammer(shifted, k, gctx);
            CHECK(rat_eq(lhs, rhs));
        }
}

TEST_CASE("alternating g-binomial sum vanishes", "[qseries]") {
    for (int n = 1; n <= 10; ++n) CHECK(verify_g_binomial_alternating(n, gctx));
}

TEST_CASE("terminating basic hypergeometric sum", "[qseries]") {
    RationalFunction b = RationalFunction::variable(reg["b"]);
    RationalFunction c = RationalFunction::variable(reg["c"]);
    RationalFunction q = RationalFunction::variable(reg["q"]);
    RationalFunction one_rf = RationalFunction::integer(1);

    CHECK(rat_eq(phi21_finite(0, b, c, q, qctx), one_rf));

    // n = 1 at x = q collapses to (1 - c/b) b / (1 - c)
    RationalFunction lhs1 = phi21_finite(1, b, c, q, qctx);
    RationalFunction rhs1 = (one_rf - c / b) * b / (one_rf - c);
    CHECK(rat_eq(lhs1, rhs1));

    // n = 2 at x = q collapses to (c/b)_2 b^2 / (c)_2
    RationalFunction lhs2 = phi21_finite(2, b, c, q, qctx);
    RationalFunction rhs2 = q_pochhammer(c / b, 2, qctx) * b.pow(2) / q_pochhammer(c, 2, qctx);
    CHECK(rat_eq(lhs2, rhs2));
}

TEST_CASE("q-Chu-Vandermonde evaluations", "[qseries]") {
    for (int n = 1; n <= 6; ++n) CHECK(verify_q_chu_vandermonde(n, reg["b"], reg["c"], qctx));
}

TEST_CASE("sum reversal identity", "[qseries]") {
    for (int n = 1; n <= 6; ++n)
        CHECK(verify_reversal_identity(n, reg["b"], reg["c"], reg["x"], qctx));
}

TEST_CASE("rising factorial", "[qseries]") {
    RationalFunction alpha = RationalFunction::variable(reg["alpha"]);
    CHECK(rat_eq(rising_factorial(alpha, 0), RationalFunction::integer(1)));
    CHECK(rat_eq(rising_factorial(alpha, 2), alpha * (alpha + RationalFunction::integer(1))));
    for (int n = 1; n <= 5; ++n)
        CHECK(rising_factorial(RationalFunction::integer(-n), n + 1).is_zero());
}

TEST_CASE("classical Chu-Vandermonde evaluation", "[qseries]") {
    for (int n = 1; n <= 6; ++n)
        CHECK(verify_classical_chu_vandermonde(n, reg["beta"], reg["gamma"]));
}
