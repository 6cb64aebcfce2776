#include <catch2/catch_amalgamated.hpp>

#include "terada/homology.hpp"

using namespace terada;
using namespace terada::homology;
using polytope::Interval;
using polytope::LaminarFamily;

namespace {

Registry reg = Registry::standard();
const ExponentAssignment assign = polytope::ExponentAssignment::uniform(reg);
const RationalFunction one = RationalFunction::integer(1);
const RationalFunction A = RationalFunction::variable(reg["a"]);
const RationalFunction B = RationalFunction::variable(reg["b"]);
const RationalFunction G = RationalFunction::variable(reg["g"]);

RationalFunction br(int lo, int hi, int n) { return polytope::bracket(Interval(lo, hi, n), assign); }

RationalFunction fact_inv(int n) {
    BigInt f = 1;
    for (int j = 2; j <= n; ++j) f *= j;
    return {LaurentPolynomial::one(), LaurentPolynomial::constant(f)};
}

}  // namespace

TEST_CASE("unsigned chamber self-intersection", "[homology]") {
    // n = 1: two hyperfaces, no compatible pair
    CHECK(rat_eq(self_intersection_unsigned(1, assign), one + br(0, 1, 1) + br(1, 2, 1)));

    // n = 2: all eleven faces of the pentagon, spelled out
    RationalFunction expect = one + br(0, 1, 2) + br(1, 2, 2) + br(2, 3, 2) + br(0, 2, 2) +
                              br(1, 3, 2) + br(0, 1, 2) * br(2, 3, 2) + br(0, 1, 2) * br(0, 2, 2) +
                              br(1, 2, 2) * br(0, 2, 2) + br(1, 2, 2) * br(1, 3, 2) +
                              br(2, 3, 2) * br(1, 3, 2);
    CHECK(rat_eq(self_intersection_unsigned(2, assign), expect));
}

TEST_CASE("3D unsigned self-intersection against the 45-term cell sum", "[homology]") {
    // Independent oracle: the direct 45-term face sum of a 3-cell with the
    // uniform-g exponents attached to its six pentagons and three rectangles.
    auto m = [&](int ea, int eb, int eg) {
        return RationalFunction::monomial(Monomial::of(reg["a"], ea) * Monomial::of(reg["b"], eb) *
                                          Monomial::of(reg["g"], eg));
    };
    RationalFunction oracle = terada3_sum({m(0, 3, 6), m(0, 1, 0), m(0, 0, 2)},
                                          {m(0, 0, 2), m(1, 0, 0), m(3, 0, 6)},
                                          {m(0, 2, 2), m(2, 0, 2), m(0, 0, 6)});
    CHECK(rat_eq(self_intersection_unsigned(3, assign), oracle));
    CHECK(polytope::laminar_families(3).size() == 45);
}

TEST_CASE("pairwise intersections through touching faces", "[homology]") {
    // n = 2, touching along (12): -g [12] {1 + [012] + [123]}
    RationalFunction expect2 =
        -G * br(1, 2, 2) * (one + br(0, 2, 2) + br(1, 3, 2));
    CHECK(rat_eq(pair_intersection(2, LaminarFamily{{Interval(1, 2, 2)}}, assign), expect2));

    // n = 3, touching along (12) and (123): g^4 [12][123] {1 + [0123] + [1234]}
    RationalFunction expect3 =
        G.pow(4) * br(1, 2, 3) * br(1, 3, 3) * (one + br(0, 3, 3) + br(1, 4, 3));
    CHECK(rat_eq(
        pair_intersection(3, LaminarFamily{{Interval(1, 2, 3), Interval(1, 3, 3)}}, assign),
        expect3));

    // n = 3, touching along (123): -g^3 [123] times the face sum of that cell
    RationalFunction cell = one + br(1, 2, 3) + br(2, 3, 3) + br(0, 3, 3) + br(1, 4, 3) +
                            br(1, 2, 3) * br(0, 3, 3) + br(1, 2, 3) * br(1, 4, 3) +
                            br(2, 3, 3) * br(0, 3, 3) + br(2, 3, 3) * br(1, 4, 3);
    CHECK(rat_eq(pair_intersection(3, LaminarFamily{{Interval(1, 3, 3)}}, assign),
                 -G.pow(3) * br(1, 3, 3) * cell));

    // the empty family gives the signed self term
    CHECK(rat_eq(pair_intersection(3, LaminarFamily{}, assign),
                 -self_intersection_unsigned(3, assign)));
    CHECK_THROWS_AS(pair_intersection(2, LaminarFamily{{Interval(0, 1, 2)}}, assign),
                    std::domain_error);
}

TEST_CASE("enumerated self-intersection of the symmetrized chamber", "[homology]") {
    // n = 1 reduces to the Beta reciprocity factor
    CHECK(rat_eq(jn_enumerated(1, assign), (one - A * B) / ((one - A) * (one - B))));

    // n = 2 printed form
    RationalFunction j2 = (A * G * B - one) * (A * G.pow(2) * B - one) /
                          ((A - one) * (A * G - one) * (B - one) * (G * B - one) * (G + one));
    CHECK(rat_eq(jn_enumerated(2, assign), j2));

    long terms = 0;
    jn_enumerated(3, assign, &terms);
    CHECK(terms == 45);

    CHECK(rat_eq(jn_enumerated(4, assign),
                 jn_closed(4, assign).expanded() * fact_inv(4)));
}

TEST_CASE("closed form and its product shape", "[homology]") {
    CHECK(rat_eq(jn_closed(1, assign).expanded(), (one - A * B) / ((one - A) * (one - B))));

    RationalFunction j3_printed =
        RationalFunction::integer(-6) * (G.pow(2) * B * A - one) * (G.pow(3) * B * A - one) *
        (G.pow(4) * B * A - one) /
        ((A - one) * (A * G - one) * (A * G.pow(2) - one) * (B - one) * (G * B - one) *
         (G.pow(2) * B - one) * (G + one) * (G.pow(2) + G + one));
    CHECK(rat_eq(jn_closed(3, assign).expanded(), j3_printed));

    for (int n = 1; n <= 5; ++n)
        CHECK(rat_eq(jn_closed(n, assign).expanded(),
                     jn_closed_product_form(n, assign).expanded()));
}

TEST_CASE("interior monomial sums", "[homology]") {
    CHECK(rat_eq(x_monomial_sum(2, 2, assign), G / (G + one)));
    CHECK(rat_eq(x_monomial_sum(3, 3, assign),
                 G.pow(3) / ((G + one) * (G.pow(2) + G + one))));

    // X(2,2) is also 1 + (1-g)[12]; the part free of the boundary variables
    CHECK(rat_eq(x_monomial_sum(2, 2, assign), one + (one - G) * br(1, 2, 2)));

    // X(3,3) factorizes as (1 + <123>)(1 + <12> + <23>)
    auto ab = [&](int lo, int hi) { return polytope::angle_bracket(Interval(lo, hi, 3), assign); };
    CHECK(rat_eq(x_monomial_sum(3, 3, assign),
                 (one + ab(1, 3)) * (one + ab(1, 2) + ab(2, 3))));

    qseries::QContext gctx{reg["g"]};
    for (int n = 2; n <= 8; ++n) {
        // X(n-1, n) = (g^C(n,2) + (-1)^n) / [n]!
        RationalFunction lemma(
            LaurentPolynomial::monomial(Monomial::of(reg["g"],
                                                     static_cast<std::int32_t>(qseries::choose2(n)))) +
                LaurentPolynomial::constant(n % 2 == 0 ? 1 : -1),
            qseries::q_factorial(n, gctx));
        CHECK(rat_eq(x_monomial_sum(n - 1, n, assign), lemma));
    }
    for (int n = 1; n <= 8; ++n) {
        CHECK(rat_eq(x_monomial_sum(n, n, assign), x_closed(n, assign).expanded()));
        CHECK(rat_eq(y_monomial_sum(n, n, assign), y_closed(n, assign).expanded()));
    }
    CHECK(rat_eq(y_closed(1, assign).expanded(), one));
    CHECK(rat_eq(x_closed(4, assign).expanded(),
                 G.pow(6) / ((G + one) * (G.pow(2) + G + one) * (G.pow(3) + G.pow(2) + G + one))));
}

TEST_CASE("head-sum recursion and closed form", "[homology]") {
    auto A_seq = a_recursive_sequence(4, assign);
    CHECK(rat_eq(A_seq[1], br(0, 1, 1)));
    CHECK(rat_eq(A_seq[2], br(0, 2, 2) * (x_monomial_sum(2, 2, assign) + br(0, 1, 1))));
    CHECK(rat_eq(A_seq[3],
                 br(0, 3, 3) * (x_monomial_sum(3, 3, assign) +
                                br(0, 1, 1) * x_monomial_sum(2, 2, assign) + A_seq[2])));

    CHECK(rat_eq(a_closed(0, assign).expanded(), one));
    CHECK(rat_eq(a_closed(1, assign).expanded(), br(0, 1, 1)));
    for (int k = 1; k <= 4; ++k) {
        CHECK(rat_eq(A_seq[static_cast<std::size_t>(k)], a_closed(k, assign).expanded()));
        CHECK(rat_eq(b_recursive(k, assign), b_closed(k, assign).expanded()));
    }
}

TEST_CASE("partial head sums telescope", "[homology]") {
    // sum_{i<=m} A_i X_{m-i} = (g-1)^m a^m g^(2 C(m,2)) / ((a)_m (g)_m)
    qseries::QContext gctx{reg["g"]};
    for (int m = 1; m <= 6; ++m) {
        std::vector<FactoredRational> terms;
        for (int i = 0; i <= m; ++i)
            terms.push_back(a_closed(i, assign) * x_closed(m - i, assign));
        RationalFunction lhs = fr_sum(terms).expanded();
        RationalFunction rhs =
            RationalFunction((LaurentPolynomial::variable(reg["g"]) - LaurentPolynomial::one()).pow(
                static_cast<unsigned>(m))) *
            RationalFunction::monomial(Monomial::of(reg["a"], m) *
                                       Monomial::of(reg["g"], static_cast<std::int32_t>(
                                                                  2 * qseries::choose2(m)))) /
            (qseries::q_pochhammer(A, m, gctx) * qseries::q_pochhammer(G, m, gctx));
        CHECK(rat_eq(lhs, rhs));
    }
}

TEST_CASE("decomposition into head sums", "[homology]") {
    CHECK(rat_eq(jn_decomposed(1, assign), jn_enumerated(1, assign)));
    RationalFunction j2 = (A * G * B - one) * (A * G.pow(2) * B - one) /
                          ((A - one) * (A * G - one) * (B - one) * (G * B - one) * (G + one));
    CHECK(rat_eq(jn_decomposed(2, assign), j2));
    for (int n = 3; n <= 4; ++n)
        CHECK(rat_eq(jn_decomposed(n, assign), jn_enumerated(n, assign)));
}

TEST_CASE("self-intersection is symmetric in the two boundary variables", "[homology][property]") {
    std::map<Var, Monomial> swap{{reg["a"], Monomial::of(reg["b"])},
                                 {reg["b"], Monomial::of(reg["a"])}};
    for (int n = 1; n <= 4; ++n) {
        RationalFunction j = jn_enumerated(n, assign);
        CHECK(rat_eq(j, j.substitute(swap)));
    }
}

TEST_CASE("segment and pentagon sums", "[homology]") {
    RationalFunction x = RationalFunction::variable(reg["x"]);
    RationalFunction c = RationalFunction::variable(reg["c"]);
    CHECK(rat_eq(segment_sum(x, c), (x * c - one) / ((x - one) * (c - one))));

    // pentagon sum: 1 + five singles + five adjacent products
    std::array<RationalFunction, 5> e{A, B, G, x, c};
    RationalFunction expect = one;
    for (const auto& v : e) expect += face_term(v);
    for (int i = 0; i < 5; ++i)
        expect += face_term(e[static_cast<std::size_t>(i)]) *
                  face_term(e[static_cast<std::size_t>((i + 1) % 5)]);
    CHECK(rat_eq(pentagon_sum(e), expect));
}

TEST_CASE("general 3D expression", "[homology]") {
    RationalFunction j3gen = j3_general(reg);
    std::map<Var, Monomial> to_g{{reg["f"], Monomial::of(reg["g"])},
                                 {reg["h"], Monomial::of(reg["g"])}};

    CHECK(rat_eq(j3gen.substitute(to_g), jn_closed(3, assign).expanded() * fact_inv(3)));

    // rectangle term at f = h = g
    RationalFunction a3g6 = RationalFunction::monomial(Monomial::of(reg["a"], 3) * Monomial::of(reg["g"], 6));
    RationalFunction g6b3 = RationalFunction::monomial(Monomial::of(reg["b"], 3) * Monomial::of(reg["g"], 6));
    RationalFunction g2 = RationalFunction::variable(reg["g"], 2);
    RationalFunction g6 = RationalFunction::variable(reg["g"], 6);
    RationalFunction rect_at_g = -G.pow(3) * face_term(g6) * segment_sum(a3g6, g6b3) * segment_sum(g2, g2);

    RationalFunction f = RationalFunction::variable(reg["f"]);
    RationalFunction h = RationalFunction::variable(reg["h"]);
    RationalFunction fgh2 = (f * G * h).pow(2);
    RationalFunction rect_general = -(f * G * h) * face_term(fgh2) *
                                    segment_sum(A.pow(3) * fgh2, B.pow(3) * fgh2) *
                                    segment_sum(f.pow(2), g2);
    CHECK(rat_eq(rect_general.substitute(to_g), rect_at_g));

    // the two segment terms coincide at f = h = g
    RationalFunction seg1 = (f * G * h) * face_term(fgh2) * f * face_term(f.pow(2)) *
                            segment_sum(A.pow(3) * fgh2, B.pow(3) * fgh2);
    RationalFunction seg2 = (f * G * h) * face_term(fgh2) * G * face_term(g2) *
                            segment_sum(A.pow(3) * fgh2, B.pow(3) * fgh2);
    CHECK(rat_eq(seg1.substitute(to_g), seg2.substitute(to_g)));
}

TEST_CASE("n = 5 full agreement", "[homology][heavy]") {
    auto rep = jn_report(5, assign);
    CHECK(rep.equal);
    CHECK(rep.term_count == 903);
    CHECK(rat_eq(jn_decomposed(5, assign), rep.enumerated));
}

TEST_CASE("n = 6 full agreement", "[.long]") {
    auto rep = jn_report(6, assign);
    CHECK(rep.equal);
    CHECK(rat_eq(jn_decomposed(6, assign), rep.enumerated));
}
