#pragma once

// Twisted-homology intersection numbers. Face sums over laminar families are
// accumulated as a single numerator over the product of all per-face
// denominators, so no intermediate rational arithmetic (and no gcd) is ever
// needed; the pairwise-sum route and the monomial route then share one
// denominator and can be compared term for term.

#include <array>
#include <stdexcept>
#include <vector>

#include "terada/polytope.hpp"
#include "terada/qseries.hpp"
#include "terada/rational.hpp"

namespace terada::homology {

using polytope::ExponentAssignment;
using polytope::Interval;
using polytope::LaminarFamily;

/// Per-interval data for a face sum: a face contributes include_num[i] when
/// interval i is a member of the family and exclude_den[i] when it is not.
struct FaceBasis {
    std::vector<Interval> intervals;
    std::vector<LaurentPolynomial> include_num;
    std::vector<LaurentPolynomial> exclude_den;
    std::vector<std::vector<char>> compat;

    static FaceBasis build(std::vector<Interval> iv, std::vector<LaurentPolynomial> nums,
                           std::vector<LaurentPolynomial> dens) {
        FaceBasis b{std::move(iv), std::move(nums), std::move(dens), {}};
        std::size_t m = b.intervals.size();
        b.compat.assign(m, std::vector<char>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                b.compat[i][j] = (i != j && b.intervals[i].compatible(b.intervals[j])) ? 1 : 0;
        return b;
    }

    LaurentPolynomial denominator() const {
        LaurentPolynomial d = LaurentPolynomial::one();
        for (const auto& f : exclude_den) d *= f;
        return d;
    }

    int index_of(const Interval& I) const {
        for (std::size_t i = 0; i < intervals.size(); ++i)
            if (intervals[i] == I) return static_cast<int>(i);
        throw std::invalid_argument("interval not in face basis");
    }
};

struct FaceSum {
    LaurentPolynomial numerator;    // sum over families of the mixed products
    LaurentPolynomial denominator;  // product of every exclude_den
    long families = 0;              // number of families accumulated
};

/// Sum over all laminar families S (within the basis, containing `forced`) of
///   prod_{i in S} include_num[i] * prod_{i not in S} exclude_den[i].
/// With exact_max_size > 0 only families whose largest member has exactly
/// that many letters are accumulated; the empty family counts as size 1.
inline FaceSum face_sum(const FaceBasis& basis, const std::vector<int>& forced = {},
                        int exact_max_size = 0) {
    std::size_t m = basis.intervals.size();
    std::vector<char> is_forced(m, 0);
    for (int i : forced) is_forced[static_cast<std::size_t>(i)] = 1;

    // Intervals incompatible with the forced set can never be selected; their
    // denominators are a fixed prefactor.
    LaurentPolynomial fixed = LaurentPolynomial::one();
    int forced_max = forced.empty() ? 1 : 0;
    for (int i : forced) {
        fixed *= basis.include_num[static_cast<std::size_t>(i)];
        forced_max = std::max(forced_max, basis.intervals[static_cast<std::size_t>(i)].size());
    }
    std::vector<int> selectable;
    for (std::size_t i = 0; i < m; ++i) {
        if (is_forced[i]) continue;
        bool ok = true;
        for (int f : forced)
            if (!basis.compat[i][static_cast<std::size_t>(f)]) { ok = false; break; }
        if (ok) selectable.push_back(static_cast<int>(i));
        else fixed *= basis.exclude_den[i];
    }

    FaceSum out;
    out.denominator = basis.denominator();
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t idx, const LaurentPolynomial& prod, int max_size) -> void {
        if (idx == selectable.size()) {
            if (exact_max_size == 0 || max_size == exact_max_size) {
                out.numerator += prod;
                ++out.families;
            }
            return;
        }
        std::size_t i = static_cast<std::size_t>(selectable[idx]);
        self(self, idx + 1, prod * basis.exclude_den[i], max_size);
        for (int c : chosen)
            if (!basis.compat[i][static_cast<std::size_t>(c)]) return;
        chosen.push_back(static_cast<int>(i));
        self(self, idx + 1, prod * basis.include_num[i],
             std::max(max_size, basis.intervals[i].size()));
        chosen.pop_back();
    };
    // Recurse over small subtree products; the fixed prefactor multiplies the
    // accumulated sum once.
    rec(rec, 0, LaurentPolynomial::one(), forced_max);
    out.numerator *= fixed;
    return out;
}

/// Basis with plain square brackets: 1 / (e_I - 1) for every hyperface.
inline FaceBasis square_basis(int n, const ExponentAssignment& assign) {
    auto iv = polytope::all_intervals(n);
    std::vector<LaurentPolynomial> nums, dens;
    for (const auto& I : iv) {
        nums.push_back(LaurentPolynomial::one());
        dens.push_back(polytope::exponent_of(I, assign) - LaurentPolynomial::one());
    }
    return FaceBasis::build(std::move(iv), std::move(nums), std::move(dens));
}

/// Basis for the monomial route: interior intervals carry the crossing factor
/// (the angle-bracket numerator over the same square-bracket denominator),
/// boundary intervals the plain bracket.
inline FaceBasis monomial_basis(int n, const ExponentAssignment& assign) {
    auto iv = polytope::all_intervals(n);
    std::vector<LaurentPolynomial> nums, dens;
    for (const auto& I : iv) {
        nums.push_back(I.kind() == Interval::Kind::Interior ? polytope::crossing_factor(I, assign)
                                                            : LaurentPolynomial::one());
        dens.push_back(polytope::exponent_of(I, assign) - LaurentPolynomial::one());
    }
    return FaceBasis::build(std::move(iv), std::move(nums), std::move(dens));
}

/// Sum over all laminar families of the product of square brackets; the
/// unsigned self-intersection of the chamber.
inline RationalFunction self_intersection_unsigned(int n, const ExponentAssignment& assign) {
    FaceSum fs = face_sum(square_basis(n, assign));
    return {std::move(fs.numerator), std::move(fs.denominator)};
}

/// Signed monomial prod_{I in F} (-1)^q g^(q(q+1)/2) carried by a touching
/// family (q = span of each member).
inline std::pair<Monomial, BigInt> touching_weight(const LaminarFamily& F, Var g) {
    long long gexp = 0;
    int qsum = 0;
    for (const Interval& I : F.members) {
        int q = I.span();
        qsum += q;
        gexp += static_cast<long long>(q) * (q + 1) / 2;
    }
    return {Monomial::of(g, static_cast<std::int32_t>(gexp)), (qsum % 2 == 0) ? 1 : -1};
}

/// Intersection number with the chamber adjacent along the face F:
///   (-1)^n prod_{I in F} (-1)^q g^(q(q+1)/2) [I] * (F . F),
/// where F . F sums square-bracket products over the families disjoint from F
/// and jointly laminar with it. For empty F this is the signed self term.
inline RationalFunction pair_intersection(int n, const LaminarFamily& F,
                                          const ExponentAssignment& assign) {
    for (const Interval& I : F.members)
        if (I.kind() != Interval::Kind::Interior)
            throw std::domain_error("pair intersection requires interior intervals");
    FaceBasis basis = square_basis(n, assign);
    std::vector<int> forced;
    for (const Interval& I : F.members) forced.push_back(basis.index_of(I));
    FaceSum fs = face_sum(basis, forced);
    auto [mono, sign] = touching_weight(F, assign.g());
    if (n % 2 != 0) sign = -sign;
    return {fs.numerator.times_monomial(mono, sign), std::move(fs.denominator)};
}

namespace detail {

inline bool interior_filter(const Interval& I) { return I.kind() == Interval::Kind::Interior; }

}  // namespace detail

/// J_n / n!, computed along two routes that must agree exactly:
///  (i) the sum of pair_intersection over every interior laminar family
///      (empty included), and
/// (ii) (-1)^n times the sum over all laminar families of the monomial
///      products (crossing factors on interior members, square brackets on
///      boundary members).
/// Both routes are accumulated over the same denominator, so the agreement
/// check is a numerator comparison. Returns route (ii).
inline RationalFunction jn_enumerated(int n, const ExponentAssignment& assign,
                                      long* term_count = nullptr) {
    if (n < 1) throw std::domain_error("needs n >= 1");

    FaceBasis mono_basis = monomial_basis(n, assign);
    FaceSum route2 = face_sum(mono_basis);
    if (term_count) *term_count = route2.families;

    FaceBasis sq_basis = square_basis(n, assign);
    LaurentPolynomial route1;
    for (const auto& F : polytope::laminar_families(n, detail::interior_filter)) {
        std::vector<int> forced;
        for (const Interval& I : F.members) forced.push_back(sq_basis.index_of(I));
        FaceSum fs = face_sum(sq_basis, forced);
        auto [mono, sign] = touching_weight(F, assign.g());
        route1 += fs.numerator.times_monomial(mono, sign);
    }

    if (!(route1 == route2.numerator))
        throw std::logic_error("pairwise-sum route disagrees with monomial route");

    BigInt sign = (n % 2 == 0) ? 1 : -1;
    return {route2.numerator.times_monomial(Monomial::one(), sign), std::move(route2.denominator)};
}

namespace detail {

/// Interior intervals of size at most k, with the closed-form angle-bracket
/// numerator/denominator pair (-1, 1 - (-1)^q g^C(q+1,2)).
inline FaceBasis angle_basis(int k, int n, const ExponentAssignment& assign) {
    std::vector<Interval> iv;
    for (const Interval& I : polytope::all_intervals(n))
        if (I.kind() == Interval::Kind::Interior && I.size() <= k) iv.push_back(I);
    std::vector<LaurentPolynomial> nums, dens;
    for (const Interval& I : iv) {
        int q = I.span();
        BigInt s = (q % 2 == 0) ? 1 : -1;
        nums.push_back(LaurentPolynomial::constant(-1));
        dens.push_back(LaurentPolynomial::one() -
                       LaurentPolynomial::monomial(Monomial::of(assign.g(), q * (q + 1) / 2), s));
    }
    return FaceBasis::build(std::move(iv), std::move(nums), std::move(dens));
}

}  // namespace detail

/// X(k, n): sum of the angle-bracket monomials in the letters 1..n whose
/// longest member has at most k letters; the empty family contributes 1.
inline RationalFunction x_monomial_sum(int k, int n, const ExponentAssignment& assign) {
    if (k < 1 || k > n) throw std::domain_error("needs 1 <= k <= n");
    FaceSum fs = face_sum(detail::angle_basis(k, n, assign));
    return {std::move(fs.numerator), std::move(fs.denominator)};
}

/// Y(k, n): as X(k, n) but the longest member has exactly k letters. The
/// empty family counts as length 1, so Y(1, n) = 1.
inline RationalFunction y_monomial_sum(int k, int n, const ExponentAssignment& assign) {
    if (k < 1 || k > n) throw std::domain_error("needs 1 <= k <= n");
    FaceSum fs = face_sum(detail::angle_basis(k, n, assign), {}, k);
    return {std::move(fs.numerator), std::move(fs.denominator)};
}

/// Closed form X(n, n) = g^C(n,2) / [n]!. X(0, 0) is 1 by convention.
inline FactoredRational x_closed(int n, const ExponentAssignment& assign) {
    if (n < 0) throw std::domain_error("needs n >= 0");
    FactoredRational f;
    qseries::QContext ctx{assign.g()};
    if (n >= 1)
        f.multiply_factor(
            LaurentPolynomial::monomial(Monomial::of(assign.g(),
                                                     static_cast<std::int32_t>(qseries::choose2(n)))),
            1);
    for (int j = 2; j <= n; ++j) f.multiply_factor(qseries::gauss_bracket(j, ctx), -1);
    return f;
}

/// Closed form Y(n, n) = (-1)^(n+1) / [n]!.
inline FactoredRational y_closed(int n, const ExponentAssignment& assign) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    FactoredRational f(BigRational((n + 1) % 2 == 0 ? 1 : -1));
    qseries::QContext ctx{assign.g()};
    for (int j = 2; j <= n; ++j) f.multiply_factor(qseries::gauss_bracket(j, ctx), -1);
    return f;
}

namespace detail {

inline RationalFunction boundary0_bracket(int k, const ExponentAssignment& assign) {
    return polytope::bracket(Interval(0, k, k), assign);
}

inline RationalFunction boundary_top_bracket(int k, const ExponentAssignment& assign) {
    return polytope::bracket(Interval(1, k + 1, k), assign);
}

inline std::vector<RationalFunction> head_sums_recursive(
    int k_max, const ExponentAssignment& assign,
    const std::function<RationalFunction(int)>& head_bracket) {
    std::vector<RationalFunction> A{RationalFunction::integer(1)};
    std::vector<RationalFunction> X{RationalFunction::integer(1)};
    for (int m = 1; m <= k_max; ++m) X.push_back(x_monomial_sum(m, m, assign));
    for (int k = 1; k <= k_max; ++k) {
        RationalFunction inner;
        for (int p = 0; p < k; ++p) inner += A[static_cast<std::size_t>(p)] * X[static_cast<std::size_t>(k - p)];
        A.push_back(head_bracket(k) * inner);
    }
    return A;
}

}  // namespace detail

/// A_0..A_kmax by the recursion A_k = [01...k] sum_{p<k} A_p X_{k-p},
/// A_0 = 1, with the X values taken from the monomial enumeration.
inline std::vector<RationalFunction> a_recursive_sequence(int k_max,
                                                          const ExponentAssignment& assign) {
    if (k_max < 0) throw std::domain_error("needs k >= 0");
    return detail::head_sums_recursive(
        k_max, assign, [&](int j) { return detail::boundary0_bracket(j, assign); });
}

/// B_0..B_kmax: the same recursion with the boundary-top bracket (b in place
/// of a).
inline std::vector<RationalFunction> b_recursive_sequence(int k_max,
                                                          const ExponentAssignment& assign) {
    if (k_max < 0) throw std::domain_error("needs k >= 0");
    return detail::head_sums_recursive(
        k_max, assign, [&](int j) { return detail::boundary_top_bracket(j, assign); });
}

inline RationalFunction a_recursive(int k, const ExponentAssignment& assign) {
    return a_recursive_sequence(k, assign).back();
}

inline RationalFunction b_recursive(int k, const ExponentAssignment& assign) {
    return b_recursive_sequence(k, assign).back();
}

/// Closed form A_k = (-1)^k (1-g)^k / ((a)_k (g)_k).
inline FactoredRational a_closed_for(Var head, int k, const ExponentAssignment& assign) {
    if (k < 0) throw std::domain_error("needs k >= 0");
    FactoredRational f(BigRational(k % 2 == 0 ? 1 : -1));
    Var g = assign.g();
    f.multiply_factor(LaurentPolynomial::one() - LaurentPolynomial::variable(g), k);
    for (int i = 0; i < k; ++i) {
        f.multiply_factor(LaurentPolynomial::one() -
                              LaurentPolynomial::monomial(Monomial::of(head) * Monomial::of(g, i)),
                          -1);
        f.multiply_factor(LaurentPolynomial::one() - LaurentPolynomial::variable(g, i + 1), -1);
    }
    return f;
}

inline FactoredRational a_closed(int k, const ExponentAssignment& assign) {
    return a_closed_for(assign.a_var, k, assign);
}

inline FactoredRational b_closed(int k, const ExponentAssignment& assign) {
    return a_closed_for(assign.b_var, k, assign);
}

/// J_n / n! assembled from the closed pieces:
/// (-1)^n sum_{i+j<=n} A_i X_{n-i-j} B_j (with X_0 = 1).
inline RationalFunction jn_decomposed(int n, const ExponentAssignment& assign) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    std::vector<FactoredRational> terms;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            FactoredRational t = a_closed(i, assign);
            t *= x_closed(n - i - j, assign);
            t *= b_closed(j, assign);
            terms.push_back(std::move(t));
        }
    RationalFunction sum = fr_sum(terms).expanded();
    if (n % 2 != 0) sum = -sum;
    return sum;
}

/// The closed-form product for J_n (factorial included):
///   n! prod_{j=1}^n (1 - a b g^(n+j-2)) (1 - g)
///              / ((1 - a g^(j-1)) (1 - b g^(j-1)) (1 - g^j)).
inline FactoredRational jn_closed(int n, const ExponentAssignment& assign) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    BigInt fact = 1;
    for (int j = 2; j <= n; ++j) fact *= j;
    FactoredRational f{BigRational(fact)};
    Var a = assign.a_var, b = assign.b_var, g = assign.g();
    auto one = LaurentPolynomial::one();
    for (int j = 1; j <= n; ++j) {
        f.multiply_factor(one - LaurentPolynomial::monomial(Monomial::of(a) * Monomial::of(b) *
                                                            Monomial::of(g, n + j - 2)),
                          1);
        f.multiply_factor(one - LaurentPolynomial::monomial(Monomial::of(a) * Monomial::of(g, j - 1)), -1);
        f.multiply_factor(one - LaurentPolynomial::monomial(Monomial::of(b) * Monomial::of(g, j - 1)), -1);
        f.multiply_factor(one - LaurentPolynomial::variable(g), 1);
        f.multiply_factor(one - LaurentPolynomial::variable(g, j), -1);
    }
    return f;
}

/// The same value in the Pochhammer shape
///   (-1)^n n! (g-1)^n (a b g^(n-1))_n / ((a)_n (b)_n (g)_n).
inline FactoredRational jn_closed_product_form(int n, const ExponentAssignment& assign) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    BigInt fact = 1;
    for (int j = 2; j <= n; ++j) fact *= j;
    FactoredRational f{BigRational(n % 2 == 0 ? fact : -fact)};
    Var a = assign.a_var, b = assign.b_var, g = assign.g();
    auto one = LaurentPolynomial::one();
    f.multiply_factor(LaurentPolynomial::variable(g) - one, n);
    for (int i = 0; i < n; ++i) {
        f.multiply_factor(one - LaurentPolynomial::monomial(Monomial::of(a) * Monomial::of(b) *
                                                            Monomial::of(g, n - 1 + i)),
                          1);
        f.multiply_factor(one - LaurentPolynomial::monomial(Monomial::of(a) * Monomial::of(g, i)), -1);
        f.multiply_factor(one - LaurentPolynomial::monomial(Monomial::of(b) * Monomial::of(g, i)), -1);
        f.multiply_factor(one - LaurentPolynomial::variable(g, i + 1), -1);
    }
    return f;
}

struct JnReport {
    int n = 0;
    RationalFunction enumerated;  // J_n / n!
    FactoredRational closed;      // J_n
    bool equal = false;
    long term_count = 0;
};

inline JnReport jn_report(int n, const ExponentAssignment& assign, bool check = true) {
    JnReport r;
    r.n = n;
    r.closed = jn_closed(n, assign);
    if (check) {
        r.enumerated = jn_enumerated(n, assign, &r.term_count);
        BigInt fact = 1;
        for (int j = 2; j <= n; ++j) fact *= j;
        RationalFunction closed_over_fact =
            r.closed.expanded() * RationalFunction(LaurentPolynomial::one(),
                                                   LaurentPolynomial::constant(fact));
        r.equal = rat_eq(r.enumerated, closed_over_fact);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Low-dimensional building blocks: face sums of a segment, a pentagon and a
// Terada-3 written directly in the attached exponents. Internally these are
// accumulated as factored rationals over the common denominator so the
// unreduced fractions never cross-multiply.

namespace detail {

/// 1 / (x - 1) as a factor list.
inline FactoredRational face_term_fr(const RationalFunction& x) {
    RationalFunction f = x - RationalFunction::integer(1);
    if (f.is_zero()) throw std::domain_error("face exponent equal to 1");
    FactoredRational r;
    r.multiply_factor(f.den(), 1);
    r.multiply_factor(f.num(), -1);
    return r;
}

inline FactoredRational segment_sum_fr(const RationalFunction& x, const RationalFunction& y) {
    std::array<FactoredRational, 3> ts{FactoredRational(BigRational(1)), face_term_fr(x),
                                       face_term_fr(y)};
    return fr_sum(ts);
}

inline FactoredRational pentagon_sum_fr(const std::array<RationalFunction, 5>& x) {
    std::vector<FactoredRational> ts;
    ts.emplace_back(BigRational(1));
    std::array<FactoredRational, 5> F;
    for (int i = 0; i < 5; ++i) {
        F[static_cast<std::size_t>(i)] = face_term_fr(x[static_cast<std::size_t>(i)]);
        ts.push_back(F[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < 5; ++i)
        ts.push_back(F[static_cast<std::size_t>(i)] * F[static_cast<std::size_t>((i + 1) % 5)]);
    return fr_sum(ts);
}

inline FactoredRational terada3_sum_fr(const std::array<RationalFunction, 3>& p,
                                       const std::array<RationalFunction, 3>& q,
                                       const std::array<RationalFunction, 3>& r) {
    auto at = [](const std::array<RationalFunction, 3>& v, int i) -> const RationalFunction& {
        return v[static_cast<std::size_t>(((i % 3) + 3) % 3)];
    };
    std::array<FactoredRational, 3> Fp, Fq, Fr;
    for (int i = 0; i < 3; ++i) {
        Fp[static_cast<std::size_t>(i)] = face_term_fr(p[static_cast<std::size_t>(i)]);
        Fq[static_cast<std::size_t>(i)] = face_term_fr(q[static_cast<std::size_t>(i)]);
        Fr[static_cast<std::size_t>(i)] = face_term_fr(r[static_cast<std::size_t>(i)]);
    }
    auto fp = [&](int i) { return Fp[static_cast<std::size_t>(((i % 3) + 3) % 3)]; };
    auto fq = [&](int i) { return Fq[static_cast<std::size_t>(((i % 3) + 3) % 3)]; };

    std::vector<FactoredRational> ts;
    ts.emplace_back(BigRational(1));
    for (int i = 0; i < 3; ++i)
        ts.push_back(Fr[static_cast<std::size_t>(i)] * segment_sum_fr(at(p, i), at(q, i + 1)) *
                     segment_sum_fr(at(p, i + 1), at(q, i)));
    for (int i = 0; i < 3; ++i) {
        ts.push_back(fp(i));
        ts.push_back(fq(i));
        ts.push_back(fp(i) * fp(i + 1));
        ts.push_back(fq(i) * fq(i + 1));
        ts.push_back(fp(i) * fq(i));
    }
    ts.push_back(Fp[0] * Fp[1] * Fp[2]);
    ts.push_back(Fq[0] * Fq[1] * Fq[2]);
    return fr_sum(ts);
}

}  // namespace detail

/// 1 / (x - 1), the contribution of a face with exponent x.
inline RationalFunction face_term(const RationalFunction& x) {
    return (x - RationalFunction::integer(1)).inverse();
}

/// Self-sum of a segment with end exponents x, y: 1 + F(x) + F(y).
inline RationalFunction segment_sum(const RationalFunction& x, const RationalFunction& y) {
    return detail::segment_sum_fr(x, y).expanded();
}

/// Self-sum of a pentagon with edge exponents x1..x5 in cyclic order:
/// 1 + singles + adjacent pairs (11 terms).
inline RationalFunction pentagon_sum(const std::array<RationalFunction, 5>& x) {
    return detail::pentagon_sum_fr(x).expanded();
}

/// Self-sum of a Terada-3 whose six pentagons carry exponents p_i, q_i and
/// whose three rectangles carry r_i (index arithmetic modulo 3); 45 terms.
inline RationalFunction terada3_sum(const std::array<RationalFunction, 3>& p,
                                    const std::array<RationalFunction, 3>& q,
                                    const std::array<RationalFunction, 3>& r) {
    return detail::terada3_sum_fr(p, q, r).expanded();
}

/// J_3 / 3! with independent diagonal exponents f, g, h: the two pentagon
/// terms, the rectangle term, the two segment terms and the chamber's own
/// (negated) face sum. Specializing f = h = g recovers jn_closed(3) / 3!.
inline RationalFunction j3_general(const Registry& reg) {
    auto mono = [&](std::initializer_list<std::pair<const char*, int>> vars) {
        Monomial m = Monomial::one();
        for (const auto& [name, e] : vars) m = m * Monomial::of(reg[name], e);
        return RationalFunction::monomial(m);
    };
    RationalFunction a = mono({{"a", 1}}), b = mono({{"b", 1}});
    RationalFunction f = mono({{"f", 1}}), g = mono({{"g", 1}}), h = mono({{"h", 1}});
    RationalFunction f2 = mono({{"f", 2}}), g2 = mono({{"g", 2}});
    RationalFunction fgh2 = mono({{"f", 2}, {"g", 2}, {"h", 2}});  // (fgh)^2
    RationalFunction a2f2 = mono({{"a", 2}, {"f", 2}});
    RationalFunction a3fgh2 = a.pow(3) * fgh2;
    RationalFunction b3fgh2 = b.pow(3) * fgh2;
    RationalFunction g2b2 = mono({{"g", 2}, {"b", 2}});
    RationalFunction fgh = f * g * h;

    auto F = detail::face_term_fr;
    auto as_factor = [](const RationalFunction& r) {
        FactoredRational fr;
        fr.multiply_factor(r.num(), 1);
        fr.multiply_factor(r.den(), -1);
        return fr;
    };
    std::vector<FactoredRational> terms;
    terms.push_back(as_factor(f) * F(f2) * detail::pentagon_sum_fr({b, a2f2, a3fgh2, fgh2, b3fgh2}));
    terms.push_back(as_factor(g) * F(g2) * detail::pentagon_sum_fr({a, g2b2, b3fgh2, fgh2, a3fgh2}));
    terms.push_back(as_factor(-fgh) * F(fgh2) * detail::segment_sum_fr(a3fgh2, b3fgh2) *
                    detail::segment_sum_fr(f2, g2));
    terms.push_back(as_factor(fgh * f) * F(fgh2) * F(f2) * detail::segment_sum_fr(a3fgh2, b3fgh2));
    terms.push_back(as_factor(fgh * g) * F(fgh2) * F(g2) * detail::segment_sum_fr(a3fgh2, b3fgh2));
    terms.push_back(FactoredRational(BigRational(-1)) *
                    detail::terada3_sum_fr({b3fgh2, b, f2}, {g2, a, a3fgh2}, {g2b2, a2f2, fgh2}));
    return fr_sum(terms).expanded();
}

}  // namespace terada::homology
