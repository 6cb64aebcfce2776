#pragma once

// Face combinatorics of the Terada-n polytope: canonical interval hyperfaces,
// laminar families indexing the faces, the multiplicative exponents attached
// to the hyperfaces, bracket values, chamber adjacency via block reversals,
// and juzu codes (cyclic words modulo rotation and reversal).

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "terada/rational.hpp"

namespace terada::polytope {

/// A consecutive run [lo..hi] of letters inside {0,...,n+1}. The full
/// interval [0..n+1] is excluded; every hyperface of the Terada-n has exactly
/// one such canonical representative (complement-coded faces are identified
/// away).
struct Interval {
    int lo, hi, n;

    Interval(int lo_, int hi_, int n_) : lo(lo_), hi(hi_), n(n_) {
        if (!(0 <= lo && lo < hi && hi <= n + 1)) throw std::domain_error("bad interval bounds");
        if (lo == 0 && hi == n + 1) throw std::domain_error("full interval is not a hyperface");
    }

    int size() const { return hi - lo + 1; }
    int span() const { return hi - lo; }  // the weight q entering signs and g-powers

    enum class Kind { Boundary0, Interior, BoundaryTop };

    Kind kind() const {
        if (lo == 0) return Kind::Boundary0;
        if (hi == n + 1) return Kind::BoundaryTop;
        return Kind::Interior;
    }

    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool disjoint_from(const Interval& o) const { return hi < o.lo || o.hi < lo; }

    /// The disjoint/include property for a pair.
    bool compatible(const Interval& o) const {
        return disjoint_from(o) || contains(o) || o.contains(*this);
    }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi && a.n == b.n;
    }

    std::string to_string() const {
        std::string s = "(";
        for (int v = lo; v <= hi; ++v) {
            if (v >= 10) s += "(" + std::to_string(v) + ")";
            else s += std::to_string(v);
        }
        return s + ")";
    }
};

/// A set of pairwise disjoint-or-nested intervals; indexes one face.
struct LaminarFamily {
    std::vector<Interval> members;

    bool is_laminar() const {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (members[i] == members[j]) return false;
                if (!members[i].compatible(members[j])) return false;
            }
        return true;
    }
};

/// Entry k = number of codimension-k faces (size-k laminar families);
/// entry 0 = 1, the polytope itself.
struct FVector {
    std::vector<long long> counts;
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// All canonical intervals for ambient rank n, ordered by (size, lo).
/// Count is C(n+2, 2) - 1.
inline std::vector<Interval> all_intervals(int n) {
    if (n < 1) throw std::domain_error("needs n >= 1");
    std::vector<Interval> iv;
    for (int size = 2; size <= n + 2; ++size)
        for (int lo = 0; lo + size - 1 <= n + 1; ++lo) {
            int hi = lo + size - 1;
            if (lo == 0 && hi == n + 1) continue;
            iv.emplace_back(lo, hi, n);
        }
    return iv;
}

/// Every subset of the (filtered) interval list with the pairwise
/// disjoint/include property, the empty family included. Deterministic
/// backtracking order over the canonical interval list.
inline std::vector<LaminarFamily> laminar_families(
    int n, const std::function<bool(const Interval&)>& filter = nullptr) {
    std::vector<Interval> iv;
    for (const Interval& I : all_intervals(n))
        if (!filter || filter(I)) iv.push_back(I);

    std::vector<LaminarFamily> out;
    std::vector<Interval> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == iv.size()) {
            out.push_back(LaminarFamily{chosen});
            return;
        }
        rec(idx + 1);
        for (const Interval& c : chosen)
            if (!c.compatible(iv[idx])) return;
        chosen.push_back(iv[idx]);
        rec(idx + 1);
        chosen.pop_back();
    };
    rec(0);
    return out;
}

inline FVector f_vector(int n) {
    FVector f;
    f.counts.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& fam : laminar_families(n)) {
        if (fam.members.size() >= f.counts.size()) f.counts.resize(fam.members.size() + 1, 0);
        ++f.counts[fam.members.size()];
    }
    return f;
}

/// Variables attached to the exponent data. Uniform mode carries the single
/// diagonal variable g; the general 3D mode carries f, g, h.
struct ExponentAssignment {
    enum class Mode { UniformG, General3D };

    Var a_var, b_var;
    std::vector<Var> diag_vars;
    Mode mode = Mode::UniformG;

    static ExponentAssignment uniform(const Registry& reg) {
        return {reg["a"], reg["b"], {reg["g"]}, Mode::UniformG};
    }

    static ExponentAssignment general3(const Registry& reg) {
        return {reg["a"], reg["b"], {reg["f"], reg["g"], reg["h"]}, Mode::General3D};
    }

    Var g() const { return diag_vars.size() == 1 ? diag_vars[0] : diag_vars[1]; }
};

/// Multiplicative exponent along a hyperface, uniform-g mode. With
/// k = size - 1: boundary-0 faces carry a^k g^(k(k-1)), interior faces
/// g^(k(k+1)), boundary-top faces b^k g^(k(k-1)). Always a single monomial
/// with coefficient 1.
inline LaurentPolynomial exponent_of(const Interval& I, const ExponentAssignment& assign) {
    if (assign.mode != ExponentAssignment::Mode::UniformG)
        throw std::domain_error("exponent_of requires the uniform-g assignment");
    int k = I.span();
    Monomial m;
    switch (I.kind()) {
        case Interval::Kind::Boundary0:
            m = Monomial::of(assign.a_var, k) * Monomial::of(assign.g(), k * (k - 1));
            break;
        case Interval::Kind::Interior:
            m = Monomial::of(assign.g(), k * (k + 1));
            break;
        case Interval::Kind::BoundaryTop:
            m = Monomial::of(assign.b_var, k) * Monomial::of(assign.g(), k * (k - 1));
            break;
    }
    return LaurentPolynomial::monomial(m);
}

/// Square bracket of a hyperface: 1 / (exponent - 1).
inline RationalFunction bracket(const Interval& I, const ExponentAssignment& assign) {
    return {LaurentPolynomial::one(), exponent_of(I, assign) - LaurentPolynomial::one()};
}

/// Numerator of the crossing factor 1 + (-1)^q g^C(q+1,2) for an interior
/// interval of span q.
inline LaurentPolynomial crossing_factor(const Interval& I, const ExponentAssignment& assign) {
    int q = I.span();
    BigInt sign = (q % 2 == 0) ? 1 : -1;
    return LaurentPolynomial::one() +
           LaurentPolynomial::monomial(Monomial::of(assign.g(), q * (q + 1) / 2), sign);
}

/// Angle bracket of an interior interval: [I] (1 + (-1)^q g^C(q+1,2)),
/// returned in the closed form -1 / (1 - (-1)^q g^C(q+1,2)).
inline RationalFunction angle_bracket(const Interval& I, const ExponentAssignment& assign) {
    if (I.kind() != Interval::Kind::Interior)
        throw std::domain_error("angle bracket requires an interior interval");
    int q = I.span();
    BigInt sign = (q % 2 == 0) ? 1 : -1;
    LaurentPolynomial den =
        LaurentPolynomial::one() -
        LaurentPolynomial::monomial(Monomial::of(assign.g(), q * (q + 1) / 2), sign);
    return {LaurentPolynomial::constant(-1), std::move(den)};
}

/// Defining product form of the angle bracket, for cross-checks.
inline RationalFunction angle_bracket_defining(const Interval& I, const ExponentAssignment& assign) {
    if (I.kind() != Interval::Kind::Interior)
        throw std::domain_error("angle bracket requires an interior interval");
    return bracket(I, assign) * RationalFunction(crossing_factor(I, assign));
}

/// Word of {1..n} obtained from the identity by reversing, for each member
/// interval, the contiguous block of letters whose letter set is that
/// interval. Members are processed innermost first; for a laminar family the
/// result is independent of the processing order.
inline std::vector<int> adjacent_sigma(const LaminarFamily& F, int n) {
    for (const Interval& I : F.members)
        if (I.kind() != Interval::Kind::Interior)
            throw std::domain_error("adjacency requires interior intervals");
    std::vector<Interval> order = F.members;
    std::stable_sort(order.begin(), order.end(),
                     [](const Interval& a, const Interval& b) { return a.size() < b.size(); });
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    for (const Interval& I : order) {
        auto in = [&](int letter) { return I.lo <= letter && letter <= I.hi; };
        auto first = std::find_if(word.begin(), word.end(), in);
        auto last = first;
        for (auto it = first; it != word.end(); ++it)
            if (in(*it)) last = it;
        for (auto it = first; it != last; ++it)
            if (!in(*it)) throw std::logic_error("interval letters not contiguous in word");
        std::reverse(first, last + 1);
    }
    return word;
}

struct Neighbor {
    std::vector<int> word;  // sigma as the word sigma(1)...sigma(n)
    std::vector<LaminarFamily> families;
};

/// For every nonempty interior laminar family F, the pair
/// (adjacent_sigma(F), F), grouped by the resulting permutation and sorted by
/// word.
inline std::vector<Neighbor> touching_neighbors(int n) {
    auto interior = [](const Interval& I) { return I.kind() == Interval::Kind::Interior; };
    std::vector<Neighbor> out;
    for (const auto& F : laminar_families(n, interior)) {
        if (F.members.empty()) continue;
        std::vector<int> word = adjacent_sigma(F, n);
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Neighbor& nb) { return nb.word == word; });
        if (it == out.end()) out.push_back({std::move(word), {F}});
        else it->families.push_back(F);
    }
    std::sort(out.begin(), out.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.word < b.word; });
    return out;
}

/// An equivalence class of words of the letters 0..n+2 under cyclic rotation
/// and reversal, stored by its lexicographically least representative.
class Juzu {
public:
    explicit Juzu(std::vector<int> word) : word_(canonicalize(std::move(word))) {}

    const std::vector<int>& word() const { return word_; }

    friend bool operator==(const Juzu&, const Juzu&) = default;
    friend bool operator<(const Juzu& a, const Juzu& b) { return a.word_ < b.word_; }

    /// Digit string; letters >= 10 rendered in parentheses.
    std::string to_string() const {
        std::string s;
        for (int v : word_) {
            if (v >= 10) s += "(" + std::to_string(v) + ")";
            else s += std::to_string(v);
        }
        return s;
    }

private:
    static std::vector<int> canonicalize(std::vector<int> w) {
        std::size_t m = w.size();
        if (m == 0) throw std::domain_error("empty juzu word");
        std::vector<bool> seen(m, false);
        for (int v : w) {
            if (v < 0 || static_cast<std::size_t>(v) >= m || seen[static_cast<std::size_t>(v)])
                throw std::domain_error("juzu word is not a permutation of 0..n+2");
            seen[static_cast<std::size_t>(v)] = true;
        }
        std::vector<int> best = w;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t r = 0; r < m; ++r) {
                std::vector<int> cand(m);
                for (std::size_t i = 0; i < m; ++i) cand[i] = w[(i + r) % m];
                if (cand < best) best = cand;
            }
            std::reverse(w.begin(), w.end());
        }
        return best;
    }

    std::vector<int> word_;
};

inline Juzu juzu_canonical(const std::vector<int>& word) { return Juzu(word); }

/// Juzu code of the chamber given by the word sigma(1)...sigma(n).
inline Juzu chamber_juzu(const std::vector<int>& word, int n) {
    std::vector<int> full;
    full.reserve(static_cast<std::size_t>(n) + 3);
    full.push_back(0);
    full.insert(full.end(), word.begin(), word.end());
    full.push_back(n + 1);
    full.push_back(n + 2);
    return Juzu(std::move(full));
}

/// Juzus of the chambers not touching the reference chamber.
inline std::vector<Juzu> non_touching_juzus(int n) {
    std::vector<std::vector<int>> touching;
    for (const auto& nb : touching_neighbors(n)) touching.push_back(nb.word);
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Juzu> out;
    std::vector<int> identity = word;
    do {
        if (word == identity) continue;
        if (std::find(touching.begin(), touching.end(), word) == touching.end())
            out.push_back(chamber_juzu(word, n));
    } while (std::next_permutation(word.begin(), word.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace terada::polytope
