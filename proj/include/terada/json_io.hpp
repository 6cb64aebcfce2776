#pragma once

// JSON forms for the symbolic values and the CLI reports. Polynomials are
// arrays of terms {"coeff": "<decimal>", "exps": {"a": 1, "g": -2}} in
// canonical order; rational functions are {"num": [...], "den": [...]}.

#include <json.hpp>

#include "terada/cohomology.hpp"
#include "terada/homology.hpp"
#include "terada/polytope.hpp"
#include "terada/selberg.hpp"

namespace terada::json_io {

using nlohmann::json;

inline json poly_to_json(const LaurentPolynomial& p, const Registry& reg) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json exps = json::object();
        for (const auto& vp : t.mono) exps[reg.name(Var{vp.var})] = vp.exp;
        terms.push_back({{"coeff", t.coeff.str()}, {"exps", std::move(exps)}});
    }
    return terms;
}

inline json rational_to_json(const RationalFunction& r, const Registry& reg) {
    return {{"num", poly_to_json(r.num(), reg)}, {"den", poly_to_json(r.den(), reg)}};
}

inline LaurentPolynomial poly_from_json(const json& j, Registry& reg) {
    std::vector<LaurentPolynomial::Term> terms;
    for (const auto& t : j) {
        Monomial m = Monomial::one();
        for (const auto& [name, exp] : t.at("exps").items())
            m = m * Monomial::of(reg.declare(name), exp.get<std::int32_t>());
        terms.push_back({std::move(m), BigInt(t.at("coeff").get<std::string>())});
    }
    return LaurentPolynomial::from_terms(std::move(terms));
}

inline RationalFunction rational_from_json(const json& j, Registry& reg) {
    return {poly_from_json(j.at("num"), reg), poly_from_json(j.at("den"), reg)};
}

inline json factors_to_json(const FactoredRational& f, const Registry& reg) {
    json out = json::array();
    for (const auto& fac : f.factors())
        out.push_back(json::array({fac.poly.to_string(reg), fac.multiplicity}));
    return out;
}

inline json fvector_to_json(int n, const polytope::FVector& f) {
    return {{"n", n}, {"fvector", f.counts}};
}

inline json jn_report_to_json(const homology::JnReport& r, const Registry& reg,
                              bool with_enumeration = true) {
    json j{{"n", r.n},
           {"closed_constant", r.closed.constant().str()},
           {"closed_factors", factors_to_json(r.closed, reg)}};
    if (with_enumeration) {
        j["equal"] = r.equal;
        j["enumerated"] = rational_to_json(r.enumerated, reg);
        j["term_count"] = r.term_count;
    }
    return j;
}

inline json cohomology_report_to_json(int n, const cohomology::TwoPiPower& vertex_sum,
                                      const FactoredRational& closed, bool equal,
                                      const Registry& reg, bool with_vertex_sum = true) {
    json j{{"n", n},
           {"two_pi_i_power", n},
           {"closed_factors", factors_to_json(closed, reg)}};
    if (with_vertex_sum) {
        j["equal"] = equal;
        j["vertex_sum"] = rational_to_json(vertex_sum.rational_part, reg);
    }
    return j;
}

inline json reciprocity_report_to_json(const selberg::SelbergParams& p, double residual,
                                       std::uint64_t seed) {
    return {{"n", p.n},
            {"params", {p.alpha, p.beta, p.gamma}},
            {"residual", residual},
            {"seed", seed}};
}

}  // namespace terada::json_io
