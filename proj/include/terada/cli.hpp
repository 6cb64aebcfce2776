#pragma once

// Command-line front end. One subcommand per invocation; exit codes:
//   0 success, 1 verification failure, 2 malformed flags, 3 pole-margin
//   violation.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "terada/json_io.hpp"

namespace terada::cli {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitPoleMargin = 3;

namespace detail {

inline bool enumeration_cap(int n, bool force, std::ostream& err) {
    if (n > 6 && !force) {
        err << "n > 6 enumerates a very large face lattice; pass --force to proceed\n";
        return false;
    }
    return true;
}

inline int run_jn(int n, bool check, bool as_json, std::ostream& out) {
    Registry reg = Registry::standard();
    auto assign = polytope::ExponentAssignment::uniform(reg);
    homology::JnReport rep = homology::jn_report(n, assign, check);
    if (as_json) {
        out << json_io::jn_report_to_json(rep, reg, check).dump() << "\n";
    } else {
        out << "J_" << n << " = " << rep.closed.constant() << " * product of:\n";
        for (const auto& f : rep.closed.factors())
            out << "  (" << f.poly.to_string(reg) << ")^" << f.multiplicity << "\n";
        if (check) {
            out << "face enumeration: " << rep.term_count << " families, "
                << (rep.equal ? "matches" : "MISMATCH") << "\n";
        }
    }
    return (!check || rep.equal) ? kExitOk : kExitVerificationFailed;
}

inline int run_faces(int n, bool as_json, std::ostream& out) {
    polytope::FVector f = polytope::f_vector(n);
    if (as_json) {
        out << json_io::fvector_to_json(n, f).dump() << "\n";
    } else {
        out << "f-vector of Terada-" << n << ":";
        for (auto c : f.counts) out << " " << c;
        out << "\n";
    }
    return kExitOk;
}

inline int run_neighbors(int n, std::ostream& out) {
    auto neighbors = polytope::touching_neighbors(n);
    out << "Terada-" << n << " touches " << neighbors.size() << " chambers:\n";
    for (const auto& nb : neighbors) {
        out << "  ";
        for (int v : nb.word) out << v;
        out << "  (juzu " << polytope::chamber_juzu(nb.word, n).to_string() << ", via";
        for (const auto& fam : nb.families) {
            out << " {";
            for (std::size_t i = 0; i < fam.members.size(); ++i)
                out << (i ? "," : "") << fam.members[i].to_string();
            out << "}";
        }
        out << ")\n";
    }
    auto non_touching = polytope::non_touching_juzus(n);
    if (!non_touching.empty()) {
        out << "non-touching juzus:";
        for (const auto& j : non_touching) out << " " << j.to_string();
        out << "\n";
    }
    return kExitOk;
}

inline int run_cohomology(int n, bool check, bool as_json, std::ostream& out) {
    Registry reg = Registry::standard();
    auto assign = cohomology::AdditiveAssignment::standard(reg);
    auto closed = cohomology::omega_closed_factored(n, assign);
    bool equal = true;
    cohomology::TwoPiPower vertex_sum{n, RationalFunction()};
    if (check) {
        vertex_sum = cohomology::omega_self_intersection(n, assign);
        equal = rat_eq(vertex_sum.rational_part, closed.expanded());
    }
    if (as_json) {
        out << json_io::cohomology_report_to_json(n, vertex_sum, closed, equal, reg, check).dump()
            << "\n";
    } else {
        out << "omega self-intersection = (2*pi*i)^" << n << " * product of:\n";
        for (const auto& f : closed.factors())
            out << "  (" << f.poly.to_string(reg) << ")^" << f.multiplicity << "\n";
        if (check)
            out << "vertex sum over " << n + 1 << " admissible vertices: "
                << (equal ? "matches" : "MISMATCH") << "\n";
    }
    return equal ? kExitOk : kExitVerificationFailed;
}

inline int run_qcheck(int n_max, std::ostream& out) {
    Registry reg = Registry::standard();
    qseries::QContext gctx{reg["g"]}, qctx{reg["q"]};
    bool all = true;
    auto line = [&](const std::string& name, int n, bool ok) {
        out << (ok ? "ok  " : "FAIL") << "  " << name << " n=" << n << "\n";
        all = all && ok;
    };
    for (int n = 1; n <= n_max; ++n)
        line("alternating g-binomial sum", n, qseries::verify_g_binomial_alternating(n, gctx));
    for (int n = 1; n <= n_max; ++n)
        line("q-Chu-Vandermonde (both forms)", n,
             qseries::verify_q_chu_vandermonde(n, reg["b"], reg["c"], qctx));
    for (int n = 1; n <= n_max; ++n)
        line("sum reversal", n,
             qseries::verify_reversal_identity(n, reg["b"], reg["c"], reg["x"], qctx));
    for (int n = 1; n <= n_max; ++n)
        line("classical Chu-Vandermonde", n,
             qseries::verify_classical_chu_vandermonde(n, reg["beta"], reg["gamma"]));
    return all ? kExitOk : kExitVerificationFailed;
}

inline int run_reciprocity(int n, double alpha, double beta, double gamma, std::uint64_t seed,
                           int draws, bool as_json, std::ostream& out) {
    using selberg::SelbergParams;
    std::vector<SelbergParams> params;
    if (draws > 0) params = selberg::draw_params(n, draws, seed);
    else params.push_back(SelbergParams{n, alpha, beta, gamma});

    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : params) {
        double r = selberg::reciprocity_residual(p);
        if (as_json) {
            arr.push_back(json_io::reciprocity_report_to_json(p, r, seed));
        } else {
            out << "n=" << p.n << " alpha=" << p.alpha << " beta=" << p.beta << " gamma=" << p.gamma
                << " residual=" << r << " seed=" << seed << "\n";
        }
    }
    if (as_json) out << (draws > 0 ? arr : arr.front()).dump() << "\n";
    return kExitOk;
}

inline int run_verify(int n_max, bool force, std::ostream& out, std::ostream& err) {
    if (!enumeration_cap(n_max, force, err)) return kExitBadFlags;
    Registry reg = Registry::standard();
    auto assign = polytope::ExponentAssignment::uniform(reg);
    auto add_assign = cohomology::AdditiveAssignment::standard(reg);
    bool all = true;
    auto line = [&](const std::string& name, bool ok) {
        out << (ok ? "ok  " : "FAIL") << "  " << name << "\n";
        all = all && ok;
    };

    for (int n = 1; n <= n_max; ++n) {
        auto rep = homology::jn_report(n, assign);
        line("homology: enumerated self-intersection matches closed form, n=" + std::to_string(n),
             rep.equal);
    }
    for (int n = 1; n <= n_max; ++n)
        line("homology: A/X/B decomposition matches enumeration, n=" + std::to_string(n),
             rat_eq(homology::jn_decomposed(n, assign), homology::jn_enumerated(n, assign)));
    for (int n = 1; n <= n_max; ++n) {
        bool ok = rat_eq(homology::x_monomial_sum(n, n, assign),
                         homology::x_closed(n, assign).expanded()) &&
                  rat_eq(homology::y_monomial_sum(n, n, assign),
                         homology::y_closed(n, assign).expanded());
        line("homology: X/Y closed forms, n=" + std::to_string(n), ok);
    }
    {
        auto a_seq = homology::a_recursive_sequence(std::min(n_max, 6), assign);
        auto b_seq = homology::b_recursive_sequence(std::min(n_max, 6), assign);
        bool ok = true;
        for (int k = 1; k < static_cast<int>(a_seq.size()); ++k) {
            ok = ok && rat_eq(a_seq[static_cast<std::size_t>(k)],
                              homology::a_closed(k, assign).expanded());
            ok = ok && rat_eq(b_seq[static_cast<std::size_t>(k)],
                              homology::b_closed(k, assign).expanded());
        }
        line("homology: head-sum recursion matches closed form", ok);
    }
    if (n_max >= 3) {
        std::map<Var, Monomial> sub{{reg["f"], Monomial::of(reg["g"])},
                                    {reg["h"], Monomial::of(reg["g"])}};
        line("homology: general 3D expression specializes to uniform g",
             rat_eq(homology::j3_general(reg).substitute(sub), homology::jn_enumerated(3, assign)));
    }
    for (int n = 1; n <= n_max; ++n)
        line("cohomology: vertex sum matches closed product, n=" + std::to_string(n),
             cohomology::verify_theorem2(n, add_assign));
    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        Registry reg_beta = Registry::standard();
        RationalFunction simplex = cohomology::beta_n_simplex_self(n, reg_beta);
        RationalFunction prod_num = RationalFunction::integer(1);
        RationalFunction prod_den = RationalFunction::integer(1);
        for (int i = 0; i <= n; ++i) {
            auto ai = RationalFunction::variable(reg_beta["a" + std::to_string(i)]);
            prod_num = prod_num * ai;
            prod_den = prod_den * (RationalFunction::integer(1) - ai);
        }
        bool ok = rat_eq(simplex, (RationalFunction::integer(1) - prod_num) / prod_den);
        line("cohomology: n-beta simplex sum, n=" + std::to_string(n), ok);
    }
    {
        qseries::QContext gctx{reg["g"]}, qctx{reg["q"]};
        bool ok = true;
        for (int n = 1; n <= std::max(n_max, 4); ++n) {
            ok = ok && qseries::verify_g_binomial_alternating(n, gctx);
            ok = ok && qseries::verify_q_chu_vandermonde(n, reg["b"], reg["c"], qctx);
            ok = ok && qseries::verify_reversal_identity(n, reg["b"], reg["c"], reg["x"], qctx);
            ok = ok && qseries::verify_classical_chu_vandermonde(n, reg["beta"], reg["gamma"]);
        }
        line("qseries: identity suite", ok);
    }
    return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact intersection numbers of twisted cycles on Terada polytopes"};
    app.require_subcommand(1);

    int n = 2;
    int n_max = 4;
    bool check = false, as_json = false, force = false;
    double alpha = 0.3, beta = 0.4, gamma = 0.1;
    std::uint64_t seed = 20240601;
    int draws = 0;

    auto* jn = app.add_subcommand("jn", "closed-form self-intersection of the loaded chamber sum");
    jn->add_option("--n", n, "dimension")->required();
    jn->add_flag("--check", check, "also run the face enumeration and compare");
    jn->add_flag("--json", as_json, "JSON output");
    jn->add_flag("--force", force, "allow n > 6");

    auto* faces = app.add_subcommand("faces", "f-vector of the Terada-n face lattice");
    faces->add_option("--n", n, "dimension")->required();
    faces->add_flag("--json", as_json, "JSON output");
    faces->add_flag("--force", force, "allow n > 6");

    auto* neighbors = app.add_subcommand("neighbors", "chambers touching the reference chamber");
    neighbors->add_option("--n", n, "dimension")->required();
    neighbors->add_flag("--force", force, "allow n > 6");

    auto* coh = app.add_subcommand("cohomology", "self-intersection of the logarithmic form");
    coh->add_option("--n", n, "dimension")->required();
    coh->add_flag("--check", check, "also run the vertex sum and compare");
    coh->add_flag("--json", as_json, "JSON output");

    auto* qcheck = app.add_subcommand("qcheck", "verify the q-identity suite");
    qcheck->add_option("--n-max", n_max, "largest n to check")->required();

    auto* rec = app.add_subcommand("reciprocity", "numeric reciprocity residual");
    rec->add_option("--n", n, "dimension")->required();
    rec->add_option("--alpha", alpha, "alpha");
    rec->add_option("--beta", beta, "beta");
    rec->add_option("--gamma", gamma, "gamma");
    rec->add_option("--seed", seed, "seed for random draws");
    rec->add_option("--draws", draws, "number of random draws (0: use explicit parameters)");
    rec->add_flag("--json", as_json, "JSON output");

    auto* verify = app.add_subcommand("verify", "full verification suite");
    verify->add_option("--n-max", n_max, "largest n to check")->required();
    verify->add_flag("--force", force, "allow n-max > 6");

    std::vector<const char*> argv;
    argv.push_back("terada");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitBadFlags;
    }

    try {
        if (jn->parsed()) {
            if (!detail::enumeration_cap(n, force, err)) return kExitBadFlags;
            return detail::run_jn(n, check, as_json, out);
        }
        if (faces->parsed()) {
            if (!detail::enumeration_cap(n, force, err)) return kExitBadFlags;
            return detail::run_faces(n, as_json, out);
        }
        if (neighbors->parsed()) {
            if (!detail::enumeration_cap(n, force, err)) return kExitBadFlags;
            return detail::run_neighbors(n, out);
        }
        if (coh->parsed()) return detail::run_cohomology(n, check, as_json, out);
        if (qcheck->parsed()) return detail::run_qcheck(n_max, out);
        if (rec->parsed()) return detail::run_reciprocity(n, alpha, beta, gamma, seed, draws, as_json, out);
        if (verify->parsed()) return detail::run_verify(n_max, force, out, err);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        std::string what = e.what();
        if (what.find("pole") != std::string::npos || what.find("underflow") != std::string::npos)
            return kExitPoleMargin;
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitBadFlags;
}

}  // namespace terada::cli
