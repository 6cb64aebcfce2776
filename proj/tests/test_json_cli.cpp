#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "terada/cli.hpp"
#include "test_support.hpp"

using namespace terada;
using nlohmann::json;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("polynomial and rational JSON round-trip", "[json][property]") {
    Registry reg = Registry::standard();
    std::mt19937_64 rng(5);
    std::vector<Var> vars{reg["a"], reg["b"], reg["g"]};
    for (int i = 0; i < 100; ++i) {
        RationalFunction r = test_support::random_rational(rng, vars);
        json j = json_io::rational_to_json(r, reg);
        json reparsed = json::parse(j.dump());
        RationalFunction back = json_io::rational_from_json(reparsed, reg);
        CHECK(back == r);
    }
}

TEST_CASE("term JSON carries decimal coefficients and sparse exponents", "[json]") {
    Registry reg = Registry::standard();
    LaurentPolynomial p =
        LaurentPolynomial::monomial(Monomial::of(reg["a"]) * Monomial::of(reg["g"], -2),
                                    BigInt("123456789012345678901234567890")) -
        LaurentPolynomial::one();
    json j = json_io::poly_to_json(p, reg);
    REQUIRE(j.size() == 2);
    // a*g^-2 has graded degree -1, so the constant term leads
    CHECK(j[0]["coeff"] == "-1");
    CHECK(j[0]["exps"].empty());
    CHECK(j[1]["coeff"] == "123456789012345678901234567890");
    CHECK(j[1]["exps"]["a"] == 1);
    CHECK(j[1]["exps"]["g"] == -2);
}

TEST_CASE("face-vector JSON", "[json][cli]") {
    std::string out;
    REQUIRE(run_cli({"faces", "--n", "3", "--json"}, &out) == 0);
    json j = json::parse(out);
    CHECK(j["n"] == 3);
    CHECK(j["fvector"] == json::array({1, 9, 21, 14}));
}

TEST_CASE("jn subcommand", "[cli]") {
    std::string out;
    REQUIRE(run_cli({"jn", "--n", "2"}, &out) == 0);
    CHECK(out.find("J_2") != std::string::npos);

    REQUIRE(run_cli({"jn", "--n", "2", "--check", "--json"}, &out) == 0);
    json j = json::parse(out);
    CHECK(j["n"] == 2);
    CHECK(j["equal"] == true);
    CHECK(j["term_count"] == 11);
    Registry reg = Registry::standard();
    RationalFunction enumerated = json_io::rational_from_json(j["enumerated"], reg);
    auto assign = polytope::ExponentAssignment::uniform(reg);
    CHECK(rat_eq(enumerated, homology::jn_enumerated(2, assign)));
}

TEST_CASE("neighbors subcommand reports the non-touching chambers", "[cli]") {
    std::string out;
    REQUIRE(run_cli({"neighbors", "--n", "4"}, &out) == 0);
    CHECK(out.find("0241356") != std::string::npos);
    CHECK(out.find("0314256") != std::string::npos);
    REQUIRE(run_cli({"neighbors", "--n", "3"}, &out) == 0);
    CHECK(out.find("touches 5 chambers") != std::string::npos);
}

TEST_CASE("cohomology subcommand", "[cli]") {
    std::string out;
    REQUIRE(run_cli({"cohomology", "--n", "3", "--check", "--json"}, &out) == 0);
    json j = json::parse(out);
    CHECK(j["n"] == 3);
    CHECK(j["two_pi_i_power"] == 3);
    CHECK(j["equal"] == true);
}

TEST_CASE("qcheck subcommand", "[cli]") {
    std::string out;
    CHECK(run_cli({"qcheck", "--n-max", "3"}, &out) == 0);
    CHECK(out.find("FAIL") == std::string::npos);
}

TEST_CASE("reciprocity subcommand", "[cli]") {
    std::string out;
    REQUIRE(run_cli({"reciprocity", "--n", "1", "--alpha", "0.3", "--beta", "0.4", "--gamma", "0.1",
                     "--json"},
                    &out) == 0);
    json j = json::parse(out);
    CHECK(j["n"] == 1);
    CHECK(j["params"].size() == 3);
    CHECK(j["residual"].get<double>() < 1e-10);
    CHECK(j.contains("seed"));

    REQUIRE(run_cli({"reciprocity", "--n", "2", "--draws", "3", "--seed", "11", "--json"}, &out) == 0);
    json arr = json::parse(out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 3);
    for (const auto& rep : arr) CHECK(rep["residual"].get<double>() < 1e-8);
}

TEST_CASE("exit codes", "[cli]") {
    std::string out, err;
    CHECK(run_cli({"unknown-subcommand"}, &out, &err) == cli::kExitBadFlags);
    CHECK(run_cli({"jn"}, &out, &err) == cli::kExitBadFlags);  // missing --n
    CHECK(run_cli({"jn", "--n", "7"}, &out, &err) == cli::kExitBadFlags);  // cap without --force
    CHECK(run_cli({"faces", "--n", "7", "--force"}, &out, &err) == 0);
    // a parameter set on a Gamma pole of the reflected side
    CHECK(run_cli({"reciprocity", "--n", "2", "--alpha", "1.0", "--beta", "0.4", "--gamma", "0.2"},
                  &out, &err) == cli::kExitPoleMargin);
}

TEST_CASE("verify subcommand aggregates the suites", "[cli]") {
    std::string out;
    CHECK(run_cli({"verify", "--n-max", "2"}, &out) == 0);
    CHECK(out.find("FAIL") == std::string::npos);
    CHECK(out.find("qseries") != std::string::npos);
}
