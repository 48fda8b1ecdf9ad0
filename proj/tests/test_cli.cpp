#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(SCHSYM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, got);
    int st = pclose(f);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

nlohmann::json run_json(const std::string& args) {
    RunResult r = run_cli(args + " --format json");
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("count subcommand reports bounds in both formats") {
    nlohmann::json j = run_json("count --n 3 --q 2");
    CHECK(j["command"] == "count");
    CHECK(j["n"] == 3);
    CHECK(j["q"] == 2);
    CHECK(j["convention"] == "L = i*dt - 1/2*((p-e*A)^2 + V)");
    CHECK(j["counts"]["N_hat"] == 50);
    CHECK(j["counts"]["N_tilde"] == 27);
    CHECK(j["counts"]["S"].size() == 3);
    CHECK(j["counts"]["K"].size() == 3);
    CHECK(j["dimension"] == 0);
    CHECK(j["basis"].is_array());
    CHECK(j["basis"].empty());
    CHECK(j["bounds"]["D"].is_null());

    RunResult text = run_cli("count --n 3 --q 2");
    CHECK(text.code == 0);
    CHECK(text.out.find("convention: L = i*dt - 1/2*((p-e*A)^2 + V)") != std::string::npos);
    CHECK(text.out.find("N_hat(3,2) = 50") != std::string::npos);
    CHECK(text.out.find("N_tilde(3,2) = 27") != std::string::npos);
}

TEST_CASE("count flags dimensions beyond the proven range") {
    nlohmann::json j = run_json("count --n 5 --q 1");
    CHECK(j["outside_proven_range"] == true);
    CHECK(j["counts"]["outside_proven_range"] == true);

    RunResult text = run_cli("count --n 5 --q 1");
    CHECK(text.out.find("outside the proven range") != std::string::npos);
}

TEST_CASE("solve subcommand finds the free-particle symmetries") {
    nlohmann::json j = run_json("solve --n 1 --q 1");
    CHECK(j["command"] == "solve");
    CHECK(j["dimension"] == 3);
    CHECK(j["basis"].size() == j["dimension"].get<size_t>());
    CHECK(j["bounds"]["D"] == 2);       // default q+1
    CHECK(j["bounds"]["M"] == 2);       // default N_hat - 1
    CHECK(j["bounds"]["saturated"] == true);
    CHECK(j["counts"]["N_hat"] == 3);
    for (const auto& op : j["basis"]) CHECK(op.contains("branches"));

    RunResult text = run_cli("solve --n 1 --q 1");
    CHECK(text.code == 0);
    CHECK(text.out.find("dimension = 3") != std::string::npos);
    CHECK(text.out.find("Q[0] = ") != std::string::npos);
    CHECK(text.out.find("saturated at D+1: yes") != std::string::npos);
}

TEST_CASE("solve honors explicit bounds potential and verification flags") {
    nlohmann::json j = run_json("solve --n 1 --q 2 --potential x1^4 --D 4 --M 2");
    CHECK(j["dimension"] == 2);  // span{1, H}
    CHECK(j["bounds"]["D"] == 4);
    CHECK(j["bounds"]["M"] == 2);

    nlohmann::json ti = run_json("solve --n 2 --q 1 --time-independent --D 2");
    CHECK(ti["dimension"] == 4);  // 1, two momenta, one rotation
    CHECK(ti["bounds"]["M"] == 0);

    nlohmann::json nv = run_json("solve --n 1 --q 1 --no-verify");
    CHECK(nv["dimension"] == 3);
}

TEST_CASE("killing subcommand reports the tensor basis") {
    nlohmann::json j = run_json("killing --n 2 --j 1 --p 1");
    CHECK(j["command"] == "killing");
    CHECK(j["j"] == 1);
    CHECK(j["p"] == 1);
    CHECK(j["q"] == 1);  // q = j + p - 1
    CHECK(j["dimension"] == 3);
    CHECK(j["expected_count"] == 3);
    CHECK(j["bounds"]["D"] == 1);
    CHECK(j["bounds"]["saturated"] == true);
    CHECK(j["basis"].size() == 3);

    nlohmann::json j2 = run_json("killing --n 3 --j 2 --p 1");
    CHECK(j2["dimension"] == 20);

    RunResult text = run_cli("killing --n 2 --j 1 --p 1");
    CHECK(text.code == 0);
    CHECK(text.out.find("dimension = 3") != std::string::npos);
    CHECK(text.out.find("F[") != std::string::npos);
}

TEST_CASE("determine subcommand prints the symbolic system") {
    RunResult text = run_cli("determine --n 1 --q 1");
    CHECK(text.code == 0);
    CHECK(text.out.find("d1^2: (1)*d1*b[1] = 0") != std::string::npos);
    CHECK(text.out.find("(i)*dt*b[0]") != std::string::npos);

    nlohmann::json j = run_json("determine --n 1 --q 1");
    CHECK(j["equations"].size() == 3);
    CHECK(j["dimension"] == 0);

    nlohmann::json osc = run_json("determine --n 1 --q 1 --potential x1^2");
    CHECK(osc["equations"].size() >= 3);
}

TEST_CASE("spectral subcommand analyzes the harmonic oscillator") {
    nlohmann::json j = run_json("spectral --n 1 --q 1 --potential x1^2");
    CHECK(j["command"] == "spectral");
    CHECK(j["dimension"] == 3);
    CHECK(j["analysis"]["invariant_dimension"] == 3);
    CHECK(j["analysis"]["space_dimension"] == 6);
    CHECK(j["verdict"]["has_time_dependent"] == true);
    CHECK(j["verdict"]["case1"].size() == 2);
    CHECK(j["verdict"]["witnesses_unavailable"] == false);
    CHECK(j["chains"].size() == 3);
    CHECK(j["bounds"]["saturated"] == true);

    RunResult text = run_cli("spectral --n 1 --q 1 --potential x1^2");
    CHECK(text.code == 0);
    CHECK(text.out.find("time-dependent symmetries exist: yes") != std::string::npos);
    CHECK(text.out.find("case-1 witness: exp(i*t)*(") != std::string::npos);

    // The x^4 well has no time-dependent symmetries at this order.
    nlohmann::json quart = run_json("spectral --n 1 --q 2 --potential x1^4 --D 4");
    CHECK(quart["verdict"]["has_time_dependent"] == false);
}

TEST_CASE("vector potentials and charge flow through the command line") {
    nlohmann::json j = run_json(
        "solve --n 2 --q 1 \"--vector-potential=-1/2*x2\" \"--vector-potential=1/2*x1\" "
        "--charge 1 --D 2 --M 2");
    CHECK(j["dimension"].get<int>() >= 4);
    CHECK(j["dimension"].get<int>() <= 6);
}

TEST_CASE("failures map to exit code one") {
    CHECK(run_cli("").code == 1);                                // missing subcommand
    CHECK(run_cli("count --n 0").code == 1);                     // validator
    CHECK(run_cli("count --bogus-flag").code == 1);              // unknown flag
    CHECK(run_cli("solve --n 1 --q 1 --potential x3").code == 1);  // parse error
    CHECK(run_cli("solve --n 1 --q 1 --potential \"x1 +\"").code == 1);
    CHECK(run_cli("spectral --n 1 --q 1 --potential t*x1").code == 1);  // t-dependent
    CHECK(run_cli("solve --n 2 --q 1 --vector-potential x2").code == 1);  // one component missing
    CHECK(run_cli("solve --n 1 --q 1 --charge x1").code == 1);   // non-constant charge
    CHECK(run_cli("killing --n 2 --j 1 --p 1 --format yaml").code == 1);
}

TEST_CASE("output is byte-for-byte deterministic") {
    for (const std::string& cmd :
         {std::string("count --n 4 --q 8 --format json"),
          std::string("solve --n 1 --q 2 --format json"),
          std::string("spectral --n 1 --q 1 --potential x1^2 --format json"),
          std::string("determine --n 2 --q 1 --potential x1*x2")}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}
