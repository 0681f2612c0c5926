#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#ifndef MFM_CLI_PATH
#error "MFM_CLI_PATH must point at the built CLI binary"
#endif

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out = dir / ("mfm_cli_out_" + std::to_string(counter) + ".txt");
    const fs::path err = dir / ("mfm_cli_err_" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string(MFM_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return r;
}

} // namespace

TEST_CASE("verify runs clean on a seeded draw") {
    const RunResult r = run_cli("verify --m 2 --seed 7 --x 0.1");
    CHECK(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    REQUIRE(doc.contains("reports"));
    REQUIRE(doc["reports"].size() == 2);
    CHECK(doc["reports"][0]["identity"] == "tpr_00");
    CHECK(doc["reports"][1]["identity"] == "corollary_52");
    for (const Json& rep : doc["reports"]) {
        CHECK(rep["pass"].get<bool>());
        CHECK(rep["rel_residual"].get<double>() <= rep["tol"].get<double>());
        CHECK(rep["lhs"].size() == 2);
        CHECK(rep["rhs"].size() == 2);
        CHECK(rep.contains("abs_residual"));
        CHECK(rep["m"] == 2);
        CHECK(rep["x"] == 0.1);
    }
}

TEST_CASE("byte-identical output for identical configuration") {
    const RunResult a = run_cli("verify --m 3 --seed 11 --x 0.05");
    const RunResult b = run_cli("verify --m 3 --seed 11 --x 0.05");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const RunResult s1 = run_cli("solutions --m 2 --seed 4 --x 0.2");
    const RunResult s2 = run_cli("solutions --m 2 --seed 4 --x 0.2");
    CHECK(s1.out == s2.out);
}

TEST_CASE("eval with a vanishing upper parameter") {
    const RunResult r = run_cli(
        R"(eval --params '{"upper":[[0,0],[0.5,0]],"lower":[[0.7,0]]}' --x 0.3)");
    CHECK(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["value"][0] == 1.0);
    CHECK(doc["value"][1] == 0.0);
    CHECK(doc["tail_bound"] == 0.0);
}

TEST_CASE("eval accepts a parameter-set source") {
    const fs::path file = fs::temp_directory_path() / "mfm_eval_params.json";
    {
        std::ofstream out(file);
        out << R"({"m":1,"a":[[0.3,0],[0.45,0]],"b":[[0,0],[0.7,0]],"x":[0.2,0]})";
    }
    const RunResult r = run_cli("eval --params " + file.string());
    fs::remove(file);
    CHECK(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["value"][0].get<double>() > 1.0); // series with positive terms
    CHECK(doc["terms_used"].get<int>() > 1);
}

TEST_CASE("solutions layout") {
    const RunResult r = run_cli("solutions --m 2 --seed 9 --x 0.1");
    CHECK(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["m"] == 2);
    REQUIRE(doc["solutions"].size() == 3);
    for (const Json& sv : doc["solutions"]) {
        CHECK(sv.contains("value"));
        CHECK(sv["tail_bound"].get<double>() <= 1e-14);
    }
}

TEST_CASE("intersect emits matrices with determinant cross-check") {
    const RunResult r = run_cli("intersect --m 2 --seed 5");
    CHECK(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    REQUIRE(doc["matrices"].size() == 4);
    const Json& phi = doc["matrices"][0];
    CHECK(phi["kind"] == "cohomology_phi");
    CHECK(phi["det_rel_diff"].get<double>() <= 1e-10);
    CHECK(phi["entries"].size() == 3);
    CHECK(phi["entries"][0][1][0] == 0.0); // exact off-diagonal zero
    CHECK(phi["entries"][0][1][1] == 0.0);
    const Json& hom = doc["matrices"][3];
    CHECK(hom["kind"] == "homology");

    const RunResult only = run_cli("intersect --m 2 --seed 5 --basis mixed");
    const Json one = Json::parse(only.out);
    REQUIRE(one["matrices"].size() == 1);
    CHECK(one["matrices"][0]["kind"] == "cohomology_mixed");
}

TEST_CASE("periods emits the primal and dual rows") {
    const RunResult r = run_cli("periods --m 2 --seed 3 --x 0.1");
    CHECK(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    CHECK_FALSE(doc["primal"]["dual"].get<bool>());
    CHECK(doc["dual"]["dual"].get<bool>());
    CHECK(doc["primal"]["entries"].size() == 3);
    CHECK(doc["primal"]["x"] == 0.1);
}

TEST_CASE("quad reports pass at the default level and fail at level 1") {
    const RunResult r = run_cli("quad --m 2 --seed 5 --x 0.25");
    CHECK(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    REQUIRE(doc["reports"].size() == 4);
    CHECK(doc["reports"][0]["identity"] == "euler_integral");
    CHECK(doc["reports"][1]["n"] == 0);
    CHECK(doc["reports"][3]["n"] == 3);

    const RunResult coarse = run_cli("quad --m 2 --seed 5 --x 0.25 --level 1");
    CHECK(coarse.exit_code == 1); // quadrature too coarse for the tolerance
    const Json cdoc = Json::parse(coarse.out);
    bool any_fail = false;
    for (const Json& rep : cdoc["reports"]) {
        if (!rep["pass"].get<bool>()) any_fail = true;
    }
    CHECK(any_fail);
}

TEST_CASE("sweep aggregates runs without failures") {
    const RunResult r = run_cli("sweep --m 1..2 --count 2 --seed 1");
    CHECK(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["runs"] == 24); // 2 m * 2 seeds * 3 x * 2 identities
    CHECK(doc["failures"].empty());
    CHECK(doc["max_rel_residual"].get<double>() <= 1e-9);
}

TEST_CASE("usage and validation errors exit with code 2") {
    CHECK(run_cli("verify --m 2").exit_code == 2);          // missing seed
    CHECK(run_cli("nonsense").exit_code == 2);              // unknown command
    CHECK(run_cli("verify --bogus 1").exit_code == 2);      // unknown flag
    CHECK(run_cli("eval --x 0.1").exit_code == 2);          // missing params

    const RunResult invalid = run_cli(
        R"(verify --params '{"m":1,"a":[[1,0],[0.5,0]],"b":[[0,0],[0.2,0]]}' --x 0.1)");
    CHECK(invalid.exit_code == 2); // a_0 - b_0 integral
    CHECK(invalid.err.find("non-integrality") != std::string::npos);

    const RunResult badtol = run_cli("verify --m 1 --seed 2 --x 0.1 --tol 0.5");
    CHECK(badtol.exit_code == 2); // tol outside (0, 1e-2]
}

TEST_CASE("output lands in a file with --out") {
    const fs::path file = fs::temp_directory_path() / "mfm_out.json";
    fs::remove(file);
    const RunResult r = run_cli("verify --m 1 --seed 2 --x 0.1 --out " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    REQUIRE(fs::exists(file));
    const Json doc = Json::parse(slurp(file));
    CHECK(doc["reports"].size() == 2);
    fs::remove(file);
}

TEST_CASE("x defaults from the parameter file when present") {
    const fs::path file = fs::temp_directory_path() / "mfm_params_x.json";
    {
        std::ofstream out(file);
        out << R"({"m":1,"a":[[0.3,0],[0.45,0]],"b":[[0,0],[0.7,0]],"x":[0.2,0]})";
    }
    const RunResult r = run_cli("verify --params " + file.string());
    CHECK(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["reports"][0]["x"] == 0.2);

    // An explicit --x wins over the file value.
    const RunResult forced = run_cli("verify --params " + file.string() + " --x 0.05");
    fs::remove(file);
    const Json fdoc = Json::parse(forced.out);
    CHECK(fdoc["reports"][0]["x"] == 0.05);
}
