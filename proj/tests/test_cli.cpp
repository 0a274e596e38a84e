#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    std::string out_path = "/tmp/schurseq_cli_test.out";
    std::string cmd = std::string(SCHURSEQ_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return RunResult{code, slurp(out_path)};
}

}  // namespace

TEST_CASE("verify pair: pass verdict, exit 0, onset within the claimed bound") {
    auto r = run_cli("verify pair --alpha 0,0 --lambda1 - --lambda2 - --n-max 12 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["claim_id"] == "pair");
    CHECK(j["verdict"] == "pass");
    CHECK(j["onset"].get<int>() <= 1);
    CHECK(j["per_n"].is_array());
    CHECK(j["minimality"].size() == 2);
}

TEST_CASE("enumerate-polytope: count 3 for the k=2 example") {
    auto r = run_cli("enumerate-polytope --k 2 --n 2 --alpha 0,0 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 3);
    CHECK(j["row_sum_shapes"].size() == 3);
}

TEST_CASE("apply-delta: the single surviving term") {
    auto r = run_cli("apply-delta --ops \"1|(1,1)\" --seq hom2:alpha=1 --n 2 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["partition"] == "5");
    CHECK(j["terms"][0]["coefficient"] == 1);
}

TEST_CASE("reports are byte-identical across runs") {
    std::string a = "/tmp/schurseq_det_a.json", b = "/tmp/schurseq_det_b.json";
    auto r1 = run_cli("verify pair --alpha 1,0 --lambda1 1 --lambda2 - --format json --out " + a);
    auto r2 = run_cli("verify pair --alpha 1,0 --lambda1 1 --lambda2 - --format json --out " + b);
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    std::string ca = slurp(a), cb = slurp(b);
    CHECK_FALSE(ca.empty());
    CHECK(ca == cb);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("exit code contract") {
    CHECK(run_cli("not-a-subcommand").exit_code == 2);
    CHECK(run_cli("verify pair --alpha 0,1").exit_code == 2);      // unsorted alpha
    CHECK(run_cli("verify pair --lambda1 0,1").exit_code == 2);    // bad partition text
    CHECK(run_cli("enumerate-polytope --k 2 --n 2 --alpha 0,0 --face D22").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);

    // a declared stabilization index the family does not meet is a
    // computational failure: diagnostic report, exit 1
    auto lying = run_cli("verify corollary --factor \"0|(1);N=0\" --factor \"0|(1);N=0\" "
                         "--format json");
    CHECK(lying.exit_code == 1);
    auto j = nlohmann::json::parse(lying.out);
    CHECK(j["verdict"] == "fail");
}

TEST_CASE("corollary through the CLI") {
    auto r = run_cli("verify corollary --factor \"0|(-)\" --factor \"0|(-)\" --n-max 12 "
                     "--format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["claim_id"] == "corollary-pair");
    CHECK(j["verdict"] == "pass");
}

TEST_CASE("product subcommand emits canonical expansions") {
    auto r = run_cli("product --seq \"hom3:alpha=0,0,0\" --n 2 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["degree"] == 6);
    REQUIRE_FALSE(j["terms"].empty());
    CHECK(j["terms"][0]["partition"] == "6");  // canonical order starts at the one-row shape
}

TEST_CASE("explore-conjecture reports supporting evidence") {
    auto r = run_cli("explore-conjecture --alpha 0,0,0,0 --n-max 12 --no-minimality "
                     "--format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["claim_id"] == "conjecture");
    CHECK(j["verdict"] == "supporting evidence");
    CHECK(j["per_n"][0]["zero"] == true);
}

TEST_CASE("small grid run merges cells deterministically") {
    auto r = run_cli("verify pair --grid-alpha-max 1 --grid-lambda-max 1 --parallel 2 "
                     "--format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    // alpha pairs (1,1),(1,0),(0,0) x 2 lambdas x 2 lambdas
    CHECK(j["cells"].size() == 12);
    CHECK(j["summary"]["overall"] == "pass");
    auto r2 = run_cli("verify pair --grid-alpha-max 1 --grid-lambda-max 1 --parallel 1 "
                      "--format json");
    CHECK(r.out == r2.out);
}
