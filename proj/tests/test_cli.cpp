#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "midroman_cli_test";
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    fs::path out = scratch_dir() / "out.txt";
    std::string cmd = std::string(MIDROMAN_CLI) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out)};
}

fs::path write_file(const char* name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

} // namespace

TEST_CASE("solve command") {
    RunResult r = run_cli("solve --cycle 4 --gamma pr-star --output json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["gamma_pr_star"]["optimum"] == 5);
    CHECK(j["gamma_pr_star"]["witness"]["weight"] == 5);

    r = run_cli("solve --path 7 --gamma r-star --output json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["gamma_r_star"]["optimum"] == 7);

    fs::path empty4 = write_file("empty4.el", "4 0\n");
    r = run_cli("solve --file " + empty4.string() + " --gamma pr --output json");
    CHECK(r.exit_code == 0);
    json pr = json::parse(r.out)["gamma_pr"];
    CHECK(pr["optimum"] == 4);
    CHECK(pr["labels"] == json::array({1, 1, 1, 1}));

    fs::path k3 = write_file("k3.g6", "Bw\n");
    r = run_cli("solve --file " + k3.string() + " --format graph6 --gamma r --output json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["gamma_r"]["optimum"] == 2);

    // all four invariants by default
    r = run_cli("solve --path 3 --output json");
    CHECK(r.exit_code == 0);
    json all = json::parse(r.out);
    CHECK(all["gamma_r"]["optimum"] == 2);
    CHECK(all["gamma_pr"]["optimum"] == 2);
    CHECK(all["gamma_r_star"]["optimum"] == 3);
    CHECK(all["gamma_pr_star"]["optimum"] == 3);
}

TEST_CASE("error exit codes") {
    fs::path bad = write_file("selfloop.el", "2 1\n0 0\n");
    CHECK(run_cli("solve --file " + bad.string() + " --gamma r").exit_code == 2);

    CHECK(run_cli("solve --complete 12 --gamma r --size-guard 10").exit_code == 3);
    CHECK(run_cli("construct --path 1").exit_code == 2);
    CHECK(run_cli("solve --gamma r").exit_code == 2);            // no graph source
    CHECK(run_cli("solve --path 3 --cycle 3").exit_code == 2);   // two sources
    CHECK(run_cli("nonsense").exit_code == 2);

    // env var override of the guard: M(K4) has 10 elements, over a guard of 5
    fs::path k4 = write_file("k4.el", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    std::string cmd = std::string("MR_SIZE_GUARD=5 ") + MIDROMAN_CLI + " solve --file " +
                      k4.string() + " --gamma r-star > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
    // the flag wins over the env var
    cmd = std::string("MR_SIZE_GUARD=5 ") + MIDROMAN_CLI + " solve --file " + k4.string() +
          " --gamma r-star --size-guard 64 > /dev/null 2>&1";
    status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("middle command emits pipeable edge lists") {
    RunResult r = run_cli("middle --path 3 --output tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "5 5\n0 3\n1 3\n1 4\n2 4\n3 4\n");

    r = run_cli("middle --complete 2 --output json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["m"] == 2);
    CHECK(j["element_map"][2] == "e0(0-1)");
}

TEST_CASE("construct command") {
    RunResult r = run_cli("construct --cycle 9 --output json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["weight"] == 9);

    r = run_cli("construct --path 5 --output json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["weight"] == 5);
}

TEST_CASE("check command") {
    RunResult r = run_cli("check --cycle 6 --output json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["equal"] == true);
    CHECK(j["consistent"] == true);
    CHECK(!j["witness"].is_null());

    r = run_cli("check --cycle 5 --output json");
    CHECK(r.exit_code == 0);
    j = json::parse(r.out);
    CHECK(j["equal"] == false);
    CHECK(j["witness"].is_null());

    r = run_cli("check --path 3 --output json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["witness"]["weight"] == 3);
}

TEST_CASE("survey command") {
    std::string corpus = std::string(MIDROMAN_DATA_DIR) + "/connected_n5.g6";
    RunResult r = run_cli("survey --file " + corpus + " --checks all");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("violations=0") != std::string::npos);

    // identical invocation, byte-identical output
    RunResult again = run_cli("survey --file " + corpus + " --checks all");
    CHECK(again.out == r.out);

    // seeded random survey is reproducible as well
    RunResult s1 = run_cli("survey --random 15 --max-n 7 --seed 5 --checks order");
    RunResult s2 = run_cli("survey --random 15 --max-n 7 --seed 5 --checks order");
    CHECK(s1.exit_code == 0);
    CHECK(s1.out == s2.out);
    RunResult s3 = run_cli("survey --random 15 --max-n 7 --seed 6 --checks order");
    CHECK(s3.out != s1.out);

    // corrupt line: per-line error, run continues, nonzero exit
    fs::path bad = write_file("bad.g6", "A_\nA_q\nBw\n");
    RunResult b = run_cli("survey --file " + bad.string());
    CHECK(b.exit_code == 2);
    CHECK(b.out.find("parse_errors=1") != std::string::npos);
    CHECK(b.out.find("graphs=3") != std::string::npos);
}

TEST_CASE("open-problems command") {
    RunResult r = run_cli("open-problems --complete --max 5 --output tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("K_n\t2\t2\n") != std::string::npos);
    CHECK(r.out.find("K_n\t3\t3\n") != std::string::npos);

    RunResult b = run_cli("open-problems --complete-bipartite --max 5 --output tsv");
    CHECK(b.exit_code == 0);
    CHECK(b.out.find("K_{m,n}\t1,1\t2\n") != std::string::npos);

    RunResult again = run_cli("open-problems --complete --max 5 --output tsv");
    CHECK(again.out == r.out);
}
