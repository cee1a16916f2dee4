// Drives the installed binary end to end: exit codes, JSON/CSV payloads,
// and the generate -> compute round trip.

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out = dir / ("mdim_out_" + std::to_string(++counter) + ".txt");
    const fs::path err = dir / ("mdim_err_" + std::to_string(counter) + ".txt");
    const std::string cmd = std::string(MDIM_CLI_PATH) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    res.out = slurp(out);
    res.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return res;
}

nlohmann::json result_of(const RunResult& r) { return nlohmann::json::parse(r.out)["result"]; }

} // namespace

TEST_CASE("compute: fractional JSON payload") {
    const auto r = run_cli("compute --family petersen --k 3 --mode fractional");
    REQUIRE(r.exit_code == 0);
    const auto result = result_of(r);
    CHECK(result["value"] == "5");
    CHECK(result["k"] == "3");
    CHECK(result["kappa"] == 6);
    CHECK(result["certificate"].size() == 10);
}

TEST_CASE("compute: path:5 at k=4 gives 5; k=9 exits 2 citing kappa") {
    const auto ok = run_cli("compute --family path:5 --k 4");
    REQUIRE(ok.exit_code == 0);
    CHECK(result_of(ok)["value"] == "5");

    const auto bad = run_cli("compute --family path:5 --k 9");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("k exceeds kappa=4") != std::string::npos);
}

TEST_CASE("compute: integer mode") {
    const auto r = run_cli("compute --family grid:3x4 --k 3 --mode integer");
    REQUIRE(r.exit_code == 0);
    const auto result = result_of(r);
    CHECK(result["value"] == 6);
    CHECK(result["witness"].size() == 6);

    const auto frac_k = run_cli("compute --family grid:3x4 --k 3/2 --mode integer");
    CHECK(frac_k.exit_code == 2);
}

TEST_CASE("compute: graph source errors") {
    CHECK(run_cli("compute --family path:4 --graph nope.edges --k 1").exit_code == 1);
    CHECK(run_cli("compute --k 1").exit_code == 1);
    CHECK(run_cli("compute --graph /does/not/exist --k 1").exit_code == 1);
    CHECK(run_cli("compute --family pathx:4 --k 1").exit_code == 1);

    const fs::path bad = fs::temp_directory_path() / "mdim_bad.edges";
    std::ofstream(bad) << "0 0\n";
    CHECK(run_cli("compute --graph " + bad.string() + " --k 1").exit_code == 1);
    std::ofstream(bad) << "0 1\n2 3\n";
    CHECK(run_cli("compute --graph " + bad.string() + " --k 1").exit_code == 2); // disconnected
    fs::remove(bad);
}

TEST_CASE("sweep: explicit samples, count grid, error paths") {
    const auto r = run_cli("sweep --family path:4 --samples 1,2,5/2,3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "k,value\n1,1\n2,2\n5/2,3\n3,4\n");

    const auto counted = run_cli("sweep --family grid:3x3 --count 4");
    REQUIRE(counted.exit_code == 0);
    CHECK(counted.out == "k,value\n1,2\n2,4\n3,6\n4,8\n");

    CHECK(run_cli("sweep --family path:4 --samples 0").exit_code == 2);
    CHECK(run_cli("sweep --family path:4").exit_code == 1);
    CHECK(run_cli("sweep --family path:4 --samples 1 --count 2").exit_code == 1);
}

TEST_CASE("generate then compute equals compute on the family") {
    const fs::path edges = fs::temp_directory_path() / "mdim_roundtrip.edges";
    for (const char* family :
         {"path:5", "cycle:6", "wheel:6", "petersen", "bouquet:3,4", "multipartite:1,3",
          "grid:2x3", "spider:1,2,2", "remark:path:2,s=1", "blowup:path:2,sizes=2K,2E"}) {
        const auto gen = run_cli(std::string("generate --family ") + family + " --out " +
                                 edges.string());
        REQUIRE(gen.exit_code == 0);
        const auto via_file = run_cli("compute --graph " + edges.string() + " --k 1");
        const auto via_family = run_cli(std::string("compute --family ") + family + " --k 1");
        REQUIRE(via_file.exit_code == 0);
        REQUIRE(via_family.exit_code == 0);
        CHECK(result_of(via_file) == result_of(via_family));
    }
    fs::remove(edges);
}

TEST_CASE("oracle subcommand") {
    const auto r = run_cli("oracle --family cycle:5 --k 4");
    REQUIRE(r.exit_code == 0);
    CHECK(result_of(r)["value"] == 5);

    CHECK(run_cli("oracle --family path:4 --k 1").exit_code == 0);
    CHECK(run_cli("oracle --family grid:5x5 --k 1").exit_code == 2); // 25 > guard 16
    CHECK(run_cli("oracle --family grid:5x5 --k 1 --guard 25").exit_code == 0);
}

TEST_CASE("verify subcommand passes on the bundled scopes") {
    const auto cycles = run_cli("verify --scope cycles --max-n 8");
    CHECK(cycles.exit_code == 0);
    CHECK(cycles.out.find("MISMATCH") == std::string::npos);

    const auto remark = run_cli("verify --scope remark --s 2");
    CHECK(remark.exit_code == 0);
    CHECK(remark.out.find("dim k=3") != std::string::npos);

    const auto trees = run_cli("verify --scope trees --count 30 --max-n 20");
    CHECK(trees.exit_code == 0);
    CHECK(trees.out.find("random-tree#30") != std::string::npos);
    CHECK(trees.out.find("MISMATCH") == std::string::npos);

    CHECK(run_cli("verify --scope nonsense").exit_code == 1);
}

TEST_CASE("reports are deterministic apart from the timing field") {
    auto strip_timing = [](const RunResult& r) {
        auto j = nlohmann::json::parse(r.out);
        j.erase("timing_ms");
        return j;
    };
    const auto a = run_cli("compute --family wheel:7 --k 5/2");
    const auto b = run_cli("compute --family wheel:7 --k 5/2");
    REQUIRE(a.exit_code == 0);
    CHECK(strip_timing(a) == strip_timing(b));
}

TEST_CASE("worker cap env var is accepted") {
    const auto r = run_cli("sweep --family cycle:7 --count 6");
    REQUIRE(r.exit_code == 0);
    setenv("MDIM_THREADS", "2", 1);
    const auto threaded = run_cli("sweep --family cycle:7 --count 6");
    unsetenv("MDIM_THREADS");
    REQUIRE(threaded.exit_code == 0);
    CHECK(threaded.out == r.out);
}
