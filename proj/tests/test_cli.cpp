// End-to-end checks of the sweep driver binary: output schema, provenance,
// determinism, and cleanup on failure.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

#ifndef JRCSIM_CLI_PATH
#error "JRCSIM_CLI_PATH must point at the sweep driver binary"
#endif

const std::string kCli = JRCSIM_CLI_PATH;

int run_cli(const std::string& args) {
    return std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("jrcsim_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("snr sweep writes the full CSV schema") {
    const auto dir = fresh_dir("snr");
    REQUIRE(run_cli("--sweep snr --rho 1 --trials 4 --seed 3 --out " +
                    dir.string() + " --emit-plot") == 0);
    const auto lines = lines_of(slurp(dir / "results.csv"));
    REQUIRE(lines.size() == 1 + 11 * 5);  // header + 5 baselines x 11 SNR points
    CHECK(lines[0] ==
          "sweep_value,baseline,rho,mean_rate,std_rate,trials,mean_active_rf");
    CHECK(lines[1].rfind("-10,", 0) == 0);
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(fs::exists(dir / "plot.gp"));
    const auto manifest = slurp(dir / "manifest.json");
    CHECK(manifest.find("\"seed\": 3") != std::string::npos);
    CHECK(manifest.find("\"n_tx\": 32") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("identical manifests produce byte-identical results") {
    const auto dir_a = fresh_dir("det_a");
    const auto dir_b = fresh_dir("det_b");
    const std::string args = "--sweep snr --rho 0.5 --trials 5 --seed 11 --out ";
    REQUIRE(run_cli(args + dir_a.string()) == 0);
    REQUIRE(run_cli(args + dir_b.string()) == 0);
    CHECK(slurp(dir_a / "results.csv") == slurp(dir_b / "results.csv"));
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
}

TEST_CASE("rf sweep covers the chain grid") {
    const auto dir = fresh_dir("rf");
    REQUIRE(run_cli("--sweep rf --trials 3 --seed 2 --out " + dir.string()) == 0);
    const auto lines = lines_of(slurp(dir / "results.csv"));
    REQUIRE(lines.size() == 1 + 4 * 3);  // header + 3 kinds x caps 1..4
    CHECK(lines[1].rfind("1,", 0) == 0);
    fs::remove_all(dir);
}

TEST_CASE("beampattern sweep dumps a 1-degree grid") {
    const auto dir = fresh_dir("bp");
    REQUIRE(run_cli("--sweep beampattern --seed 5 --out " + dir.string()) == 0);
    const auto lines = lines_of(slurp(dir / "results.csv"));
    REQUIRE(lines.size() == 1 + 181);
    CHECK(lines[0] == "angle_deg,power");
    CHECK(lines[1].rfind("-90,", 0) == 0);
    fs::remove_all(dir);
}

TEST_CASE("config file drives the run and bad configs clean up") {
    const auto dir = fresh_dir("cfg");
    fs::create_directories(dir);
    const fs::path good = dir / "good.cfg";
    std::ofstream(good) << "n_tx = 16\nn_rf = 2\n";
    REQUIRE(run_cli("--config " + good.string() +
                    " --sweep rf --trials 2 --seed 1 --out " + dir.string()) == 0);
    const auto lines = lines_of(slurp(dir / "results.csv"));
    CHECK(lines.size() == 1 + 2 * 3);  // caps 1..2
    const auto manifest = slurp(dir / "manifest.json");
    CHECK(manifest.find("\"n_tx\": 16") != std::string::npos);

    const fs::path out2 = dir / "bad_out";
    const fs::path bad = dir / "bad.cfg";
    std::ofstream(bad) << "n_rf = 0\n";
    CHECK(run_cli("--config " + bad.string() + " --sweep snr --out " +
                  out2.string()) != 0);
    CHECK(!fs::exists(out2 / "results.csv"));
    fs::remove_all(dir);
}
