// End-to-end tests of the installed command-line binary: exit codes, output
// framing, determinism. The binary path comes from the build system.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef HYPDISK_CLI_PATH
#error "HYPDISK_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HYPDISK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli: usage errors exit with 2") {
    REQUIRE(run_cli("").exit_code == 2);
    REQUIRE(run_cli("bogus").exit_code == 2);
    REQUIRE(run_cli("table --r-min 0.5 --r-max 0.4 --steps 2").exit_code == 2);
    REQUIRE(run_cli("table --r-min 0 --r-max 0.5 --steps 2").exit_code == 2);
    REQUIRE(run_cli("render --r 1.5 --width 800 -o /tmp/hypdisk_bad.svg").exit_code == 2);
    REQUIRE(run_cli("render --r 0.5 --width 32 -o /tmp/hypdisk_bad.svg").exit_code == 2);
    const RunResult bad_r = run_cli("check --r 1.5 --seed 1");
    REQUIRE(bad_r.exit_code == 2);
    REQUIRE(bad_r.out.empty());  // no report on domain errors
}

TEST_CASE("cli: table") {
    const RunResult res = run_cli("table --r-min 0.5 --r-max 0.5 --steps 1");
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.out.rfind("r,center_im,radius,beta_rad,tan_beta,arc_length,area\n", 0) == 0);
    REQUIRE(std::count(res.out.begin(), res.out.end(), '\n') == 2);
    REQUIRE(res.out.find("-0.75") != std::string::npos);
    REQUIRE(res.out.find("1.25") != std::string::npos);
}

TEST_CASE("cli: render writes an SVG file") {
    const std::string path = "/tmp/hypdisk_render_test.svg";
    std::remove(path.c_str());
    const RunResult res =
        run_cli("render --r 0.5 --disks 7 --cone --width 640 -o " + path);
    REQUIRE(res.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string svg((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    REQUIRE(svg.find("<svg") != std::string::npos);
    REQUIRE(svg.find("class=\"family\"") != std::string::npos);
    std::remove(path.c_str());

    REQUIRE(run_cli("render --r 0.5 -o /nonexistent_dir/x.svg").exit_code == 3);
}

TEST_CASE("cli: check runs the battery and is deterministic") {
    const RunResult first = run_cli("check --r 0.5 --seed 42 --format json");
    REQUIRE(first.exit_code == 0);
    const auto doc = nlohmann::json::parse(first.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() >= 8);
    for (const auto& row : doc) {
        INFO(row.dump());
        REQUIRE(row["pass"] == true);
        REQUIRE(row["r"] == 0.5);
    }

    const RunResult second = run_cli("check --r 0.5 --seed 42 --format json");
    REQUIRE(second.exit_code == 0);
    REQUIRE(second.out == first.out);  // byte-identical under the same seed

    const RunResult csv = run_cli("check --r 0.5 --seed 42 --format csv");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(csv.out.rfind("name,r,computed,expected,abs_err,tolerance,pass\n", 0) == 0);
}
