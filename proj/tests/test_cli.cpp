// End-to-end checks of the detboot binary. The executable path comes in via
// the DETBOOT_CLI_PATH compile definition.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef DETBOOT_CLI_PATH
#error "DETBOOT_CLI_PATH must be defined"
#endif

namespace {

namespace fs = std::filesystem;

struct RunOutput {
    int exit_code;
    std::string stdout_text;
};

RunOutput run_cli(const std::string& args) {
    const std::string cmd = std::string(DETBOOT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path write_sample(const std::string& name, const std::string& contents) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream f(p, std::ios::binary);
    f << contents;
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// drop the volatile timing line from a JSON result document
std::string strip_timing(const std::string& text) {
    std::string out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (line.find("\"timing\"") == std::string::npos) out += line + "\n";
    return out;
}

}  // namespace

TEST_CASE("cli: identical requests produce identical artifacts") {
    const fs::path sample = write_sample("detboot_cli_det.txt", "0.31\n4.7\n2.02\n3.33\n1.9\n");
    const fs::path out1 = fs::temp_directory_path() / "detboot_cli_det1.json";
    const fs::path out2 = fs::temp_directory_path() / "detboot_cli_det2.json";
    const std::string args = "density --input " + sample.string() +
                             " --method efron-mean --grid-size 500 --pad 1.25 --output ";
    CHECK(run_cli(args + out1.string()).exit_code == 0);
    CHECK(run_cli(args + out2.string()).exit_code == 0);
    const std::string a = strip_timing(read_file(out1));
    const std::string b = strip_timing(read_file(out2));
    CHECK(a == b);
    CHECK(!a.empty());
    fs::remove(sample);
    fs::remove(out1);
    fs::remove(out2);
}

TEST_CASE("cli: csv artifact is bitwise stable and well-formed") {
    const fs::path sample = write_sample("detboot_cli_csv.txt", "1\n2\n3\n4\n5\n6\n");
    const fs::path out1 = fs::temp_directory_path() / "detboot_cli_csv1.csv";
    const fs::path out2 = fs::temp_directory_path() / "detboot_cli_csv2.csv";
    const std::string args = "cdf --input " + sample.string() +
                             " --method moving-block --block-length 2 --grid-size 64 "
                             "--pad 1.25 --format csv --output ";
    CHECK(run_cli(args + out1.string()).exit_code == 0);
    CHECK(run_cli(args + out2.string()).exit_code == 0);
    const std::string a = read_file(out1);
    CHECK(a == read_file(out2));
    CHECK(a.rfind("bin_left,bin_right,density_mass,cdf\n", 0) == 0);
    fs::remove(sample);
    fs::remove(out1);
    fs::remove(out2);
}

TEST_CASE("cli: compare prints both oracle distances") {
    const fs::path sample = write_sample("detboot_cli_cmp.txt", "1\n2\n3\n4\n");
    const RunOutput r = run_cli("compare --input " + sample.string() +
                                " --method efron-mean --grid-size 256 --pad 1.25 "
                                "--replicates 20000 --seed 11");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("ks_pipeline_vs_mc") != std::string::npos);
    CHECK(r.stdout_text.find("ks_pipeline_vs_brute_force") != std::string::npos);
    fs::remove(sample);
}

TEST_CASE("cli: bench emits a machine-readable row") {
    const fs::path sample = write_sample("detboot_cli_bench.txt", "1\n2\n3\n4\n5\n");
    const RunOutput r = run_cli("bench --input " + sample.string() +
                                " --method efron-mean --grid-size 512 --pad 1.25 "
                                "--replicates 1000 --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("n,m,N,B,t_forward,t_ifft,t_mc") != std::string::npos);
    fs::remove(sample);
}

TEST_CASE("cli: exit codes") {
    SUBCASE("module error gives 1") {
        const fs::path sample = write_sample("detboot_cli_err.txt", "1\n2\n3\n");
        const RunOutput r = run_cli("density --input " + sample.string() +
                                    " --method moving-block --block-length 2");
        CHECK(r.exit_code == 1);  // 2 does not divide 3
        fs::remove(sample);
    }
    SUBCASE("missing file gives 1") {
        const RunOutput r = run_cli("density --input /nonexistent/detboot_sample.txt");
        CHECK(r.exit_code == 1);
    }
    SUBCASE("usage error gives 2") {
        const RunOutput r = run_cli("density --no-such-flag");
        CHECK(r.exit_code == 2);
        const RunOutput r2 = run_cli("");
        CHECK(r2.exit_code == 2);
    }
    SUBCASE("parse error names the line") {
        const fs::path sample = write_sample("detboot_cli_bad.txt", "1.0\nabc\n");
        const RunOutput r = run_cli("density --input " + sample.string());
        CHECK(r.exit_code == 1);
        fs::remove(sample);
    }
}
