#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include <json.hpp>

#include "schema_check.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void check_schema(const json& doc, const std::string& schema_name) {
    std::string why;
    const bool ok = schema_check::validate_file(VERKNOT_SCHEMA_DIR, doc, schema_name, why);
    INFO(schema_name << ": " << why);
    CHECK(ok);
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(VERKNOT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("torsion command: text, csv, json") {
    const auto text = run_cli("torsion --p 2 --q 3");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("1/2") != std::string::npos);

    const auto csv = run_cli("torsion --p 2 --q 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("a,b,torsion_exact", 0) == 0);
    CHECK(count_lines(csv.out) == 2);  // header + one component

    const auto js = run_cli("torsion --p 3 --q 5 --format json");
    CHECK(js.exit_code == 0);
    const json doc = json::parse(js.out);
    CHECK(doc["components"].size() == 4);
    CHECK(doc["p"] == 3);
    check_schema(doc, "torsion_report.schema.json");
}

TEST_CASE("torsion command rejects invalid knots with exit 2") {
    CHECK(run_cli("torsion --p 4 --q 6").exit_code == 2);
    CHECK(run_cli("torsion --p 1 --q 5").exit_code == 2);
    CHECK(run_cli("torsion --p 2").exit_code == 2);  // missing required option
}

TEST_CASE("verify command: pass, fail on injected fault") {
    const auto ok = run_cli("verify --p 2 --q 5 --g-max 4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("all checks passed") != std::string::npos);

    const auto bad = run_cli("verify --p 2 --q 5 --g-max 3 --inject-fault");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);

    const auto js = run_cli("verify --p 2 --q 3 --g-max 10 --format json");
    CHECK(js.exit_code == 0);
    const json doc = json::parse(js.out);
    CHECK(doc["pass"] == json(true));
    check_schema(doc, "verify_report.schema.json");
}

TEST_CASE("verlinde command") {
    const auto v = run_cli("verlinde --p 2 --q 5 --g 2 --format json");
    CHECK(v.exit_code == 0);
    const json doc = json::parse(v.out);
    CHECK(doc["value"] == json("5"));
    CHECK(doc["agree"] == json(true));
    check_schema(doc, "verlinde_report.schema.json");

    const auto punct = run_cli("verlinde --p 2 --q 5 --g 1 --punctures 1,3 --format json");
    CHECK(punct.exit_code == 0);
    CHECK(json::parse(punct.out)["value"] == json("1"));

    CHECK(run_cli("verlinde --p 2 --q 5 --g 0 --punctures 9,9").exit_code == 2);
    CHECK(run_cli("verlinde --p 2 --q 5 --g -1").exit_code == 2);
}

TEST_CASE("curve command: CSV sampling and JSON report") {
    const auto csv = run_cli("curve --p 2 --q 3 --samples 100 --t-min -2.5 --t-max 2.5");
    CHECK(csv.exit_code == 0);
    CHECK(count_lines(csv.out) == 101);  // header + 100 rows
    CHECK(csv.out.rfind("t,X,Y,Z0,Z1", 0) == 0);

    const auto js = run_cli("curve --p 3 --q 4 --format json");
    CHECK(js.exit_code == 0);
    CHECK(json::parse(js.out)["singular_count"] == 3);
    check_schema(json::parse(js.out), "curve_report.schema.json");

    const fs::path dir = fs::temp_directory_path() / "verknot_cli_test";
    fs::remove_all(dir);
    const auto files = run_cli("curve --p 2 --q 3 --samples 10 --out " + dir.string());
    CHECK(files.exit_code == 0);
    CHECK(fs::exists(dir / "curve_2_3.csv"));
    CHECK(fs::exists(dir / "curve_2_3.json"));
    std::ifstream jf(dir / "curve_2_3.json");
    json doc;
    jf >> doc;
    CHECK(doc["singular_count"] == 1);
    fs::remove_all(dir);
}

TEST_CASE("scan command: verdicts over a range, deterministic output") {
    const auto scan = run_cli("scan --p-max 6 --q-max 9 --g-max 5");
    CHECK(scan.exit_code == 0);
    int coprime_pairs = 0;
    for (int q = 3; q <= 9; ++q)
        for (int p = 2; p < q && p <= 6; ++p)
            if (std::gcd(p, q) == 1) ++coprime_pairs;
    CHECK(count_lines(scan.out) == coprime_pairs + 1);  // header row

    const auto again = run_cli("scan --p-max 6 --q-max 9 --g-max 5");
    CHECK(again.out == scan.out);  // byte-identical rerun

    const auto js = run_cli("scan --p-max 3 --q-max 5 --g-max 4 --format json");
    CHECK(js.exit_code == 0);
    const json doc = json::parse(js.out);
    CHECK(doc["ok"] == json(true));
    CHECK(doc["rows"].size() == 4);  // (2,3),(2,5),(3,4),(3,5)
    check_schema(doc, "scan_report.schema.json");
}

TEST_CASE("reruns with identical flags are byte-identical") {
    const auto a = run_cli("torsion --p 3 --q 5 --format json");
    const auto b = run_cli("torsion --p 3 --q 5 --format json");
    CHECK(a.out == b.out);
    const auto c = run_cli("curve --p 2 --q 5 --samples 37 --t-min -2 --t-max 2");
    const auto d = run_cli("curve --p 2 --q 5 --samples 37 --t-min -2 --t-max 2");
    CHECK(c.out == d.out);
}

TEST_CASE("help exits zero, unknown flags exit 2") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("torsion --p 2 --q 3 --bogus 7").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}
