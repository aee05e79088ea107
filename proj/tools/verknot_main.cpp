// Command-line front end: computation, verification and data export for
// torus-knot torsion and Verlinde invariants.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>

#include <CLI11.hpp>

#include "verknot/report.hpp"
#include "verknot/verify.hpp"

namespace fs = std::filesystem;
using namespace verknot;

namespace {

std::string resolve_out(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("VERKNOT_OUT")) return env;
    return "";
}

void sink(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path '" + out_path + "'");
    f << content;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string torsion_text(const TorusKnot& k, int g_max) {
    std::string out = k.name() + "  r=" + std::to_string(k.r()) + " s=" + std::to_string(k.s()) +
                      "  components=" + std::to_string(k.component_count()) + "\n";
    out += "a\tb\ttorsion\ttorsion_float\texcluded_traces\n";
    for (const auto& c : components(k)) {
        const auto tau = adjoint_torsion(k, c);
        const auto excl = excluded_traces(k, c);
        const auto exact = tau.exact.to_rational();
        out += std::to_string(c.a) + "\t" + std::to_string(c.b) + "\t" +
               (exact ? exact->str() : tau.exact.str()) + "\t" + fmt_double(tau.value) + "\t" +
               fmt_double(excl.minus_float.real()) + ", " + fmt_double(excl.plus_float.real()) + "\n";
    }
    out += "power sums sum_rho (2 tau)^(g-1):\n";
    out += "g\tvalue\tinteger\n";
    for (const auto& ps : torsion_power_sums(k, g_max))
        out += std::to_string(ps.g) + "\t" + (ps.rational ? ps.rational->str() : "irrational") + "\t" +
               (ps.rational && ps.rational->is_integer() ? "yes" : "no") + "\n";
    return out;
}

std::string torsion_csv(const TorusKnot& k) {
    std::string out = "a,b,torsion_exact,torsion_float,excluded_minus,excluded_plus\n";
    for (const auto& c : components(k)) {
        const auto tau = adjoint_torsion(k, c);
        const auto excl = excluded_traces(k, c);
        const auto exact = tau.exact.to_rational();
        out += std::to_string(c.a) + "," + std::to_string(c.b) + "," +
               (exact ? exact->str() : "\"" + tau.exact.str() + "\"") + "," + fmt_double(tau.value) + "," +
               fmt_double(excl.minus_float.real()) + "," + fmt_double(excl.plus_float.real()) + "\n";
    }
    return out;
}

std::string verify_text(const TorusKnot& k, const std::vector<CheckResult>& results) {
    std::string out = "verify " + k.name() + "\n";
    for (const auto& r : results) {
        out += std::string(r.pass ? "PASS" : "FAIL") + " " + r.name + " (" + std::to_string(r.checks) + " checks)";
        if (!r.pass) out += "  " + r.detail;
        out += "\n";
    }
    out += all_pass(results) ? "all checks passed\n" : "VERIFICATION FAILED\n";
    return out;
}

json verify_json(const TorusKnot& k, const std::vector<CheckResult>& results) {
    json groups = json::array();
    for (const auto& r : results)
        groups.push_back(json{{"name", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"detail", r.detail}});
    return json{{"p", k.p()}, {"q", k.q()}, {"groups", groups}, {"pass", all_pass(results)}};
}

std::string scan_text(const std::vector<IntegralityReport>& reports) {
    std::string out = "p\tq\tok\tpower_sums\n";
    for (const auto& rep : reports) {
        out += std::to_string(rep.knot.p()) + "\t" + std::to_string(rep.knot.q()) + "\t" +
               (rep.all_ok ? "yes" : "NO") + "\t";
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
            if (i) out += " ";
            out += rep.rows[i].power_sum.str();
        }
        out += "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torus knot torsion / Verlinde number calculator"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    int p = 0, q = 0, g = 0, g_max = 6, samples = 200, p_max = 5, q_max = 7;
    double t_min = -2.5, t_max = 2.5;
    std::string format = "text", out_flag, punctures;
    bool inject_fault = false;

    auto* cmd_torsion = app.add_subcommand("torsion", "per-component adjoint Reidemeister torsion and power sums");
    cmd_torsion->add_option("--p", p, "torus knot p")->required();
    cmd_torsion->add_option("--q", q, "torus knot q")->required();
    cmd_torsion->add_option("--g-max", g_max, "largest g in the power-sum table")->check(CLI::NonNegativeNumber);
    cmd_torsion->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    cmd_torsion->add_option("--out", out_flag, "output file (default stdout; env VERKNOT_OUT)");

    auto* cmd_verify = app.add_subcommand("verify", "run the full invariant suite for one knot");
    cmd_verify->add_option("--p", p)->required();
    cmd_verify->add_option("--q", q)->required();
    cmd_verify->add_option("--g-max", g_max)->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    cmd_verify->add_flag("--inject-fault", inject_fault,
                         "test hook: flip one fusion tensor entry (verification must then fail)");
    cmd_verify->add_option("--out", out_flag);

    auto* cmd_verlinde = app.add_subcommand("verlinde", "Verlinde number d(g, n) by both routes");
    cmd_verlinde->add_option("--p", p)->required();
    cmd_verlinde->add_option("--q", q)->required();
    cmd_verlinde->add_option("--g", g)->required()->check(CLI::NonNegativeNumber);
    cmd_verlinde->add_option("--punctures", punctures, "multi-index as 'a,b;a,b;...' (empty = 0)");
    cmd_verlinde->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    cmd_verlinde->add_option("--out", out_flag);

    auto* cmd_curve = app.add_subcommand("curve", "sample the resolved Chebyshev curve; list singular points");
    cmd_curve->add_option("--p", p)->required();
    cmd_curve->add_option("--q", q)->required();
    cmd_curve->add_option("--samples", samples, "number of CSV sample rows")->check(CLI::Range(2, 10'000'000));
    cmd_curve->add_option("--t-min", t_min);
    cmd_curve->add_option("--t-max", t_max);
    cmd_curve->add_option("--format", format, "csv prints samples, json the singular-point report")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_curve->add_option("--out", out_flag, "directory: write both CSV and JSON there");

    auto* cmd_scan = app.add_subcommand("scan", "integrality verdicts for all coprime pairs in range");
    cmd_scan->add_option("--p-max", p_max)->required()->check(CLI::Range(2, 1000));
    cmd_scan->add_option("--q-max", q_max)->required()->check(CLI::Range(2, 1000));
    cmd_scan->add_option("--g-max", g_max)->check(CLI::NonNegativeNumber);
    cmd_scan->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    cmd_scan->add_option("--out", out_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::string out_path = resolve_out(out_flag);

        if (cmd_torsion->parsed()) {
            const TorusKnot k = make_knot(p, q);
            if (format == "json")
                sink(torsion_report(k, g_max).dump(2) + "\n", out_path);
            else if (format == "csv")
                sink(torsion_csv(k), out_path);
            else
                sink(torsion_text(k, g_max), out_path);
            return 0;
        }

        if (cmd_verify->parsed()) {
            const TorusKnot k = make_knot(p, q);
            const auto results = verify_knot(k, {.g_max = g_max, .inject_fusion_fault = inject_fault});
            sink(format == "json" ? verify_json(k, results).dump(2) + "\n" : verify_text(k, results), out_path);
            return all_pass(results) ? 0 : 1;
        }

        if (cmd_verlinde->parsed()) {
            const TorusKnot k = make_knot(p, q);
            const MultiIndex n = MultiIndex::parse(punctures);
            check_multi_index(k, n);
            const json report = verlinde_report(k, g, n);
            if (format == "json") {
                sink(report.dump(2) + "\n", out_path);
            } else {
                std::string text = k.name() + " g=" + std::to_string(g) + " n=" + n.str() + "\n";
                text += "rational route: " + report["routes"]["rational"].get<std::string>() + "\n";
                text += "trig route:     " + report["routes"]["trig"].get<std::string>() + "\n";
                text += std::string("agree: ") + (report["agree"].get<bool>() ? "yes" : "NO") + "\n";
                sink(text, out_path);
            }
            return report["agree"].get<bool>() ? 0 : 1;
        }

        if (cmd_curve->parsed()) {
            const TorusKnot k = make_knot(p, q);
            if (t_min >= t_max) throw std::invalid_argument("curve: need t-min < t-max");
            if (!out_path.empty()) {
                fs::create_directories(out_path);
                const std::string base = "curve_" + std::to_string(k.p()) + "_" + std::to_string(k.q());
                const fs::path csv_path = fs::path(out_path) / (base + ".csv");
                const fs::path json_path = fs::path(out_path) / (base + ".json");
                sink(curve_csv(k, samples, t_min, t_max), csv_path.string());
                sink(curve_report(k).dump(2) + "\n", json_path.string());
                std::cout << csv_path.string() << "\n" << json_path.string() << "\n";
            } else if (format == "json") {
                std::cout << curve_report(k).dump(2) << "\n";
            } else {
                std::cout << curve_csv(k, samples, t_min, t_max);
            }
            return 0;
        }

        if (cmd_scan->parsed()) {
            std::vector<IntegralityReport> reports;
            for (int pp = 2; pp <= p_max; ++pp)
                for (int qq = pp + 1; qq <= q_max; ++qq) {
                    if (std::gcd(pp, qq) != 1) continue;
                    reports.push_back(integrality_report(make_knot(pp, qq), g_max));
                }
            bool ok = true;
            for (const auto& rep : reports) ok = ok && rep.all_ok;
            if (format == "json") {
                json rows = json::array();
                for (const auto& rep : reports) rows.push_back(integrality_json(rep));
                sink(json{{"p_max", p_max}, {"q_max", q_max}, {"g_max", g_max}, {"rows", rows}, {"ok", ok}}.dump(2) +
                         "\n",
                     out_path);
            } else {
                sink(scan_text(reports), out_path);
            }
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
