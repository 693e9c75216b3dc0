#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "zfr/checks.hpp"
#include "zfr/report.hpp"

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int do_run(const zfr::RunConfig& cfg) {
    const zfr::OptimizerOptions opts = cfg.optimizer_options();
    const auto names = cfg.resolved_cases();
    std::vector<std::future<zfr::CaseBlock>> jobs;
    for (const auto& name : names) {
        jobs.push_back(std::async(std::launch::async, [&, name] {
            const zfr::CaseConfig c = zfr::case_config(zfr::parse_case_id(name));
            zfr::CaseBlock b{name, {}};
            if (auto it = cfg.overrides.find(name); it != cfg.overrides.end()) {
                b.rows.push_back(zfr::run_pinned(c, it->second, opts));
            } else {
                b.rows = zfr::optimize_case(c, opts);
            }
            return b;
        }));
    }
    std::vector<zfr::CaseBlock> blocks;
    int status = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        try {
            blocks.push_back(jobs[i].get());
            for (const auto& r : blocks.back().rows)
                if (!r.converged) {
                    std::cerr << names[i] << " step " << r.step << ": fixed point not reached (R0 - r = "
                              << r.R0 - r.point.r << ")\n";
                    status = 2;
                }
        } catch (const std::exception& e) {
            std::cerr << names[i] << ": " << e.what() << "\n";
            status = 2;
        }
    }
    const std::optional<std::string> ts = cfg.timestamp ? std::optional<std::string>(utc_timestamp()) : std::nullopt;
    std::string text;
    switch (cfg.format) {
        case zfr::OutputFormat::csv: text = zfr::emit_csv(blocks, ts); break;
        case zfr::OutputFormat::json: text = zfr::emit_json(blocks, ts); break;
        case zfr::OutputFormat::pretty:
            text = (ts ? "# generated " + *ts + "\n" : std::string()) + zfr::emit_pretty(blocks);
            break;
    }
    if (cfg.out_path) {
        std::ofstream out(*cfg.out_path);
        out << text;
        if (!out) {
            std::cerr << "cannot write " << *cfg.out_path << "\n";
            return 1;
        }
    } else {
        std::cout << text;
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zfr: zero-free region constants for Dirichlet L-functions"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "optimize cases and emit table rows");
    std::string cases, format = "pretty", out, config_path;
    std::vector<std::string> pins;
    bool all = false, strict = false, no_ts = false;
    double tol = 0.0;
    run->add_option("--cases", cases, "comma-separated case ids (I.A,...,IV.B)");
    run->add_flag("--all", all, "run all eleven cases");
    run->add_option("--format", format, "csv|json|pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
    run->add_option("--out", out, "output path");
    run->add_option("--pin", pins,
                    "pin parameters: K=V,... with K in theta,t0,r,R; prefix CASE: to target one case");
    run->add_flag("--strict-paper", strict, "w3/w4 divide by r log(q0)");
    run->add_flag("--no-timestamp", no_ts, "omit the generated-at header");
    run->add_option("--config", config_path, "JSON run configuration");
    run->add_option("--quad-tol", tol, "quadrature absolute tolerance");

    auto* cmp = app.add_subcommand("compare", "compare results with the reference tables");
    std::string results_path;
    cmp->add_option("--results", results_path, "CSV or JSON results file")->required();

    auto* check = app.add_subcommand("check", "run the property suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            zfr::RunConfig cfg;
            if (!config_path.empty()) cfg = zfr::parse_run_config(read_file(config_path));
            if (!cases.empty() && !all) {
                cfg.cases.clear();
                std::stringstream ss(cases);
                std::string item;
                while (std::getline(ss, item, ',')) cfg.cases.push_back(item);
            }
            if (all) cfg.cases.clear();
            cfg.resolved_cases();  // validates ids
            if (run->count("--format")) cfg.format = zfr::parse_format(format);
            if (!out.empty()) cfg.out_path = out;
            if (strict) cfg.strict_paper_mode = true;
            if (no_ts) cfg.timestamp = false;
            if (tol > 0.0) cfg.quadrature_tol = tol;
            for (const auto& p : pins) {
                const auto colon = p.find(':');
                if (colon != std::string::npos) {
                    cfg.overrides[zfr::case_name(zfr::parse_case_id(p.substr(0, colon)))] =
                        zfr::parse_pin(p.substr(colon + 1));
                } else {
                    for (const auto& name : cfg.resolved_cases()) cfg.overrides[name] = zfr::parse_pin(p);
                }
            }
            return do_run(cfg);
        }
        if (cmp->parsed()) {
            const auto blocks = zfr::parse_results(read_file(results_path));
            const zfr::DiffReport rep = zfr::compare(blocks);
            std::cout << rep.render();
            return rep.finals_within_1pct() && rep.cells_pass() ? 0 : 1;
        }
        if (check->parsed()) {
            bool ok = true;
            for (const auto& r : zfr::run_property_suite()) {
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " -- " << r.detail << "\n";
                ok = ok && r.passed;
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
