#include "zfr/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "zfr/reference.hpp"
#include "zfr/special_functions.hpp"

namespace zfr {

using nlohmann::json;

std::vector<std::string> RunConfig::resolved_cases() const {
    std::vector<std::string> out;
    if (cases.empty()) {
        for (CaseId id : all_case_ids()) out.push_back(case_name(id));
    } else {
        for (const auto& c : cases) out.push_back(case_name(parse_case_id(c)));
    }
    return out;
}

OptimizerOptions RunConfig::optimizer_options() const {
    OptimizerOptions o;
    o.quadrature.abs_tol = quadrature_tol;
    o.budget.strict_paper_mode = strict_paper_mode;
    return o;
}

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "pretty") return OutputFormat::pretty;
    throw ConfigError("unknown format: " + s);
}

namespace {
const char* format_name(OutputFormat f) {
    return f == OutputFormat::csv ? "csv" : f == OutputFormat::json ? "json" : "pretty";
}

json pin_to_json(const Pin& p) {
    json j = json::object();
    if (p.theta) j["theta"] = *p.theta;
    if (p.t0) j["t0"] = *p.t0;
    if (p.r) j["r"] = *p.r;
    if (p.R) j["R"] = *p.R;
    return j;
}

Pin pin_from_json(const json& j) {
    Pin p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "theta") p.theta = it.value().get<double>();
        else if (it.key() == "t0") p.t0 = it.value().get<long>();
        else if (it.key() == "r") p.r = it.value().get<double>();
        else if (it.key() == "R") p.R = it.value().get<double>();
        else throw ConfigError("unknown pin key: " + it.key());
    }
    return p;
}
}  // namespace

Pin parse_pin(const std::string& spec) {
    Pin p;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("pin entries must be K=V: " + item);
        const std::string k = item.substr(0, eq), v = item.substr(eq + 1);
        try {
            if (k == "theta") p.theta = std::stod(v);
            else if (k == "t0") p.t0 = std::stol(v);
            else if (k == "r") p.r = std::stod(v);
            else if (k == "R") p.R = std::stod(v);
            else throw ConfigError("unknown pin key: " + k);
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const ConfigError*>(&e)) throw;
            throw ConfigError("bad pin value: " + item);
        }
    }
    return p;
}

RunConfig parse_run_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    RunConfig cfg;
    try {
        if (j.contains("cases")) {
            for (const auto& c : j.at("cases")) cfg.cases.push_back(case_name(parse_case_id(c.get<std::string>())));
        }
        if (j.contains("overrides"))
            for (auto it = j.at("overrides").begin(); it != j.at("overrides").end(); ++it)
                cfg.overrides[case_name(parse_case_id(it.key()))] = pin_from_json(it.value());
        if (j.contains("quadrature_tol")) cfg.quadrature_tol = j.at("quadrature_tol").get<double>();
        if (j.contains("format")) cfg.format = parse_format(j.at("format").get<std::string>());
        if (j.contains("strict_paper_mode")) cfg.strict_paper_mode = j.at("strict_paper_mode").get<bool>();
        if (j.contains("timestamp")) cfg.timestamp = j.at("timestamp").get<bool>();
        if (j.contains("out")) cfg.out_path = j.at("out").get<std::string>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    if (!(cfg.quadrature_tol > 0.0 && cfg.quadrature_tol <= 1e-9))
        throw ConfigError("quadrature_tol must lie in (0, 1e-9]");
    return cfg;
}

std::string emit_run_config(const RunConfig& cfg) {
    json j;
    j["cases"] = cfg.cases;
    j["overrides"] = json::object();
    for (const auto& [k, p] : cfg.overrides) j["overrides"][k] = pin_to_json(p);
    j["quadrature_tol"] = cfg.quadrature_tol;
    j["format"] = format_name(cfg.format);
    j["strict_paper_mode"] = cfg.strict_paper_mode;
    j["timestamp"] = cfg.timestamp;
    if (cfg.out_path) j["out"] = *cfg.out_path;
    return j.dump(2);
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw ConfigError("bad number: " + s);
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

json row_to_json(const CaseResult& r) {
    const ParameterPoint& p = r.point;
    return json{{"step", r.step},       {"theta", p.theta},   {"t0", p.t0},         {"R", p.R},
                {"r", p.r},             {"kappa", p.kappa},   {"delta", p.delta},   {"eta0", p.eta0},
                {"e_eta0", r.e_eta0},   {"omega0", p.omega0}, {"R0", r.R0},         {"sigma0", p.sigma0},
                {"alpha", p.alpha},     {"converged", r.converged}};
}

CaseResult row_from_json(const json& j, const std::string& name) {
    CaseResult r;
    r.case_name = name;
    r.step = j.at("step").get<int>();
    ParameterPoint& p = r.point;
    p.theta = j.at("theta").get<double>();
    p.t0 = j.at("t0").get<long>();
    p.R = j.at("R").get<double>();
    p.r = j.at("r").get<double>();
    p.kappa = j.at("kappa").get<double>();
    p.delta = j.at("delta").get<double>();
    p.eta0 = j.at("eta0").get<double>();
    r.e_eta0 = j.at("e_eta0").get<double>();
    p.omega0 = j.at("omega0").get<double>();
    r.R0 = j.at("R0").get<double>();
    p.sigma0 = j.value("sigma0", 1.0 - p.omega0 * p.eta0);
    p.alpha = j.value("alpha", 0.0);
    r.converged = j.value("converged", false);
    return r;
}

}  // namespace

std::string emit_csv(const std::vector<CaseBlock>& blocks, const std::optional<std::string>& timestamp) {
    std::ostringstream os;
    if (timestamp) os << "# generated " << *timestamp << "\n";
    os << kCsvHeader << "\n";
    for (const auto& b : blocks) {
        os << "# case " << b.case_name << "\n";
        for (const auto& r : b.rows) {
            const ParameterPoint& p = r.point;
            os << r.step << ',' << format_double(p.theta) << ',' << p.t0 << ',' << format_double(p.R) << ','
               << format_double(p.r) << ',' << format_double(p.kappa) << ',' << format_double(p.delta) << ','
               << format_double(p.eta0) << ',' << format_double(r.e_eta0) << ',' << format_double(p.omega0)
               << ',' << format_double(r.R0) << "\n";
        }
    }
    return os.str();
}

std::vector<CaseBlock> parse_csv(const std::string& text) {
    std::vector<CaseBlock> blocks;
    std::stringstream ss(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("# case ", 0) == 0) {
            const std::string name = line.substr(7);
            blocks.push_back({case_name(parse_case_id(name)), {}});
            continue;
        }
        if (line[0] == '#') continue;
        if (!header_seen) {
            if (line != kCsvHeader) throw ConfigError("unexpected CSV header: " + line);
            header_seen = true;
            continue;
        }
        if (blocks.empty()) throw ConfigError("CSV row before any '# case' line");
        const auto f = split(line, ',');
        if (f.size() != 11) throw ConfigError("CSV row needs 11 fields: " + line);
        CaseResult r;
        r.case_name = blocks.back().case_name;
        r.step = static_cast<int>(parse_double(f[0]));
        ParameterPoint& p = r.point;
        p.theta = parse_double(f[1]);
        p.t0 = static_cast<long>(parse_double(f[2]));
        p.R = parse_double(f[3]);
        p.r = parse_double(f[4]);
        p.kappa = parse_double(f[5]);
        p.delta = parse_double(f[6]);
        p.eta0 = parse_double(f[7]);
        r.e_eta0 = parse_double(f[8]);
        p.omega0 = parse_double(f[9]);
        r.R0 = parse_double(f[10]);
        p.sigma0 = 1.0 - p.omega0 * p.eta0;
        r.converged = r.R0 > p.r && r.R0 <= p.r + 1e-3;
        blocks.back().rows.push_back(r);
    }
    if (!header_seen) throw ConfigError("CSV has no header");
    return blocks;
}

std::string emit_json(const std::vector<CaseBlock>& blocks, const std::optional<std::string>& timestamp) {
    json j;
    if (timestamp) j["generated"] = *timestamp;
    j["cases"] = json::array();
    for (const auto& b : blocks) {
        json rows = json::array();
        for (const auto& r : b.rows) rows.push_back(row_to_json(r));
        j["cases"].push_back({{"case", b.case_name}, {"rows", rows}});
    }
    return j.dump(2) + "\n";
}

std::vector<CaseBlock> parse_json(const std::string& text) {
    std::vector<CaseBlock> blocks;
    try {
        const json j = json::parse(text);
        for (const auto& c : j.at("cases")) {
            CaseBlock b{case_name(parse_case_id(c.at("case").get<std::string>())), {}};
            for (const auto& r : c.at("rows")) b.rows.push_back(row_from_json(r, b.case_name));
            blocks.push_back(std::move(b));
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed results JSON: ") + e.what());
    }
    return blocks;
}

std::vector<CaseBlock> parse_results(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return parse_json(text);
    return parse_csv(text);
}

std::string emit_pretty(const std::vector<CaseBlock>& blocks) {
    std::ostringstream os;
    os << std::fixed;
    for (const auto& b : blocks) {
        os << "Case " << b.case_name << "\n";
        os << " step  theta    t0      R       r      kappa   delta   eta0    e(eta0)   omega0  R0      conv\n";
        for (const auto& r : b.rows) {
            const ParameterPoint& p = r.point;
            os << std::setw(5) << r.step << "  " << std::setprecision(4) << p.theta << std::setw(6) << p.t0
               << "  " << p.R << "  " << std::setprecision(3) << p.r << "  " << std::setprecision(4) << p.kappa
               << "  " << p.delta << "  " << p.eta0 << "  " << std::setw(8) << std::setprecision(3) << r.e_eta0
               << "  " << std::setprecision(3) << p.omega0 << "   " << std::setprecision(4) << r.R0 << "  "
               << (r.converged ? "yes" : "no") << "\n";
        }
    }
    return os.str();
}

double compare_threshold(const std::string& column, double reference) {
    if (column == "R0" || column == "r" || column == "omega0" || column == "eta0") return 2e-3;
    if (column == "kappa" || column == "delta") return 5e-4;
    if (column == "e_eta0") return std::max(0.05, 0.1 * std::abs(reference));
    return 0.0;
}

namespace {
double column_value(const CaseResult& r, const std::string& col) {
    const ParameterPoint& p = r.point;
    if (col == "theta") return p.theta;
    if (col == "t0") return static_cast<double>(p.t0);
    if (col == "R") return p.R;
    if (col == "r") return p.r;
    if (col == "kappa") return p.kappa;
    if (col == "delta") return p.delta;
    if (col == "eta0") return p.eta0;
    if (col == "e_eta0") return r.e_eta0;
    if (col == "omega0") return p.omega0;
    return r.R0;
}
}  // namespace

DiffReport compare(const std::vector<CaseBlock>& results) {
    static const char* kColumns[] = {"theta", "t0", "R", "r", "kappa", "delta", "eta0", "e_eta0", "omega0", "R0"};
    DiffReport rep;
    for (const auto& b : results) {
        const auto refs = reference_rows(b.case_name);
        if (refs.empty()) {
            rep.structural.push_back("no reference rows for case " + b.case_name);
            continue;
        }
        for (const auto& ref : refs) {
            const CaseResult* row = nullptr;
            for (const auto& r : b.rows)
                if (r.step == ref.step) row = &r;
            if (row == nullptr) {
                rep.structural.push_back(b.case_name + " step " + std::to_string(ref.step) + " missing");
                continue;
            }
            for (const char* col : kColumns) {
                CellDiff d{b.case_name, ref.step, col, column_value(*row, col), ref.num(col)};
                d.abs_diff = std::abs(d.computed - d.reference);
                d.threshold = compare_threshold(col, d.reference);
                d.status = d.threshold == 0.0 ? CellStatus::info
                                              : (d.abs_diff <= d.threshold + 1e-12 ? CellStatus::pass : CellStatus::fail);
                rep.cells.push_back(d);
            }
        }
        for (const auto& r : b.rows)
            if (r.step > refs.back().step)
                rep.structural.push_back(b.case_name + " step " + std::to_string(r.step) +
                                         " has no reference row (extra iteration)");
        if (!b.rows.empty()) {
            FinalDiff f{b.case_name, b.rows.back().R0, refs.back().num("R0")};
            f.abs_diff = std::abs(f.computed - f.reference);
            f.rel_diff = f.abs_diff / std::abs(f.reference);
            f.tier = f.abs_diff <= 2e-3 + 1e-12 ? FinalTier::within_2e3
                     : f.rel_diff <= 1e-2       ? FinalTier::within_1pct
                                                : FinalTier::fail;
            rep.finals.push_back(f);
        }
    }
    return rep;
}

bool DiffReport::cells_pass() const {
    for (const auto& c : cells)
        if (c.status == CellStatus::fail) return false;
    return true;
}

bool DiffReport::finals_within_1pct() const {
    for (const auto& f : finals)
        if (f.tier == FinalTier::fail) return false;
    return !finals.empty();
}

bool DiffReport::finals_within_2e3() const {
    for (const auto& f : finals)
        if (f.tier != FinalTier::within_2e3) return false;
    return !finals.empty();
}

std::string DiffReport::render() const {
    std::ostringstream os;
    os << "final R0\n";
    for (const auto& f : finals) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "  %-6s computed %.4f  reference %.4f  |diff| %.4f (%.3f%%)  %s\n",
                      f.case_name.c_str(), f.computed, f.reference, f.abs_diff, 100.0 * f.rel_diff,
                      f.tier == FinalTier::within_2e3    ? "ok(2e-3)"
                      : f.tier == FinalTier::within_1pct ? "ok(1%) discrepancy"
                                                         : "FAIL(>1%)");
        os << buf;
    }
    os << "cells (failures and informational deviations)\n";
    for (const auto& c : cells) {
        if (c.status == CellStatus::pass) continue;
        if (c.status == CellStatus::info && c.abs_diff == 0.0) continue;
        char buf[200];
        std::snprintf(buf, sizeof buf, "  %-6s step %d %-7s computed %-12.6g reference %-10.6g |diff| %-10.4g %s\n",
                      c.case_name.c_str(), c.step, c.column.c_str(), c.computed, c.reference, c.abs_diff,
                      c.status == CellStatus::fail ? "FAIL" : "info");
        os << buf;
    }
    for (const auto& s : structural) os << "structural: " << s << "\n";
    return os.str();
}

std::vector<CaseBlock> reference_as_blocks() {
    std::vector<CaseBlock> blocks;
    for (const auto& ref : reference_table()) {
        if (blocks.empty() || blocks.back().case_name != ref.case_name) blocks.push_back({ref.case_name, {}});
        CaseResult r;
        r.case_name = ref.case_name;
        r.step = ref.step;
        r.point.theta = ref.num("theta");
        r.point.t0 = std::stol(ref.t0);
        r.point.R = ref.num("R");
        r.point.r = ref.num("r");
        r.point.kappa = ref.num("kappa");
        r.point.delta = ref.num("delta");
        r.point.eta0 = ref.num("eta0");
        r.point.omega0 = ref.num("omega0");
        r.point.alpha = ref.alpha.empty() ? 0.0 : ref.num("alpha");
        r.point.sigma0 = 1.0 - r.point.omega0 * r.point.eta0;
        r.e_eta0 = ref.num("e_eta0");
        r.R0 = ref.num("R0");
        r.converged = true;
        blocks.back().rows.push_back(r);
    }
    return blocks;
}

}  // namespace zfr
