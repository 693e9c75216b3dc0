#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zfr/optimizer.hpp"

namespace zfr {

enum class OutputFormat { csv, json, pretty };

struct CaseBlock {
    std::string case_name;
    std::vector<CaseResult> rows;
};

struct RunConfig {
    std::vector<std::string> cases;  // empty: all eleven
    std::map<std::string, Pin> overrides;
    double quadrature_tol = 1e-11;
    OutputFormat format = OutputFormat::pretty;
    bool strict_paper_mode = false;
    bool timestamp = true;
    std::optional<std::string> out_path;

    std::vector<std::string> resolved_cases() const;
    OptimizerOptions optimizer_options() const;
};

// Throws ConfigError on unknown case ids or malformed fields.
RunConfig parse_run_config(const std::string& json_text);
std::string emit_run_config(const RunConfig& cfg);
// "theta=1.8552,t0=10,r=6.035,R=9.6460"
Pin parse_pin(const std::string& spec);

OutputFormat parse_format(const std::string& s);

inline const char* kCsvHeader = "step,theta,t0,R,r,kappa,delta,eta0,e_eta0,omega0,R0";

// Shortest round-trip decimal.
std::string format_double(double v);

std::string emit_csv(const std::vector<CaseBlock>& blocks, const std::optional<std::string>& timestamp = {});
std::vector<CaseBlock> parse_csv(const std::string& text);
std::string emit_json(const std::vector<CaseBlock>& blocks, const std::optional<std::string>& timestamp = {});
std::vector<CaseBlock> parse_json(const std::string& text);
std::string emit_pretty(const std::vector<CaseBlock>& blocks);
// Detects JSON by a leading '{'.
std::vector<CaseBlock> parse_results(const std::string& text);

enum class CellStatus { pass, fail, info };

struct CellDiff {
    std::string case_name;
    int step = 0;
    std::string column;
    double computed = 0.0;
    double reference = 0.0;
    double abs_diff = 0.0;
    double threshold = 0.0;
    CellStatus status = CellStatus::info;
};

enum class FinalTier { within_2e3, within_1pct, fail };

struct FinalDiff {
    std::string case_name;
    double computed = 0.0, reference = 0.0, abs_diff = 0.0, rel_diff = 0.0;
    FinalTier tier = FinalTier::fail;
};

struct DiffReport {
    std::vector<CellDiff> cells;
    std::vector<FinalDiff> finals;
    std::vector<std::string> structural;  // missing rows / unknown cases

    bool cells_pass() const;
    bool finals_within_1pct() const;
    bool finals_within_2e3() const;
    std::string render() const;
};

// Threshold per column; 0 means informational.
double compare_threshold(const std::string& column, double reference);
DiffReport compare(const std::vector<CaseBlock>& results);
// Reference table rendered as result blocks (self-compare support).
std::vector<CaseBlock> reference_as_blocks();

}  // namespace zfr
