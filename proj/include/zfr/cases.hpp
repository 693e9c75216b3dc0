#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zfr/test_function.hpp"
#include "zfr/trig_polynomials.hpp"

namespace zfr {

enum class CaseId { IA, IB, IC, IIA, IIB, IIC, IIIA, IIIB, IIIC, IVA, IVB };
enum class CaseFamily { I, II, III, IV };
enum class AlphaSource { none, threshold_k, table_value };
// Case I variants: the v family used for k >= 1 and the w family paired with a0*w0.
enum class VFamily { v3, v4 };
enum class WFamily { w5, w6 };

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CaseConfig {
    CaseId id = CaseId::IA;
    std::string name;
    CaseFamily family = CaseFamily::I;
    double q0 = 114.0;
    double Y0 = 1.0;
    std::vector<int> principal_k;  // Case II: indices using v1 and w0
    double main_coeff = 1.0;
    DenominatorVariant denominator = DenominatorVariant::caseI;
    AlphaSource alpha_source = AlphaSource::none;
    double alpha_table = 0.0;  // table_value
    int threshold_k = 0;       // threshold_k
    // Case II: the region split |gamma0| >= alpha*eta needs threshold <= alpha_bound.
    double alpha_bound = 0.0;
    std::optional<CosinePolynomial> trig;
    int multiplicity = 0;  // Case III/IV: n in v0 + n*v2
    VFamily v_family = VFamily::v3;
    WFamily w_family = WFamily::w6;
    bool iterate_R = true;
    double r_lower = 5.0;
};

const std::vector<CaseId>& all_case_ids();
CaseConfig case_config(CaseId id);
std::string case_name(CaseId id);
// Throws ConfigError for unknown names.
CaseId parse_case_id(const std::string& name);

}  // namespace zfr
