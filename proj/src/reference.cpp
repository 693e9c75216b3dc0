#include "zfr/reference.hpp"

#include <stdexcept>

namespace zfr {

double ReferenceRow::num(const std::string& field) const {
    const std::string* s = nullptr;
    if (field == "alpha") s = &alpha;
    else if (field == "theta") s = &theta;
    else if (field == "t0") s = &t0;
    else if (field == "R") s = &R;
    else if (field == "r") s = &r;
    else if (field == "kappa") s = &kappa;
    else if (field == "delta") s = &delta;
    else if (field == "eta0") s = &eta0;
    else if (field == "e_eta0") s = &e_eta0;
    else if (field == "omega0") s = &omega0;
    else if (field == "R0") s = &R0;
    if (s == nullptr || s->empty()) throw std::out_of_range("reference row has no field " + field);
    return std::stod(*s);
}

const std::vector<ReferenceRow>& reference_table() {
    static const std::vector<ReferenceRow> rows = {
        // case, step, alpha, theta, t0, R, r, kappa, delta, eta0, e(eta0), omega0, R0
        {"I.A", 1, "", "1.8552", "10", "9.6460", "6.035", "0.4353", "0.6220", "0.0167", "-1.34", "0.548", "6.0352"},
        {"I.A", 2, "", "1.8501", "34", "6.0352", "5.860", "0.4295", "0.6238", "0.0172", "-0.02", "0.851", "5.8609"},
        {"I.A", 3, "", "1.8498", "36", "5.8609", "5.847", "0.42921", "0.6240", "0.0172", "-0.90", "0.875", "5.8476"},
        {"I.A", 4, "", "1.8497", "36", "5.8476", "5.846", "0.4290", "0.6240", "0.0172", "-0.86", "0.876", "5.8465"},
        {"I.B", 1, "", "1.8632", "52", "9.6460", "6.295", "0.4259", "0.6255", "0.0335", "-0.06", "0.352", "6.2952"},
        {"I.B", 2, "", "1.8593", "162", "6.2952", "6.245", "0.4212", "0.6270", "0.0338", "-0.04", "0.477", "6.2457"},
        {"I.B", 3, "", "1.8593", "163", "6.2457", "6.244", "0.4211", "0.6271", "0.0338", "-0.08", "0.480", "6.2443"},
        {"I.C", 1, "", "1.8636", "38", "9.6460", "6.290", "0.4255", "0.6259", "0.0335", "-0.20", "0.364", "6.2908"},
        {"I.C", 2, "", "1.8607", "120", "6.2908", "6.240", "0.4207", "0.6273", "0.0338", "-0.01", "0.491", "6.2402"},
        {"II.A", 1, "2.6614", "1.8935", "21", "9.6460", "6.396", "0.4269", "0.6250", "0.0330", "-0.05", "0.394", "6.3970"},
        {"II.B", 1, "4.2743", "1.8720", "32", "9.6460", "6.298", "0.4259", "0.6255", "0.033", "-1.30", "0.371", "6.2995"},
        {"II.C", 1, "6.9081", "1.8640", "31", "9.6460", "6.287", "0.4253", "0.6257", "0.033", "-0.69", "0.372", "6.2880"},
        {"III.A", 1, "2.6614", "1.750", "150", "9.6460", "6.392", "0.4094", "0.6322", "0.033", "-0.001", "0.321", "6.3931"},
        {"III.B", 1, "4.2743", "1.700", "89", "9.6460", "6.297", "0.3816", "0.6428", "0.033", "-0.16", "0.333", "6.2981"},
        {"III.C", 1, "6.9081", "1.661", "659", "9.6460", "5.366", "0.3004", "0.6714", "0.039", "-0.013", "0.234", "5.3661"},
        {"IV.A", 1, "", "1.9476", "42", "9.6460", "1.119", "0.4178", "0.6293", "0.073", "-0.063", "0.088", "1.1200"},
        {"IV.A", 2, "", "1.9270", "94", "1.1200", "1.097", "0.3673", "0.6457", "0.074", "-0.003", "0.712", "1.0977"},
        {"IV.A", 3, "", "1.9263", "100", "1.0977", "1.097", "0.3663", "0.6461", "0.074", "-0.006", "0.723", "1.0971"},
        {"IV.B", 1, "", "1.9359", "27", "9.6460", "2.146", "0.4335", "0.6230", "0.038", "-0.112", "0.173", "2.1466"},
        {"IV.B", 2, "", "1.9208", "60", "2.1466", "2.045", "0.4100", "0.6305", "0.040", "-0.028", "0.710", "2.0452"},
    };
    return rows;
}

std::vector<ReferenceRow> reference_rows(const std::string& case_name) {
    std::vector<ReferenceRow> out;
    for (const auto& r : reference_table())
        if (r.case_name == case_name) out.push_back(r);
    return out;
}

const ReferenceRow& reference_final(const std::string& case_name) {
    const ReferenceRow* last = nullptr;
    for (const auto& r : reference_table())
        if (r.case_name == case_name) last = &r;
    if (last == nullptr) throw std::out_of_range("no reference rows for " + case_name);
    return *last;
}

}  // namespace zfr
