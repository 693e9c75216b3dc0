#pragma once

#include <string>
#include <vector>

namespace zfr {

// One printed row; text fields keep the printed decimals.
struct ReferenceRow {
    std::string case_name;
    int step;
    std::string alpha, theta, t0, R, r, kappa, delta, eta0, e_eta0, omega0, R0;

    double num(const std::string& field) const;
};

const std::vector<ReferenceRow>& reference_table();
std::vector<ReferenceRow> reference_rows(const std::string& case_name);
const ReferenceRow& reference_final(const std::string& case_name);

}  // namespace zfr
