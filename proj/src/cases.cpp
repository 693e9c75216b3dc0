#include "zfr/cases.hpp"

namespace zfr {

const std::vector<CaseId>& all_case_ids() {
    static const std::vector<CaseId> ids = {CaseId::IA,   CaseId::IB,   CaseId::IC,   CaseId::IIA,
                                            CaseId::IIB,  CaseId::IIC,  CaseId::IIIA, CaseId::IIIB,
                                            CaseId::IIIC, CaseId::IVA,  CaseId::IVB};
    return ids;
}

std::string case_name(CaseId id) {
    switch (id) {
        case CaseId::IA: return "I.A";
        case CaseId::IB: return "I.B";
        case CaseId::IC: return "I.C";
        case CaseId::IIA: return "II.A";
        case CaseId::IIB: return "II.B";
        case CaseId::IIC: return "II.C";
        case CaseId::IIIA: return "III.A";
        case CaseId::IIIB: return "III.B";
        case CaseId::IIIC: return "III.C";
        case CaseId::IVA: return "IV.A";
        case CaseId::IVB: return "IV.B";
    }
    throw ConfigError("unknown case id");
}

CaseId parse_case_id(const std::string& name) {
    for (CaseId id : all_case_ids())
        if (case_name(id) == name) return id;
    throw ConfigError("unknown case id: " + name);
}

CaseConfig case_config(CaseId id) {
    const CosinePolynomial P1 = p1();
    const double A = P1.tail_sum();
    auto base = [&](CaseFamily fam, double q0, double Y0) {
        CaseConfig c;
        c.id = id;
        c.name = case_name(id);
        c.family = fam;
        c.q0 = q0;
        c.Y0 = Y0;
        c.main_coeff = A;
        return c;
    };
    CaseConfig c = base(CaseFamily::I, 114.0, 1.0);
    switch (id) {
        case CaseId::IA:
            c = base(CaseFamily::I, 2.0, 1e4);
            break;
        case CaseId::IB:
            break;
        case CaseId::IC:
            c.v_family = VFamily::v4;
            c.w_family = WFamily::w5;
            break;
        case CaseId::IIA:
        case CaseId::IIB:
        case CaseId::IIC:
            c = base(CaseFamily::II, 114.0, 1.0);
            c.principal_k = id == CaseId::IIA ? std::vector<int>{4}
                            : id == CaseId::IIB ? std::vector<int>{3}
                                                : std::vector<int>{2, 4};
            c.alpha_source = AlphaSource::threshold_k;
            c.threshold_k = c.principal_k.front();
            c.alpha_bound = id == CaseId::IIA ? 2.6614 : id == CaseId::IIB ? 4.2743 : 6.9081;
            c.iterate_R = false;
            break;
        case CaseId::IIIA:
        case CaseId::IIIB:
        case CaseId::IIIC:
            c = base(CaseFamily::III, 114.0, 1.0);
            c.multiplicity = id == CaseId::IIIA ? 3 : id == CaseId::IIIB ? 2 : 1;
            c.main_coeff = c.multiplicity;
            c.denominator = DenominatorVariant::caseIII_IV;
            c.alpha_source = AlphaSource::table_value;
            c.alpha_table = id == CaseId::IIIA ? 2.6614 : id == CaseId::IIIB ? 4.2743 : 6.9081;
            c.iterate_R = false;
            break;
        case CaseId::IVA:
        case CaseId::IVB:
            c = base(CaseFamily::IV, 2e5, 1.0);
            c.multiplicity = id == CaseId::IVA ? 1 : 3;
            c.main_coeff = id == CaseId::IVA ? 1.0 : 2.0;
            c.denominator = DenominatorVariant::caseIII_IV;
            c.r_lower = 1.0;
            break;
    }
    if (c.family == CaseFamily::I || c.family == CaseFamily::II) c.trig = P1;
    return c;
}

}  // namespace zfr
