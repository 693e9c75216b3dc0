#include <doctest.h>

#include <cmath>

#include "zfr/optimizer.hpp"
#include "zfr/reference.hpp"
#include "zfr/special_functions.hpp"
#include "zfr/stechkin.hpp"

using namespace zfr;

TEST_SUITE("stechkin") {
    TEST_CASE("kappa functions at eta0 = 0, sigma0 = 1") {
        const ThetaFunction tf(1.8552);
        for (double d : {0.3, 0.5, 0.618, 0.9, 1.0}) {
            CHECK(kappa2(d, 1.0, 0.0, tf.h0(), tf.m_theta()) == doctest::Approx(1.0 / (1.0 + 2.0 * d)).epsilon(1e-14));
            CHECK(kappa3(d, 1.0, 0.0, tf.h0(), tf.m_theta()) ==
                  doctest::Approx(1.0 / (1.0 / d + 1.0 / (1.0 + d))).epsilon(1e-14));
        }
    }

    TEST_CASE("kappa2 stays in the printed range") {
        for (double th : {1.70, 1.75, 1.8552, 1.90}) {
            const ThetaFunction tf(th);
            const double k = kappa2(0.6220, 0.9833, 0.0747, tf.h0(), tf.m_theta());
            CHECK(k >= 0.2236);
            CHECK(k <= 0.4353);
        }
    }

    TEST_CASE("eta0 -> 0 limit") {
        const ThetaFunction tf(1.8552);
        const StechkinParams sp = solve_delta_kappa(1.0, 0.0, tf.h0(), tf.m_theta());
        CHECK(std::abs(sp.delta_q - (std::sqrt(5.0) - 1.0) / 2.0) <= 1e-6);
        CHECK(std::abs(sp.kappa_q - 1.0 / std::sqrt(5.0)) <= 1e-6);
        // Approach along halving eta0.
        double prev_d = 1.0;
        for (double eta = 0.05; eta > 1e-5; eta /= 2.0) {
            const StechkinParams s = solve_delta_kappa(1.0 - 0.3 * eta, eta, tf.h0(), tf.m_theta());
            const double dist = std::abs(s.delta_q - (std::sqrt(5.0) - 1.0) / 2.0);
            CHECK(dist <= prev_d + 1e-3);
            prev_d = dist;
        }
        CHECK(prev_d < 1e-3);
    }

    TEST_CASE("solver output") {
        const ThetaFunction tf(1.75);
        const StechkinParams sp = solve_delta_kappa(0.98, 0.03, tf.h0(), tf.m_theta());
        CHECK(std::abs(kappa2(sp.delta_q, 0.98, 0.03, tf.h0(), tf.m_theta()) -
                       kappa3(sp.delta_q, 0.98, 0.03, tf.h0(), tf.m_theta())) <= 1e-10);
        const StechkinParams again = solve_delta_kappa(0.98, 0.03, tf.h0(), tf.m_theta());
        CHECK(again.delta_q == sp.delta_q);
        CHECK(again.kappa_q == sp.kappa_q);
        const double d = sp.delta_q;
        CHECK(sp.kappa_q >= 1.0 / (1.0 / (d * d * d) + 1.0 / std::pow(1.0 + d, 3)));
        CHECK(sp.kappa_q <= 1.0 / (1.0 / d + 1.0 / (0.95 + d)));
        CHECK_THROWS(solve_delta_kappa(0.4, 0.03, tf.h0(), tf.m_theta()));
    }

    TEST_CASE("printed (kappa, delta) pairs") {
        for (const auto& row : reference_table()) {
            const CaseConfig c = case_config(parse_case_id(row.case_name));
            const ParameterPoint p = derive_point(c, row.num("theta"), long(row.num("t0")), row.num("r"), row.num("R"));
            INFO(row.case_name << " step " << row.step);
            CHECK(std::abs(p.kappa - row.num("kappa")) <= 5e-4);
            CHECK(std::abs(p.delta - row.num("delta")) <= 5e-4);
        }
    }

    TEST_CASE("II.A and IV.A step 3 inputs") {
        const ParameterPoint a = derive_point(case_config(CaseId::IIA), 1.8935, 21, 6.396, 9.6460);
        CHECK(std::abs(a.kappa - 0.4269) <= 5e-4);
        CHECK(std::abs(a.delta - 0.6250) <= 5e-4);
        const auto rows = reference_rows("IV.A");
        const auto& r3 = rows.at(2);
        const ParameterPoint b = derive_point(case_config(CaseId::IVA), r3.num("theta"), long(r3.num("t0")), r3.num("r"),
                                              r3.num("R"));
        CHECK(std::abs(b.kappa - 0.3663) <= 5e-4);
        CHECK(std::abs(b.delta - 0.6461) <= 5e-4);
    }

    TEST_CASE("Stechkin lemma") {
        CHECK(stechkin_inequality_check(0.5, 1.0, 1.01));
        CHECK(stechkin_inequality_check(1.0, 10.0, 2.0));
        CHECK_THROWS(stechkin_inequality_check(0.2, 1.0, 1.5));
        CHECK_THROWS(stechkin_inequality_check(0.7, 1.0, 0.9));
    }
}
