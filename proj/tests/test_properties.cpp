#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "higgsrg/bounds.hpp"
#include "higgsrg/predictor.hpp"

using namespace higgsrg;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("halving the step size scales the pipeline error by ~16", "[properties]") {
    const input_set in = input_set::defaults();
    const double tc = critical_scale(in);
    auto mh_at = [&](double h) {
        integrator_options o;
        o.step_size = h;
        return run_pipeline(in, tc, {}, o).mh_gev;
    };
    const double reference = mh_at(1.0e-4);
    const double err_coarse = std::fabs(mh_at(0.1) - reference);
    const double err_fine = std::fabs(mh_at(0.05) - reference);
    REQUIRE(err_fine > 0.0);
    const double ratio = err_coarse / err_fine;
    CHECK(ratio > 14.0);
    CHECK(ratio < 18.0);
}

TEST_CASE("numeric gauge running tracks the closed form to 1e-9", "[properties]") {
    const input_set in = input_set::defaults();
    const double tc = critical_scale(in);
    coupling_state y0;
    y0.g1 = in.g1.value;
    y0.g2 = in.g2.value;
    y0.g3 = in.g3.value;
    active_set only_gauge;
    only_gauge.top = false;
    only_gauge.lambda = false;
    const coupling_state num = integrate_to(y0, tc, {}, only_gauge);
    const auto exact = gauge_analytic(tc, inverse_sq(in.g1.value), inverse_sq(in.g2.value),
                                      inverse_sq(in.g3.value));
    CHECK_THAT(num.g1, WithinAbs(exact[0], 1e-9));
    CHECK_THAT(num.g2, WithinAbs(exact[1], 1e-9));
    CHECK_THAT(num.g3, WithinAbs(exact[2], 1e-9));
}

TEST_CASE("comparison solution satisfies its own flow equation", "[properties]") {
    const comparison_coefficients cc = build_comparison_coefficients(input_set::defaults());
    const double fd = 1.0e-5;
    for (const double kappa : {0.1, 1.0, 5.0}) {
        for (const double t : {2.0, 7.0, 12.0, 17.0}) {
            const double v = comparison_solution(t, kappa, cc);
            const double deriv = (comparison_solution(t + fd, kappa, cc) -
                                  comparison_solution(t - fd, kappa, cc)) /
                                 (2.0 * fd);
            const double rhs = cc.l1 * v * v + cc.l2 * v + cc.l3;
            CHECK_THAT(deriv - rhs, WithinAbs(0.0, 1e-8));
        }
    }
}

TEST_CASE("comparison solution dominates the integrated quartic flow", "[properties]") {
    const input_set in = input_set::defaults();
    const double tc = critical_scale(in);
    const comparison_coefficients cc = build_comparison_coefficients(in);
    coupling_state y0;
    y0.g1 = in.g1.value;
    y0.g2 = in.g2.value;
    y0.g3 = in.g3.value;
    y0.gt = gt_initial(in.mT.value, in.mW.value, in.g2.value);
    active_set up;
    up.lambda = false;
    coupling_state at_tc = integrate_to(y0, tc, {}, up);

    for (const double kappa : {0.1, 1.0, 5.0}) {
        at_tc.lambda = kappa;
        const flow_trajectory traj = integrate(at_tc, 0.0);
        for (std::size_t i = 0; i < traj.samples.size(); i += 500) {
            const coupling_state& s = traj.samples[i];
            const double bound = comparison_solution(s.t, kappa, cc);
            CHECK(s.lambda <= bound + 1e-12);
        }
        const coupling_state& last = traj.samples.back();
        CHECK(last.lambda <= comparison_solution(last.t, kappa, cc) + 1e-12);
    }
}

TEST_CASE("quartic at the reference scale grows with its boundary value", "[properties]") {
    const input_set in = input_set::defaults();
    const double tc = critical_scale(in);
    double previous = -1.0;
    for (const double kappa : {0.0, 0.05, 0.1123899216301924, 0.5, 2.0}) {
        const double lambda0 = run_pipeline(in, tc, {}, {}, kappa).lambda0;
        CHECK(lambda0 > previous);
        previous = lambda0;
    }
}

TEST_CASE("monte carlo width agrees with the envelope half-width", "[properties]") {
    const input_set in = input_set::defaults();
    integrator_options o;
    o.step_size = 2.0e-3;
    const montecarlo_result mc = propagate_montecarlo(in, 1000, 20617, {}, o);
    const envelope_result env = propagate_envelope(in);
    const double half_width = 0.5 * env.mh_spread();
    CHECK(mc.mh_sd > 0.5 * half_width);
    CHECK(mc.mh_sd < 2.0 * half_width);
}

TEST_CASE("prediction intervals from both top modes overlap", "[properties]") {
    const prediction_report direct = predict(input_set::defaults());
    const prediction_report ewfit = predict(input_set::defaults(top_mode::ewfit));
    const double lo = std::max(direct.mh_gev - direct.mh_err_gev,
                               ewfit.mh_gev - ewfit.mh_err_gev);
    const double hi = std::min(direct.mh_gev + direct.mh_err_gev,
                               ewfit.mh_gev + ewfit.mh_err_gev);
    CHECK(lo < hi);
}
