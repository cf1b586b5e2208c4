#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "higgsrg/bounds.hpp"

using namespace higgsrg;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gauge envelopes bracket the central trajectory", "[bounds]") {
    const input_set in = input_set::defaults();
    const double a1 = inverse_sq(in.g1.value);
    const double a2 = inverse_sq(in.g2.value);
    const double a3 = inverse_sq(in.g3.value);
    for (const double t : {0.0, 5.0, 12.0, 19.4}) {
        const auto central = gauge_analytic(t, a1, a2, a3);
        const auto over = envelope_couplings(t, in, envelope_side::over);
        const auto under = envelope_couplings(t, in, envelope_side::under);
        for (int i = 0; i < 3; ++i) {
            CHECK(under[i] < central[i]);
            CHECK(central[i] < over[i]);
        }
    }
}

TEST_CASE("envelope radicands are the shifted inverse squares", "[bounds]") {
    const input_set in = input_set::defaults();
    const auto r0 = envelope_radicands(0.0, in, envelope_side::over);
    CHECK_THAT(r0[0],
               WithinRel(inverse_sq(in.g1.value) -
                             inverse_sq_error(in.g1.value, in.g1.error),
                         1e-14));
    const auto r5 = envelope_radicands(5.0, in, envelope_side::under);
    CHECK_THAT(r5[1],
               WithinRel(inverse_sq(in.g2.value) +
                             inverse_sq_error(in.g2.value, in.g2.error) +
                             constants::c2 * 5.0,
                         1e-14));
}

TEST_CASE("extremal top trajectories stay extremal", "[bounds]") {
    const input_set in = input_set::defaults();
    const double tau = 19.441998114904649;
    CHECK_THAT(extremal_top(in, envelope_side::under, tau),
               WithinRel(0.37229929328164085, 1e-9));
    CHECK_THAT(extremal_top(in, envelope_side::over, tau),
               WithinRel(0.40093231405556778, 1e-9));
    CHECK_THAT(extremal_top(input_set::defaults(top_mode::ewfit), envelope_side::under, tau),
               WithinRel(0.34148309047499359, 1e-9));

    // central trajectory lies between the extremal ones
    coupling_state y0;
    y0.g1 = in.g1.value;
    y0.g2 = in.g2.value;
    y0.g3 = in.g3.value;
    y0.gt = gt_initial(in.mT.value, in.mW.value, in.g2.value);
    active_set act;
    act.lambda = false;
    const double central = integrate_to(y0, tau, {}, act).gt;
    CHECK(extremal_top(in, envelope_side::under, tau) < central);
    CHECK(central < extremal_top(in, envelope_side::over, tau));
}

TEST_CASE("comparison coefficients for both top modes", "[bounds]") {
    const comparison_coefficients cc = build_comparison_coefficients(input_set::defaults());
    CHECK(cc.l1 == 6.0 / constants::pi_sq);
    CHECK_THAT(cc.l2, WithinRel(-0.27856113737393545, 1e-9));
    CHECK_THAT(cc.l3, WithinRel(-0.00036590668133923432, 1e-9));
    CHECK_THAT(cc.alpha, WithinRel(-0.22910735228318754, 1e-9));
    CHECK_THAT(cc.beta, WithinRel(-0.053092071235634884, 1e-9));
    CHECK_THAT(cc.alpha, WithinRel(cc.l2 / (2.0 * cc.l1), 1e-14));
    CHECK_THAT(cc.beta, WithinRel(cc.l3 / cc.l1 - cc.alpha * cc.alpha, 1e-14));

    const comparison_coefficients ew =
        build_comparison_coefficients(input_set::defaults(top_mode::ewfit));
    CHECK_THAT(ew.l2, WithinRel(-0.27646243357951755, 1e-9));
    CHECK_THAT(ew.l3, WithinRel(-0.00015260864284559413, 1e-9));
    CHECK_THAT(ew.beta, WithinRel(-0.051953258367727316, 1e-9));
}

TEST_CASE("arcoth domain and inversion", "[bounds]") {
    CHECK_THROWS_AS(arcoth(0.5), numerical_error);
    CHECK_THROWS_AS(arcoth(1.0), numerical_error);
    CHECK_THROWS_AS(arcoth(-1.0), numerical_error);
    for (const double y : {0.3, 1.0, 2.5}) {
        CHECK_THAT(arcoth(1.0 / std::tanh(y)), WithinRel(y, 1e-12));
        CHECK_THAT(arcoth(-1.0 / std::tanh(y)), WithinRel(-y, 1e-12));
    }
}

TEST_CASE("comparison solution passes through its boundary value", "[bounds]") {
    const comparison_coefficients cc = build_comparison_coefficients(input_set::defaults());
    for (const double kappa : {0.1, 1.0, 5.0}) {
        CHECK_THAT(comparison_solution(cc.tc, kappa, cc), WithinAbs(kappa, 1e-12));
    }
}

TEST_CASE("comparison solution branches select by the boundary value", "[bounds]") {
    const comparison_coefficients cc = build_comparison_coefficients(input_set::defaults());
    const double root = std::sqrt(-cc.beta);
    // kappa = 0.1 sits between the fixed points (|x| < 1), larger values outside
    CHECK(std::fabs((0.1 + cc.alpha) / root) < 1.0);
    CHECK(std::fabs((1.0 + cc.alpha) / root) > 1.0);
    CHECK(std::fabs((5.0 + cc.alpha) / root) > 1.0);
    // all branches produce finite values on [0, tc]
    for (const double kappa : {0.1, 1.0, 5.0})
        for (const double t : {0.0, 5.0, 12.0, 19.0})
            CHECK(std::isfinite(comparison_solution(t, kappa, cc)));
    // constant solutions at the fixed points
    const double kappa_plus = root - cc.alpha;
    CHECK_THAT(comparison_solution(3.0, kappa_plus, cc), WithinAbs(kappa_plus, 1e-12));
}

TEST_CASE("comparison solution requires real fixed points", "[bounds]") {
    comparison_coefficients bad;
    bad.l1 = 0.6;
    bad.beta = 0.1;
    bad.tc = 19.3;
    CHECK_THROWS_AS(comparison_solution(5.0, 1.0, bad), numerical_error);
    CHECK_THROWS_AS(asymptotic_upper(5.0, bad), numerical_error);
}

TEST_CASE("asymptotic bound dominates every finite boundary value", "[bounds]") {
    const comparison_coefficients cc = build_comparison_coefficients(input_set::defaults());
    for (const double t : {0.0, 5.0, 12.0, 18.0}) {
        const double as = asymptotic_upper(t, cc);
        for (const double kappa : {0.1, 1.0, 5.0, 50.0})
            CHECK(comparison_solution(t, kappa, cc) < as);
    }
}

TEST_CASE("asymptotic bound diverges at the critical scale", "[bounds]") {
    const comparison_coefficients cc = build_comparison_coefficients(input_set::defaults());
    CHECK_THROWS_AS(asymptotic_upper(cc.tc, cc), numerical_error);
    CHECK_THROWS_AS(asymptotic_upper(cc.tc + 1.0, cc), numerical_error);
    CHECK_THAT(asymptotic_upper(0.0, cc), WithinRel(0.46158709719359137, 1e-9));
}

TEST_CASE("mass bounds for both top modes", "[bounds]") {
    const input_set direct = input_set::defaults();
    CHECK_THAT(lower_bound(direct), WithinRel(131.30189964229146, 1e-9));
    const upper_bound_result ub = upper_bound(direct);
    CHECK_THAT(ub.mh_upper_gev, WithinRel(490.68072740861271, 1e-9));
    CHECK_THAT(ub.lambda_as0, WithinRel(0.46158709719359137, 1e-9));

    const input_set ewfit = input_set::defaults(top_mode::ewfit);
    CHECK_THAT(lower_bound(ewfit), WithinRel(113.86693238949019, 1e-9));
    const upper_bound_result ub_ew = upper_bound(ewfit);
    CHECK_THAT(ub_ew.mh_upper_gev, WithinRel(488.49146729632776, 1e-9));
    CHECK_THAT(ub_ew.lambda_as0, WithinRel(0.45747737849450909, 1e-9));
}

TEST_CASE("bounds report orders lower, central, upper", "[bounds]") {
    for (const top_mode m : {top_mode::direct, top_mode::ewfit}) {
        const input_set in = input_set::defaults(m);
        const bounds_report rep = compute_bounds(in);
        const double central = run_pipeline(in, critical_scale(in)).mh_gev;
        CHECK(rep.mh_lower_gev < central);
        CHECK(central < rep.mh_upper_gev);
        // the bound interval overlaps the window [114, 193)
        CHECK(rep.mh_lower_gev < 193.0);
        CHECK(rep.mh_upper_gev > 114.0);
        CHECK(rep.top_mode_name == to_string(m));
    }
}
