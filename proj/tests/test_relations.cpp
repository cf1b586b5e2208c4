#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "higgsrg/relations.hpp"

using namespace higgsrg;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("hypercharge sums for the standard content", "[relations]") {
    const auto [yq, yl] = hypercharge_sums(hypercharge_content::standard());
    CHECK(yq == 11.0 / 18.0);
    CHECK(yl == 1.5);
}

TEST_CASE("hypercharge consistency is enforced exactly", "[relations]") {
    hypercharge_content rep;
    rep.ye_r = rational(-9, 10); // breaks the lepton splitting
    CHECK_THROWS_WITH(hypercharge_sums(rep), ContainsSubstring("yl_l - ye_r"));

    rep = hypercharge_content::standard();
    rep.yd_r = rational(-1, 4);
    CHECK_THROWS_WITH(hypercharge_sums(rep), ContainsSubstring("yq_l - yd_r"));

    rep = hypercharge_content::standard();
    rep.has_nu_r = true;
    rep.ynu_r = rational(1, 7);
    CHECK_THROWS_WITH(hypercharge_sums(rep), ContainsSubstring("ynu_r"));

    rep = hypercharge_content::standard();
    rep.n_colors = 0;
    CHECK_THROWS_AS(hypercharge_sums(rep), input_error);
}

TEST_CASE("critical scale from the reference inputs", "[relations]") {
    const input_set in = input_set::defaults();
    const double tc = critical_scale(in);
    CHECK_THAT(tc, WithinRel(19.323494632743351, 1e-12));
    CHECK_THAT(critical_scale_error(in), WithinRel(0.11850348216129933, 1e-12));

    // closed form and the general linear solve agree
    const double a1 = inverse_sq(in.g1.value);
    const double a2 = inverse_sq(in.g2.value);
    const double a3 = inverse_sq(in.g3.value);
    const double closed = critical_scale_closed(a1, a2, a3);
    CHECK_THAT(closed, WithinAbs(tc, 1e-9));
}

TEST_CASE("adding a zero-hypercharge neutrino leaves the scale invariant", "[relations]") {
    const input_set in = input_set::defaults();
    hypercharge_content with_nu = hypercharge_content::standard();
    with_nu.has_nu_r = true;
    with_nu.ynu_r = rational(0);
    const auto [yq0, yl0] = hypercharge_sums(hypercharge_content::standard());
    const auto [yq1, yl1] = hypercharge_sums(with_nu);
    CHECK(yq0 == yq1);
    CHECK(yl0 == yl1);
    // bit-identical, comfortably below any 1e-12 requirement
    CHECK(critical_scale(in, with_nu) == critical_scale(in));
    CHECK(critical_scale_error(in, with_nu) == critical_scale_error(in));
}

TEST_CASE("all-zero hypercharge content still yields a finite scale", "[relations]") {
    hypercharge_content rep;
    rep.yq_l = rational(0);
    rep.yd_r = rational(0);
    rep.yu_r = rational(0);
    rep.yl_l = rational(0);
    rep.ye_r = rational(0);
    const auto [yq, yl] = hypercharge_sums(rep);
    CHECK(yq == 0.0);
    CHECK(yl == 0.0);
    CHECK(std::isfinite(critical_scale(input_set::defaults(), rep)));
}

TEST_CASE("critical energy and its uncertainty", "[relations]") {
    const input_set in = input_set::defaults();
    const double tc = critical_scale(in);
    const double tc_err = critical_scale_error(in);
    const double ec = tc_to_energy(tc, in.mZ.value);
    CHECK_THAT(ec, WithinRel(22491730733.931236, 1e-12));
    const double ec_err = critical_energy_error(tc, tc_err, in.mZ.value, in.mZ.error);
    CHECK_THAT(ec_err, WithinRel(2672112688.2432694, 1e-12));

    // the sinh/cosh form is exactly the half-width of the corner interval
    const double e_max = (in.mZ.value + in.mZ.error) * std::exp(tc + tc_err);
    const double e_min = (in.mZ.value - in.mZ.error) * std::exp(tc - tc_err);
    CHECK_THAT(ec_err, WithinRel(0.5 * (e_max - e_min), 1e-12));
}

TEST_CASE("quartic boundary conventions", "[relations]") {
    CHECK(lambda_boundary(0.4, bc_convention::quadratic_yukawa) == 0.75 * (0.4 * 0.4));
    CHECK(lambda_boundary(0.4, bc_convention::linear_yukawa) == 0.75 * 0.4);
    CHECK(bc_convention_from_string("gt2") == bc_convention::quadratic_yukawa);
    CHECK(bc_convention_from_string("gt") == bc_convention::linear_yukawa);
    CHECK_THROWS_AS(bc_convention_from_string("cubic"), input_error);
}

TEST_CASE("boundary-condition solution at the critical scale", "[relations]") {
    const input_set in = input_set::defaults();
    const double tc = critical_scale(in);
    const commutant_solution sol = solve_commutant(tc, in);

    CHECK_THAT(sol.gt_tc, WithinRel(0.38710880749507176, 1e-9));
    CHECK_THAT(sol.tr_x, WithinRel(7.595919264793995, 1e-12));
    CHECK_THAT(sol.a_scale, WithinRel(3.8923298049300796, 1e-12));
    // the g1 relation closes by construction at t_c
    CHECK_THAT(sol.residual_g1, WithinAbs(0.0, 1e-12));
    CHECK_FALSE(sol.unphysical);

    CHECK_THAT(sol.b_scale, WithinRel(21.794569055391342, 1e-9));
    CHECK_THAT(sol.c_scale, WithinRel(32.691853583087017, 1e-9));
    CHECK_THAT(sol.mu_gev, WithinRel(6.0235897989350182e+17, 1e-9));
    CHECK_THAT(sol.lambda_ymh, WithinRel(0.6339017225197523, 1e-9));

    // consistency identities among the diagnostics
    const double weight = 4.0 * 3.0 + sol.tr_x;
    CHECK_THAT(sol.b_scale, WithinRel(weight / (6.0 * sol.gt_tc * sol.gt_tc), 1e-12));
    CHECK_THAT(sol.mu_gev,
               WithinRel(constants::planck_mass_gev * sol.gt_tc /
                             std::sqrt(constants::pi * weight),
                         1e-12));
    CHECK_THAT(sol.lambda_ymh,
               WithinRel(std::sqrt(9.0 / 8.0) * sol.gt_tc / sol.g3_tc, 1e-12));

    // the two scalar-length forms differ by exactly sqrt(3)
    CHECK_THAT(sol.ell_h_display_gev_inv / sol.ell_h_substitution_gev_inv,
               WithinRel(std::sqrt(3.0), 1e-12));
}

TEST_CASE("solution flags unphysical weight traces", "[relations]") {
    input_set in = input_set::defaults();
    in.g3.value = 0.50; // g3/g2 below sqrt(3)/2 keeps trX negative at t = 0
    const commutant_solution sol = solve_commutant(0.0, in);
    CHECK(sol.tr_x < 0.0);
    CHECK(sol.unphysical);
}
