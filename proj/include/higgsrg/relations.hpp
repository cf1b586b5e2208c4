#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "higgsrg/constants.hpp"
#include "higgsrg/errors.hpp"
#include "higgsrg/inputs.hpp"
#include "higgsrg/rational.hpp"
#include "higgsrg/rgflow.hpp"

namespace higgsrg {

// Hypercharge assignment of one fermion generation, kept exact. The lepton
// sector may optionally contain a right-handed neutrino.
struct hypercharge_content {
    rational yq_l{1, 6};
    rational yd_r{-1, 3};
    rational yu_r{2, 3};
    rational yl_l{-1, 2};
    rational ye_r{-1};
    bool has_nu_r = false;
    rational ynu_r{0};
    int n_colors = 3;

    static hypercharge_content standard() { return {}; }

    // The up/down/lepton splittings must all equal the scalar hypercharge.
    void validate() const {
        if (n_colors < 1) throw input_error("n_colors must be positive");
        const rational y_h = yu_r - yq_l;
        if (yq_l - yd_r != y_h)
            throw input_error("hypercharge consistency violated: yq_l - yd_r = " +
                              (yq_l - yd_r).str() + " but yu_r - yq_l = " + y_h.str());
        if (yl_l - ye_r != y_h)
            throw input_error("hypercharge consistency violated: yl_l - ye_r = " +
                              (yl_l - ye_r).str() + " but yu_r - yq_l = " + y_h.str());
        if (has_nu_r && ynu_r - yl_l != y_h)
            throw input_error("hypercharge consistency violated: ynu_r - yl_l = " +
                              (ynu_r - yl_l).str() + " but yu_r - yq_l = " + y_h.str());
    }
};

// Squared-hypercharge sums (y_q, y_l) over the quark and lepton sectors.
inline std::pair<double, double> hypercharge_sums(const hypercharge_content& rep) {
    rep.validate();
    const rational yq = rational(2) * rep.yq_l * rep.yq_l + rep.yd_r * rep.yd_r +
                        rep.yu_r * rep.yu_r;
    rational yl = rational(2) * rep.yl_l * rep.yl_l + rep.ye_r * rep.ye_r;
    if (rep.has_nu_r) yl = yl + rep.ynu_r * rep.ynu_r;
    return {yq.to_double(), yl.to_double()};
}

inline double inverse_sq(double g) { return 1.0 / (g * g); }

// Worst-case error on 1/g^2 from an error on g.
inline double inverse_sq_error(double g, double dg) { return 2.0 * dg / (g * g * g); }

// Scale at which the three one-loop gauge trajectories satisfy the
// boundary-condition system, for the standard fermion content:
// t_c = (8 pi^2 / 21) (3 A1 - 9 A2 + 4 A3), with A_i = 1/g_i(0)^2.
inline double critical_scale_closed(double a1, double a2, double a3) {
    return (8.0 * constants::pi_sq / 21.0) * (3.0 * a1 - 9.0 * a2 + 4.0 * a3);
}

// General form for arbitrary hypercharge content. The boundary-condition
// system reduces to one linear equation in t:
//   u1(t) = 2 y_l u2(t) + (3/2)(y_q - y_l) u3(t),
// with u_i(t) = 1/g_i(t)^2 linear in t (the color count cancels).
inline double critical_scale(double a1, double a2, double a3, const hypercharge_content& rep) {
    const auto [yq, yl] = hypercharge_sums(rep);
    const double coeff3 = 1.5 * (yq - yl);
    const double den = constants::c1 + 2.0 * yl * constants::c2 + coeff3 * constants::c3;
    if (den == 0.0)
        throw numerical_error("degenerate hypercharge content: boundary system has no scale");
    const double num = a1 - 2.0 * yl * a2 - coeff3 * a3;
    return num / den;
}

inline double critical_scale(const input_set& in,
                             const hypercharge_content& rep = hypercharge_content::standard()) {
    return critical_scale(inverse_sq(in.g1.value), inverse_sq(in.g2.value),
                          inverse_sq(in.g3.value), rep);
}

// Worst-case linear half-width of t_c under the gauge-coupling errors.
inline double critical_scale_error(const input_set& in,
                                   const hypercharge_content& rep =
                                       hypercharge_content::standard()) {
    const auto [yq, yl] = hypercharge_sums(rep);
    const double coeff3 = 1.5 * (yq - yl);
    const double den = constants::c1 + 2.0 * yl * constants::c2 + coeff3 * constants::c3;
    if (den == 0.0)
        throw numerical_error("degenerate hypercharge content: boundary system has no scale");
    const double num = inverse_sq_error(in.g1.value, in.g1.error) +
                       2.0 * yl * inverse_sq_error(in.g2.value, in.g2.error) +
                       std::fabs(coeff3) * inverse_sq_error(in.g3.value, in.g3.error);
    return num / std::fabs(den);
}

inline double tc_to_energy(double tc, double e0_gev) { return e0_gev * std::exp(tc); }

// Symmetric worst-case half-width of E_c = mZ exp(t_c) under (tc_err, mZ_err):
// (E_max - E_min)/2 = exp(tc) (mZ sinh(tc_err) + mZ_err cosh(tc_err)).
inline double critical_energy_error(double tc, double tc_err, double mz, double mz_err) {
    return std::exp(tc) * (mz * std::sinh(tc_err) + mz_err * std::cosh(tc_err));
}

enum class bc_convention {
    quadratic_yukawa, // lambda(tc) = (3/4) gt(tc)^2  (default)
    linear_yukawa,    // lambda(tc) = (3/4) gt(tc)    (documented alternate reading)
};

inline std::string to_string(bc_convention c) {
    return c == bc_convention::quadratic_yukawa ? "gt2" : "gt";
}

inline bc_convention bc_convention_from_string(const std::string& s) {
    if (s == "gt2") return bc_convention::quadratic_yukawa;
    if (s == "gt") return bc_convention::linear_yukawa;
    throw input_error("invalid bc convention '" + s + "' (expected gt2 or gt)");
}

// Quartic-coupling boundary value at the critical scale.
inline double lambda_boundary(double gt_tc, bc_convention conv) {
    return conv == bc_convention::quadratic_yukawa ? 0.75 * gt_tc * gt_tc : 0.75 * gt_tc;
}

// Algebraic solution of the boundary-condition system at t_c, plus the
// derived scale diagnostics. All couplings are evaluated at t_c.
struct commutant_solution {
    double tc = 0.0;
    double g1_tc = 0.0, g2_tc = 0.0, g3_tc = 0.0, gt_tc = 0.0;
    double tr_x = 0.0;      // trace of the generation-space weight matrix
    double a_scale = 0.0;   // overall normalization of the gauge system
    double residual_g1 = 0.0; // closure error of the g1 relation
    bool unphysical = false; // tr_x or a_scale non-positive
    double b_scale = 0.0;   // Yukawa-sector normalization
    double c_scale = 0.0;   // quartic-sector normalization
    double mu_gev = 0.0;    // scalar mass parameter
    double lambda_ymh = 0.0; // Yang-Mills-Higgs coupling ratio sqrt(9/8) gt/g3
    double ell_h_display_gev_inv = 0.0;      // 2 sqrt(2/3) / mu
    double ell_h_substitution_gev_inv = 0.0; // 2 sqrt(2) / (3 mu)
};

// Solves the gauge-sector relations for (A, trX) at t_c and evaluates the
// remaining diagnostics from the top-Yukawa value there. The g2 and g3
// relations determine the two unknowns; the g1 relation is then a
// consistency check whose closure error is reported.
inline commutant_solution solve_commutant(double tc, const input_set& in,
                                          const hypercharge_content& rep =
                                              hypercharge_content::standard(),
                                          const integrator_options& opts = {}) {
    const auto [yq, yl] = hypercharge_sums(rep);
    const double n = rep.n_colors;
    commutant_solution out;
    out.tc = tc;

    const auto g = gauge_analytic(tc, inverse_sq(in.g1.value), inverse_sq(in.g2.value),
                                  inverse_sq(in.g3.value));
    out.g1_tc = g[0];
    out.g2_tc = g[1];
    out.g3_tc = g[2];

    coupling_state y0;
    y0.t = 0.0;
    y0.g1 = in.g1.value;
    y0.g2 = in.g2.value;
    y0.g3 = in.g3.value;
    y0.gt = gt_initial(in.mT.value, in.mW.value, in.g2.value);
    y0.lambda = 0.0;
    active_set act;
    act.lambda = false;
    out.gt_tc = integrate_to(y0, tc, opts, act).gt;

    const double g2_sq = out.g2_tc * out.g2_tc;
    const double g3_sq = out.g3_tc * out.g3_tc;
    out.tr_x = 4.0 * n * g3_sq / g2_sq - 3.0 * n;
    const double weight = 4.0 * n + out.tr_x;
    out.a_scale = weight / (4.0 * n * g3_sq);
    out.unphysical = !(out.tr_x > 0.0) || !(out.a_scale > 0.0);
    out.residual_g1 = std::fabs(inverse_sq(out.g1_tc) -
                                2.0 * out.a_scale * (3.0 * n * yq + yl * out.tr_x) / weight);

    const double gt_sq = out.gt_tc * out.gt_tc;
    out.b_scale = weight / (6.0 * gt_sq);
    out.c_scale = lambda_boundary(out.gt_tc, bc_convention::quadratic_yukawa) * weight /
                  (3.0 * gt_sq * gt_sq);
    out.mu_gev = constants::planck_mass_gev * out.gt_tc /
                 std::sqrt(constants::pi * weight);
    out.lambda_ymh = std::sqrt(9.0 / 8.0) * out.gt_tc / out.g3_tc;
    out.ell_h_display_gev_inv = 2.0 * std::sqrt(2.0 / 3.0) / out.mu_gev;
    out.ell_h_substitution_gev_inv = 2.0 * std::sqrt(2.0) / (3.0 * out.mu_gev);
    return out;
}

} // namespace higgsrg
