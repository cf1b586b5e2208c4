#pragma once

#include <array>
#include <cmath>
#include <string>

#include "higgsrg/errors.hpp"
#include "higgsrg/inputs.hpp"
#include "higgsrg/predictor.hpp"
#include "higgsrg/relations.hpp"

namespace higgsrg {

enum class envelope_side {
    over,  // largest couplings compatible with the input errors
    under, // smallest
};

// Inverse-squared gauge envelopes: r_i(t) = A_i -/+ dA_i + slope_i t, with
// the one-loop slopes. The over side shifts every A_i down (larger coupling).
inline std::array<double, 3> envelope_radicands(double t, const input_set& in,
                                                envelope_side side) {
    const double s = side == envelope_side::over ? -1.0 : 1.0;
    return {
        inverse_sq(in.g1.value) + s * inverse_sq_error(in.g1.value, in.g1.error) -
            constants::c1 * t,
        inverse_sq(in.g2.value) + s * inverse_sq_error(in.g2.value, in.g2.error) +
            constants::c2 * t,
        inverse_sq(in.g3.value) + s * inverse_sq_error(in.g3.value, in.g3.error) +
            constants::c3 * t,
    };
}

inline std::array<double, 3> envelope_couplings(double t, const input_set& in,
                                                envelope_side side) {
    const auto r = envelope_radicands(t, in, side);
    const char* names[] = {"g1", "g2", "g3"};
    std::array<double, 3> g{};
    for (int i = 0; i < 3; ++i) {
        if (!(r[i] > 0.0))
            throw numerical_error(std::string("gauge envelope ") + names[i] +
                                  " crossed its pole before t = " + std::to_string(t));
        g[i] = 1.0 / std::sqrt(r[i]);
    }
    return g;
}

// Extremal top-Yukawa trajectory: the shifted initial value is integrated
// against the opposite-side gauge envelope, so the Yukawa stays extremal
// over the whole range.
inline double extremal_top(const input_set& in, envelope_side side, double t_end,
                           const integrator_options& opts = {}) {
    opts.validate();
    const double gt0 = gt_initial(in.mT.value, in.mW.value, in.g2.value);
    const double dgt0 = gt_initial_error(in);
    const double start = side == envelope_side::over ? gt0 + dgt0 : gt0 - dgt0;
    const envelope_side gauge_side =
        side == envelope_side::over ? envelope_side::under : envelope_side::over;

    auto deriv = [&](double t, double gt) {
        const auto g = envelope_couplings(t, in, gauge_side);
        return (9.0 * gt * gt * gt -
                (8.0 * g[2] * g[2] + 2.25 * g[1] * g[1] + (17.0 / 12.0) * g[0] * g[0]) * gt) /
               (16.0 * constants::pi_sq);
    };

    double t = 0.0;
    double gt = start;
    const double h0 = t_end >= 0.0 ? opts.step_size : -opts.step_size;
    while (true) {
        double h = h0;
        if ((t_end - t) * h0 <= 0.0) break;
        if (std::fabs(t_end - t) < std::fabs(h)) h = t_end - t;
        const double k1 = deriv(t, gt);
        const double k2 = deriv(t + 0.5 * h, gt + 0.5 * h * k1);
        const double k3 = deriv(t + 0.5 * h, gt + 0.5 * h * k2);
        const double k4 = deriv(t + h, gt + h * k3);
        gt += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
        if (!(std::fabs(gt) < 1.0e6))
            throw numerical_error("extremal top trajectory blew up near t = " +
                                  std::to_string(t));
    }
    return gt;
}

inline double arcoth(double x) {
    if (!(std::fabs(x) > 1.0))
        throw numerical_error("arcoth argument must satisfy |x| > 1");
    return 0.5 * std::log((x + 1.0) / (x - 1.0));
}

// Constant-coefficient comparison flow dv/dt = l1 v^2 + l2 v + l3 that
// majorizes the quartic flow below tc. l1 is the exact quadratic-term
// coefficient; l2 and l3 are frozen at their extremal envelope values over
// [0, tc + tc_err].
struct comparison_coefficients {
    double l1 = 0.0;
    double l2 = 0.0;
    double l3 = 0.0;
    double alpha = 0.0; // l2 / (2 l1)
    double beta = 0.0;  // l3/l1 - alpha^2 (negative: real fixed points)
    double tc = 0.0;
    double tau = 0.0; // tc + tc_err, the envelope edge
};

inline comparison_coefficients build_comparison_coefficients(
    const input_set& in, const integrator_options& opts = {},
    const hypercharge_content& rep = hypercharge_content::standard()) {
    in.validate();
    comparison_coefficients cc;
    cc.tc = critical_scale(in, rep);
    cc.tau = cc.tc + critical_scale_error(in, rep);
    cc.l1 = 6.0 / constants::pi_sq;

    const double gt_over_0 = gt_initial(in.mT.value, in.mW.value, in.g2.value) +
                             gt_initial_error(in);
    const auto r_tau = envelope_radicands(cc.tau, in, envelope_side::over);
    const auto r_zero = envelope_radicands(0.0, in, envelope_side::over);
    for (double r : {r_tau[0], r_tau[1], r_zero[1]})
        if (!(r > 0.0))
            throw numerical_error("gauge envelope crossed its pole inside the bound range");

    // Linear-term coefficient from the over-side envelope edge; the gauge
    // legs enter through their inverse-squared envelope values.
    cc.l2 = (12.0 * gt_over_0 * gt_over_0 - 9.0 * r_tau[1] - 3.0 * r_tau[0]) /
            (16.0 * constants::pi_sq);

    const double gt_under_tau = extremal_top(in, envelope_side::under, cc.tau, opts);
    const double g2o0_sq = 1.0 / r_zero[1];
    const double g1ot_sq = 1.0 / r_tau[0];
    cc.l3 = (-6.0 * gt_under_tau * gt_under_tau * gt_under_tau * gt_under_tau +
             (9.0 / 32.0) * g2o0_sq * g2o0_sq + (3.0 / 32.0) * g1ot_sq * g1ot_sq +
             (3.0 / 16.0) * g2o0_sq * g1ot_sq) /
            (16.0 * constants::pi_sq);

    cc.alpha = cc.l2 / (2.0 * cc.l1);
    cc.beta = cc.l3 / cc.l1 - cc.alpha * cc.alpha;
    if (!(cc.beta < 0.0))
        throw numerical_error("comparison flow has no real fixed points (beta >= 0)");
    return cc;
}

// Exact solution of the comparison flow through (tc, kappa), evaluated at t.
// With beta < 0 and x = (kappa + alpha)/sqrt(-beta) the solution is the coth
// branch for |x| > 1, the tanh branch for |x| < 1, and constant for |x| = 1.
inline double comparison_solution(double t, double kappa, const comparison_coefficients& cc) {
    if (!(cc.beta < 0.0))
        throw numerical_error("comparison solution requires beta < 0");
    const double root = std::sqrt(-cc.beta);
    const double x = (kappa + cc.alpha) / root;
    const double shift = cc.l1 * cc.beta * (t - cc.tc) / root;
    if (std::fabs(x) == 1.0) return kappa;
    if (std::fabs(x) > 1.0) {
        const double arg = shift + arcoth(x);
        const double th = std::tanh(arg);
        if (th == 0.0)
            throw numerical_error("comparison solution pole at t = " + std::to_string(t));
        return root / th - cc.alpha;
    }
    return root * std::tanh(shift + std::atanh(x)) - cc.alpha;
}

// Limit of the comparison solution as the boundary value at tc grows without
// bound; finite for every t < tc, with a pole at tc itself.
inline double asymptotic_upper(double t, const comparison_coefficients& cc) {
    if (!(cc.beta < 0.0))
        throw numerical_error("asymptotic bound requires beta < 0");
    if (!(t < cc.tc))
        throw numerical_error("asymptotic bound diverges at and beyond the critical scale");
    const double root = std::sqrt(-cc.beta);
    const double arg = cc.l1 * root * (cc.tc - t);
    return root / std::tanh(arg) - cc.alpha;
}

// Mass floor: the pipeline with a vanishing quartic boundary value, reduced
// by the envelope spread of the central prediction.
inline double lower_bound(const input_set& in, const conventions& conv = {},
                          const integrator_options& opts = {},
                          const hypercharge_content& rep = hypercharge_content::standard()) {
    in.validate();
    const double tc = critical_scale(in, rep);
    const pipeline_result floor_run = run_pipeline(in, tc, conv, opts, 0.0);
    const envelope_result env = propagate_envelope(in, conv, opts, rep);
    return floor_run.mh_gev - env.mh_spread();
}

struct upper_bound_result {
    double mh_upper_gev = 0.0;
    double lambda_as0 = 0.0;
    comparison_coefficients cc;
};

// Mass ceiling: the asymptotic comparison solution evaluated at the
// reference scale, converted with the central couplings.
inline upper_bound_result upper_bound(const input_set& in, const conventions& conv = {},
                                      const integrator_options& opts = {},
                                      const hypercharge_content& rep =
                                          hypercharge_content::standard()) {
    conv.validate();
    upper_bound_result out;
    out.cc = build_comparison_coefficients(in, opts, rep);
    out.lambda_as0 = asymptotic_upper(0.0, out.cc);
    out.mh_upper_gev =
        mass_from_lambda(out.lambda_as0, in.g2.value, in.mW.value, conv.mass_coefficient);
    return out;
}

struct bounds_report {
    double mh_lower_gev = 0.0;
    double mh_upper_gev = 0.0;
    double lambda_as0 = 0.0;
    std::string top_mode_name = "direct";
};

inline bounds_report compute_bounds(const input_set& in, const conventions& conv = {},
                                    const integrator_options& opts = {},
                                    const hypercharge_content& rep =
                                        hypercharge_content::standard()) {
    bounds_report rep_out;
    rep_out.mh_lower_gev = lower_bound(in, conv, opts, rep);
    const upper_bound_result ub = upper_bound(in, conv, opts, rep);
    rep_out.mh_upper_gev = ub.mh_upper_gev;
    rep_out.lambda_as0 = ub.lambda_as0;
    rep_out.top_mode_name = to_string(in.mode);
    return rep_out;
}

} // namespace higgsrg
