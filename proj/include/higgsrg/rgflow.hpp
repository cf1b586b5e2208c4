#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "higgsrg/constants.hpp"
#include "higgsrg/errors.hpp"

namespace higgsrg {

// Couplings at a single value of t = ln(E / E0), with E0 the reference scale.
struct coupling_state {
    double t = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;
    double gt = 0.0;
    double lambda = 0.0;
};

// Which subsystems evolve; frozen couplings keep their initial values but
// still enter the derivatives of the active ones.
struct active_set {
    bool gauge = true;
    bool top = true;
    bool lambda = true;
};

struct integrator_options {
    double step_size = 1.0e-3;
    enum class method_kind { rk4_fixed } method = method_kind::rk4_fixed;
    // Fraction of the distance to a gauge Landau pole that must remain
    // beyond the integration target.
    double pole_guard_margin = 1.0e-9;

    void validate() const {
        if (!(step_size > 0.0) || step_size > 0.1)
            throw input_error("step_size must lie in (0, 0.1]");
        if (!(pole_guard_margin >= 0.0))
            throw input_error("pole_guard_margin must be non-negative");
    }
};

struct flow_trajectory {
    std::vector<coupling_state> samples;
    double step_size = 0.0;
};

// One-loop beta functions (top-quark Yukawa approximation).
inline std::array<double, 5> beta(const coupling_state& y, const active_set& act) {
    using constants::pi_sq;
    std::array<double, 5> d{0, 0, 0, 0, 0};
    if (act.gauge) {
        d[0] = 41.0 * y.g1 * y.g1 * y.g1 / (96.0 * pi_sq);
        d[1] = -19.0 * y.g2 * y.g2 * y.g2 / (96.0 * pi_sq);
        d[2] = -7.0 * y.g3 * y.g3 * y.g3 / (16.0 * pi_sq);
    }
    if (act.top) {
        d[3] = (9.0 * y.gt * y.gt * y.gt -
                (8.0 * y.g3 * y.g3 + 2.25 * y.g2 * y.g2 + (17.0 / 12.0) * y.g1 * y.g1) * y.gt) /
               (16.0 * pi_sq);
    }
    if (act.lambda) {
        const double g1_2 = y.g1 * y.g1;
        const double g2_2 = y.g2 * y.g2;
        const double gt_2 = y.gt * y.gt;
        d[4] = (96.0 * y.lambda * y.lambda +
                (24.0 * gt_2 - 9.0 * g2_2 - 3.0 * g1_2) * y.lambda - 6.0 * gt_2 * gt_2 +
                (9.0 / 32.0) * g2_2 * g2_2 + (3.0 / 32.0) * g1_2 * g1_2 +
                (3.0 / 16.0) * g1_2 * g2_2) /
               (16.0 * pi_sq);
    }
    return d;
}

// Closed-form one-loop gauge running from inverse-squared initial data
// A_i = 1/g_i(0)^2. Throws when a coupling has crossed its pole.
inline std::array<double, 3> gauge_analytic(double t, double a1, double a2, double a3) {
    const double r1 = a1 - constants::c1 * t;
    const double r2 = a2 + constants::c2 * t;
    const double r3 = a3 + constants::c3 * t;
    auto leg = [&](double r, const char* name) {
        if (!(r > 0.0))
            throw numerical_error(std::string("gauge coupling ") + name +
                                  " crossed its pole before t = " + std::to_string(t));
        return 1.0 / std::sqrt(r);
    };
    return {leg(r1, "g1"), leg(r2, "g2"), leg(r3, "g3")};
}

namespace detail {

inline coupling_state rk4_step(const coupling_state& y, double h, const active_set& act) {
    auto add = [](const coupling_state& s, const std::array<double, 5>& d, double f) {
        coupling_state r = s;
        r.t += f;
        r.g1 += f * d[0];
        r.g2 += f * d[1];
        r.g3 += f * d[2];
        r.gt += f * d[3];
        r.lambda += f * d[4];
        return r;
    };
    const auto k1 = beta(y, act);
    const auto k2 = beta(add(y, k1, 0.5 * h), act);
    const auto k3 = beta(add(y, k2, 0.5 * h), act);
    const auto k4 = beta(add(y, k3, h), act);
    coupling_state r = y;
    r.t += h;
    r.g1 += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    r.g2 += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    r.g3 += h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
    r.gt += h / 6.0 * (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3]);
    r.lambda += h / 6.0 * (k1[4] + 2.0 * k2[4] + 2.0 * k3[4] + k4[4]);
    return r;
}

inline void check_bounded(const coupling_state& y) {
    const double limit = 1.0e6;
    if (!(std::fabs(y.g1) < limit && std::fabs(y.g2) < limit && std::fabs(y.g3) < limit &&
          std::fabs(y.gt) < limit && std::fabs(y.lambda) < limit) ||
        !std::isfinite(y.g1 + y.g2 + y.g3 + y.gt + y.lambda))
        throw numerical_error("integration blew up near t = " + std::to_string(y.t));
}

inline void check_gauge_poles(const coupling_state& y0, double t_target, double margin) {
    // u_i(t) = 1/g_i(t)^2 is linear in t; reject targets at or beyond a zero of u_i.
    struct leg {
        const char* name;
        double u0;
        double slope; // du/dt
    };
    const leg legs[] = {
        {"g1", 1.0 / (y0.g1 * y0.g1), -constants::c1},
        {"g2", 1.0 / (y0.g2 * y0.g2), constants::c2},
        {"g3", 1.0 / (y0.g3 * y0.g3), constants::c3},
    };
    const double dt = t_target - y0.t;
    for (const auto& l : legs) {
        if (l.u0 <= 0.0 || !std::isfinite(l.u0)) continue;
        const double u_end = l.u0 + l.slope * dt;
        if (u_end <= margin * l.u0)
            throw numerical_error(std::string("gauge coupling ") + l.name +
                                  " reaches its pole inside the requested range");
    }
}

// Core fixed-step classical RK4 driver. The last step is shortened to land
// exactly on t_target; backward integration uses negative steps.
template <typename Record>
inline coupling_state integrate_core(const coupling_state& initial, double t_target,
                                     const integrator_options& opts, const active_set& act,
                                     Record&& record) {
    opts.validate();
    if (act.gauge && initial.g1 > 0.0 && initial.g2 > 0.0 && initial.g3 > 0.0)
        check_gauge_poles(initial, t_target, opts.pole_guard_margin);

    coupling_state y = initial;
    record(y);
    const double span = t_target - initial.t;
    if (span == 0.0) return y;
    const double h = span > 0.0 ? opts.step_size : -opts.step_size;
    const long long n_full = static_cast<long long>(std::floor(std::fabs(span) / opts.step_size));
    for (long long i = 0; i < n_full; ++i) {
        y = rk4_step(y, h, act);
        check_bounded(y);
        record(y);
    }
    const double rem = t_target - y.t;
    if (std::fabs(rem) > 1.0e-15 * std::max(1.0, std::fabs(t_target))) {
        y = rk4_step(y, rem, act);
        check_bounded(y);
        record(y);
    }
    y.t = t_target;
    return y;
}

} // namespace detail

// Full trajectory, one sample per accepted step.
inline flow_trajectory integrate(const coupling_state& initial, double t_target,
                                 const integrator_options& opts = {},
                                 const active_set& act = {}) {
    flow_trajectory traj;
    traj.step_size = opts.step_size;
    detail::integrate_core(initial, t_target, opts, act,
                           [&](const coupling_state& y) { traj.samples.push_back(y); });
    return traj;
}

// Endpoint only; avoids trajectory storage in inner loops.
inline coupling_state integrate_to(const coupling_state& initial, double t_target,
                                   const integrator_options& opts = {},
                                   const active_set& act = {}) {
    return detail::integrate_core(initial, t_target, opts, act, [](const coupling_state&) {});
}

// CSV rows `t,E_GeV,g1,g2,g3,gt,lambda` with E = E0 * exp(t). Every
// stride-th sample is written; the first and last samples always are.
inline void write_csv(const flow_trajectory& traj, double e0_gev, std::size_t stride,
                      std::ostream& os) {
    if (stride == 0) throw input_error("stride must be positive");
    os << "t,E_GeV,g1,g2,g3,gt,lambda\n";
    char buf[256];
    const std::size_t n = traj.samples.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i % stride != 0 && i + 1 != n) continue;
        const auto& s = traj.samples[i];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t,
                      e0_gev * std::exp(s.t), s.g1, s.g2, s.g3, s.gt, s.lambda);
        os << buf;
    }
}

} // namespace higgsrg
