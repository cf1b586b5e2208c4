#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "higgsrg/errors.hpp"
#include "higgsrg/inputs.hpp"
#include "higgsrg/relations.hpp"
#include "higgsrg/rgflow.hpp"

namespace higgsrg {

struct conventions {
    bc_convention bc = bc_convention::quadratic_yukawa;
    double mass_coefficient = 32.0;

    void validate() const {
        if (mass_coefficient != 32.0 && mass_coefficient != 16.0)
            throw input_error("mass coefficient must be 32 or 16");
    }
};

// mH = mW sqrt(coefficient * lambda0) / g2, with the couplings at the
// reference scale.
inline double mass_from_lambda(double lambda0, double g2, double m_w, double coefficient) {
    if (coefficient != 32.0 && coefficient != 16.0)
        throw input_error("mass coefficient must be 32 or 16");
    if (!(lambda0 >= 0.0))
        throw numerical_error("quartic coupling at the reference scale is negative");
    return m_w * std::sqrt(coefficient * lambda0) / g2;
}

struct pipeline_result {
    double gt0 = 0.0;
    double gt_tc = 0.0;
    double kappa = 0.0;   // quartic boundary value at tc
    double lambda0 = 0.0; // quartic run back to the reference scale
    double mh_gev = 0.0;
};

// Central prediction pipeline: run the gauge + top system up to tc, impose
// the quartic boundary value there (or the supplied override), run the full
// system back down, and convert lambda(0) to a mass.
inline pipeline_result run_pipeline(double g1, double g2, double g3, double m_w, double m_t,
                                    double tc, const conventions& conv = {},
                                    const integrator_options& opts = {},
                                    std::optional<double> kappa_override = std::nullopt) {
    conv.validate();
    pipeline_result out;
    out.gt0 = gt_initial(m_t, m_w, g2);

    coupling_state y0;
    y0.t = 0.0;
    y0.g1 = g1;
    y0.g2 = g2;
    y0.g3 = g3;
    y0.gt = out.gt0;
    y0.lambda = 0.0;
    active_set up;
    up.lambda = false;
    coupling_state at_tc = integrate_to(y0, tc, opts, up);
    out.gt_tc = at_tc.gt;

    out.kappa = kappa_override ? *kappa_override : lambda_boundary(out.gt_tc, conv.bc);
    at_tc.lambda = out.kappa;
    const coupling_state back = integrate_to(at_tc, 0.0, opts);
    out.lambda0 = back.lambda;
    out.mh_gev = mass_from_lambda(out.lambda0, g2, m_w, conv.mass_coefficient);
    return out;
}

inline pipeline_result run_pipeline(const input_set& in, double tc, const conventions& conv = {},
                                    const integrator_options& opts = {},
                                    std::optional<double> kappa_override = std::nullopt) {
    return run_pipeline(in.g1.value, in.g2.value, in.g3.value, in.mW.value, in.mT.value, tc,
                        conv, opts, kappa_override);
}

enum class error_method { envelope, montecarlo };

inline std::string to_string(error_method m) {
    return m == error_method::envelope ? "envelope" : "montecarlo";
}

inline error_method error_method_from_string(const std::string& s) {
    if (s == "envelope") return error_method::envelope;
    if (s == "montecarlo") return error_method::montecarlo;
    throw input_error("invalid error method '" + s + "' (expected envelope or montecarlo)");
}

struct envelope_result {
    double mh_min = 0.0, mh_max = 0.0;
    double lambda0_min = 0.0, lambda0_max = 0.0;
    double mh_spread() const { return mh_max - mh_min; }
    double lambda0_spread() const { return lambda0_max - lambda0_min; }
};

// Deterministic corner enumeration: every input that feeds the pipeline
// (three gauge couplings, both masses) and the critical scale itself are
// pushed to their +/- extremes; per corner the critical scale is recomputed
// from the shifted couplings before its own shift is applied. The quoted
// uncertainty downstream is the full max - min spread.
inline envelope_result propagate_envelope(const input_set& in, const conventions& conv = {},
                                          const integrator_options& opts = {},
                                          const hypercharge_content& rep =
                                              hypercharge_content::standard()) {
    envelope_result out;
    bool first = true;
    for (int mask = 0; mask < 64; ++mask) {
        const auto sign = [&](int bit) { return (mask >> bit) & 1 ? 1.0 : -1.0; };
        input_set corner = in;
        corner.g1.value = in.g1.value + sign(0) * in.g1.error;
        corner.g2.value = in.g2.value + sign(1) * in.g2.error;
        corner.g3.value = in.g3.value + sign(2) * in.g3.error;
        corner.mT.value = in.mT.value + sign(3) * in.mT.error;
        corner.mW.value = in.mW.value + sign(4) * in.mW.error;
        const double tc_corner =
            critical_scale(corner, rep) + sign(5) * critical_scale_error(corner, rep);
        pipeline_result r;
        try {
            r = run_pipeline(corner, tc_corner, conv, opts);
        } catch (const numerical_error& e) {
            throw numerical_error(std::string("envelope corner ") + std::to_string(mask) +
                                  " failed: " + e.what());
        }
        if (first || r.mh_gev < out.mh_min) out.mh_min = r.mh_gev;
        if (first || r.mh_gev > out.mh_max) out.mh_max = r.mh_gev;
        if (first || r.lambda0 < out.lambda0_min) out.lambda0_min = r.lambda0;
        if (first || r.lambda0 > out.lambda0_max) out.lambda0_max = r.lambda0;
        first = false;
    }
    return out;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic per-sample generator state; the standard library normal
// distribution is implementation-defined, so the Gaussian transform is done
// by hand (Box-Muller) on a fixed 53-bit uniform stream.
class gaussian_stream {
public:
    explicit gaussian_stream(std::uint64_t seed) : state_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * constants::pi * u2;
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

private:
    double uniform01() {
        // strictly inside (0, 1) so log() stays finite
        const std::uint64_t bits = (state_ = splitmix64(state_)) >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace detail

struct montecarlo_result {
    double mh_mean = 0.0, mh_sd = 0.0;
    double lambda0_mean = 0.0, lambda0_sd = 0.0;
    std::size_t n_samples = 0;
    std::size_t n_failures = 0;
};

// Gaussian resampling of every experimental input. Each sample draws the six
// inputs in a fixed order from its own sub-seeded stream, recomputes the
// critical scale from the sampled couplings, and runs the pipeline. Sample
// statistics are accumulated in index order, so results are independent of
// any execution interleaving. More than 1% failed samples aborts.
inline montecarlo_result propagate_montecarlo(const input_set& in, std::size_t n_samples,
                                              std::uint64_t seed, const conventions& conv = {},
                                              const integrator_options& opts = {},
                                              const hypercharge_content& rep =
                                                  hypercharge_content::standard()) {
    if (n_samples < 100)
        throw input_error("monte carlo needs at least 100 samples");
    std::vector<double> mh;
    std::vector<double> l0;
    mh.reserve(n_samples);
    l0.reserve(n_samples);
    std::size_t failures = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < n_samples; ++i) {
        detail::gaussian_stream rng(
            detail::splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (i + 1))));
        input_set s = in;
        s.g1.value = in.g1.value + rng.next() * in.g1.error;
        s.g2.value = in.g2.value + rng.next() * in.g2.error;
        s.g3.value = in.g3.value + rng.next() * in.g3.error;
        s.mZ.value = in.mZ.value + rng.next() * in.mZ.error;
        s.mW.value = in.mW.value + rng.next() * in.mW.error;
        s.mT.value = in.mT.value + rng.next() * in.mT.error;
        try {
            const double tc_s = critical_scale(s, rep);
            const pipeline_result r = run_pipeline(s, tc_s, conv, opts);
            if (!std::isfinite(r.mh_gev) || !std::isfinite(r.lambda0))
                throw numerical_error("non-finite pipeline result");
            mh.push_back(r.mh_gev);
            l0.push_back(r.lambda0);
        } catch (const numerical_error& e) {
            ++failures;
            if (first_failure.empty()) first_failure = e.what();
        }
    }
    if (failures * 100 > n_samples)
        throw numerical_error("monte carlo: " + std::to_string(failures) + " of " +
                              std::to_string(n_samples) +
                              " samples failed (first failure: " + first_failure + ")");

    auto stats = [](const std::vector<double>& v) {
        double mean = 0.0;
        for (const double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double ss = 0.0;
        for (const double x : v) ss += (x - mean) * (x - mean);
        const double var = v.size() > 1 ? ss / static_cast<double>(v.size() - 1) : 0.0;
        return std::pair<double, double>{mean, std::sqrt(var)};
    };
    montecarlo_result out;
    out.n_samples = n_samples;
    out.n_failures = failures;
    const auto [mh_mean, mh_sd] = stats(mh);
    const auto [l_mean, l_sd] = stats(l0);
    out.mh_mean = mh_mean;
    out.mh_sd = mh_sd;
    out.lambda0_mean = l_mean;
    out.lambda0_sd = l_sd;
    return out;
}

struct prediction_report {
    double tc = 0.0;
    double tc_err = 0.0;
    double ec_gev = 0.0;
    double ec_err_gev = 0.0;
    double gt0 = 0.0;
    double gt_tc = 0.0;
    double lambda0 = 0.0;
    double lambda0_err = 0.0;
    double mh_gev = 0.0;
    double mh_err_gev = 0.0;
    std::string convention = "gt2";
    std::string method = "envelope";
};

struct predict_options {
    conventions conv;
    error_method method = error_method::envelope;
    std::size_t mc_samples = 10000;
    std::uint64_t seed = 20617;
    integrator_options integ;
    hypercharge_content rep = hypercharge_content::standard();
};

// Full prediction: critical scale and energy with worst-case errors, the
// central pipeline values, and the mass/quartic uncertainties from the
// selected propagation method.
inline prediction_report predict(const input_set& in, const predict_options& po = {}) {
    in.validate();
    po.conv.validate();
    prediction_report rep;
    rep.tc = critical_scale(in, po.rep);
    rep.tc_err = critical_scale_error(in, po.rep);
    rep.ec_gev = tc_to_energy(rep.tc, in.mZ.value);
    rep.ec_err_gev = critical_energy_error(rep.tc, rep.tc_err, in.mZ.value, in.mZ.error);

    const pipeline_result central = run_pipeline(in, rep.tc, po.conv, po.integ);
    rep.gt0 = central.gt0;
    rep.gt_tc = central.gt_tc;
    rep.lambda0 = central.lambda0;
    rep.mh_gev = central.mh_gev;

    if (po.method == error_method::envelope) {
        const envelope_result env = propagate_envelope(in, po.conv, po.integ, po.rep);
        rep.lambda0_err = env.lambda0_spread();
        rep.mh_err_gev = env.mh_spread();
    } else {
        const montecarlo_result mc =
            propagate_montecarlo(in, po.mc_samples, po.seed, po.conv, po.integ, po.rep);
        rep.lambda0_err = mc.lambda0_sd;
        rep.mh_err_gev = mc.mh_sd;
    }
    rep.convention = to_string(po.conv.bc);
    rep.method = to_string(po.method);
    return rep;
}

} // namespace higgsrg
