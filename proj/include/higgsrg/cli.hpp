#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "higgsrg/bounds.hpp"
#include "higgsrg/errors.hpp"
#include "higgsrg/inputs.hpp"
#include "higgsrg/predictor.hpp"
#include "higgsrg/relations.hpp"
#include "higgsrg/report.hpp"
#include "higgsrg/rgflow.hpp"
#include "higgsrg/scenarios.hpp"

namespace higgsrg {

namespace detail {

inline void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw input_error("cannot open output file '" + out_path + "'");
    f << text;
}

inline std::string render(const nlohmann::ordered_json& j, const std::string& text,
                          const std::string& format) {
    return format == "json" ? j.dump(2) + "\n" : text;
}

} // namespace detail

// Command-line entry point. Returns the process exit code: 0 on success,
// 1 for input errors (including flag misuse), 2 for numerical failures.
inline int run_cli(std::vector<std::string> args) {
    CLI::App app{"Higgs mass prediction from Dirac-operator gauge boundary conditions"};
    app.require_subcommand(1);

    std::string config_path;
    std::string format = "text";
    std::string out_path;
    app.add_option("--config", config_path, "input configuration file")
        ->envname("HIGGSRG_CONFIG");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", out_path, "write output to this file instead of stdout");

    std::string top_mode_flag;
    double top_mass = 0.0;
    double top_mass_err = 0.0;
    std::string err_method = "envelope";
    std::size_t mc_samples = 10000;
    std::uint64_t seed = 20617;
    std::string bc = "gt2";
    int coefficient = 32;

    auto add_top_flags = [&](CLI::App* sub) {
        sub->add_option("--top-mode", top_mode_flag, "top mass selection")
            ->check(CLI::IsMember({"direct", "ewfit", "custom"}));
        sub->add_option("--top-mass", top_mass, "top mass in GeV");
        sub->add_option("--top-mass-error", top_mass_err, "top mass uncertainty in GeV");
    };
    auto add_convention_flags = [&](CLI::App* sub) {
        sub->add_option("--bc-convention", bc, "quartic boundary convention")
            ->check(CLI::IsMember({"gt2", "gt"}));
        sub->add_option("--mh-coefficient", coefficient, "mass conversion coefficient")
            ->check(CLI::IsMember({"32", "16"}));
    };

    CLI::App* cscale = app.add_subcommand("critical-scale",
                                          "critical scale and energy with uncertainties");
    cscale->fallthrough();

    CLI::App* predict_cmd = app.add_subcommand("predict", "full Higgs mass prediction");
    predict_cmd->fallthrough();
    add_top_flags(predict_cmd);
    add_convention_flags(predict_cmd);
    predict_cmd->add_option("--error-method", err_method, "uncertainty propagation method")
        ->check(CLI::IsMember({"envelope", "montecarlo"}));
    predict_cmd->add_option("--mc-samples", mc_samples, "monte carlo sample count");
    predict_cmd->add_option("--seed", seed, "monte carlo seed");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "Higgs mass lower and upper bounds");
    bounds_cmd->fallthrough();
    add_top_flags(bounds_cmd);
    add_convention_flags(bounds_cmd);

    double from_t = 0.0;
    double to_t = 0.0;
    double step = 1.0e-3;
    std::size_t stride = 100;
    CLI::App* flow_cmd =
        app.add_subcommand("flow", "coupling trajectories as CSV (quartic held at zero)");
    flow_cmd->fallthrough();
    flow_cmd->add_option("--from-t", from_t, "start of the t range");
    flow_cmd->add_option("--to-t", to_t, "end of the t range")->required();
    flow_cmd->add_option("--step", step, "integration step size");
    flow_cmd->add_option("--stride", stride, "write every n-th sample");

    CLI::App* relations_cmd =
        app.add_subcommand("relations", "boundary-condition solution at the critical scale");
    relations_cmd->fallthrough();

    std::string scenario_name;
    double sigma_cm2 = 1.0e-26;
    double planck_mass = constants::planck_mass_gev;
    double gut_reference = 1.1e17;
    CLI::App* scenario_cmd = app.add_subcommand("scenario", "model comparison checks");
    scenario_cmd->fallthrough();
    scenario_cmd->add_option("name", scenario_name, "scenario to evaluate")
        ->required()
        ->check(CLI::IsMember({"ccm-ratio", "gut-scale", "gravity"}));
    scenario_cmd->add_option("--sigma-cm2", sigma_cm2, "probe cross-section in cm^2");
    scenario_cmd->add_option("--planck-mass", planck_mass, "Planck mass in GeV");
    scenario_cmd->add_option("--gut-reference-gev", gut_reference,
                             "reference unification scale in GeV");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        input_set in =
            config_path.empty() ? input_set::defaults() : load_config_file(config_path);
        if (!top_mode_flag.empty()) {
            const top_mode m = top_mode_from_string(top_mode_flag);
            in.mode = m;
            if (m == top_mode::custom) {
                if (predict_cmd->count("--top-mass") == 0 &&
                    bounds_cmd->count("--top-mass") == 0)
                    throw input_error("--top-mode custom requires --top-mass");
            } else {
                in.mT = input_set::defaults(m).mT;
            }
        }
        if (predict_cmd->count("--top-mass") || bounds_cmd->count("--top-mass"))
            in.mT.value = top_mass;
        if (predict_cmd->count("--top-mass-error") || bounds_cmd->count("--top-mass-error"))
            in.mT.error = top_mass_err;
        in.validate();

        conventions conv;
        conv.bc = bc_convention_from_string(bc);
        conv.mass_coefficient = static_cast<double>(coefficient);
        conv.validate();

        if (*cscale) {
            const critical_scale_report r = compute_critical_scale_report(in);
            detail::emit(detail::render(to_json(r), to_text(r), format), out_path);
        } else if (*predict_cmd) {
            predict_options po;
            po.conv = conv;
            po.method = error_method_from_string(err_method);
            po.mc_samples = mc_samples;
            po.seed = seed;
            const prediction_report r = predict(in, po);
            detail::emit(detail::render(to_json(r), to_text(r), format), out_path);
        } else if (*bounds_cmd) {
            const bounds_report r = compute_bounds(in, conv);
            detail::emit(detail::render(to_json(r), to_text(r), format), out_path);
        } else if (*flow_cmd) {
            coupling_state y0;
            y0.t = from_t;
            y0.g1 = in.g1.value;
            y0.g2 = in.g2.value;
            y0.g3 = in.g3.value;
            y0.gt = gt_initial(in.mT.value, in.mW.value, in.g2.value);
            y0.lambda = 0.0;
            if (from_t != 0.0) {
                // shift the reference-scale values to the requested start
                integrator_options opts0;
                opts0.step_size = step;
                coupling_state ref;
                ref.g1 = in.g1.value;
                ref.g2 = in.g2.value;
                ref.g3 = in.g3.value;
                ref.gt = y0.gt;
                active_set act;
                act.lambda = false;
                const coupling_state shifted = integrate_to(ref, from_t, opts0, act);
                y0 = shifted;
            }
            integrator_options opts;
            opts.step_size = step;
            active_set act;
            act.lambda = false;
            const flow_trajectory traj = integrate(y0, to_t, opts, act);
            std::ostringstream os;
            write_csv(traj, in.mZ.value, stride, os);
            detail::emit(os.str(), out_path);
        } else if (*relations_cmd) {
            const double tc = critical_scale(in);
            const commutant_solution sol = solve_commutant(tc, in);
            detail::emit(detail::render(to_json(sol), to_text(sol), format), out_path);
        } else if (*scenario_cmd) {
            scenario_result r;
            if (scenario_name == "ccm-ratio") {
                r = ccm_ratio(in);
            } else if (scenario_name == "gut-scale") {
                r = gut_scale(in, gut_reference);
            } else {
                r = gravity_estimate(in, sigma_cm2, planck_mass, conv);
            }
            detail::emit(detail::render(to_json(r), to_text(r), format), out_path);
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace higgsrg
