#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"

#include "higgsrg/bounds.hpp"
#include "higgsrg/predictor.hpp"
#include "higgsrg/relations.hpp"
#include "higgsrg/scenarios.hpp"

namespace higgsrg {

namespace detail {

inline std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace detail

struct critical_scale_report {
    double tc = 0.0;
    double tc_err = 0.0;
    double ec_gev = 0.0;
    double ec_err_gev = 0.0;
};

inline critical_scale_report compute_critical_scale_report(
    const input_set& in, const hypercharge_content& rep = hypercharge_content::standard()) {
    in.validate();
    critical_scale_report r;
    r.tc = critical_scale(in, rep);
    r.tc_err = critical_scale_error(in, rep);
    r.ec_gev = tc_to_energy(r.tc, in.mZ.value);
    r.ec_err_gev = critical_energy_error(r.tc, r.tc_err, in.mZ.value, in.mZ.error);
    return r;
}

inline nlohmann::ordered_json to_json(const critical_scale_report& r) {
    return {{"tc", r.tc}, {"tc_err", r.tc_err}, {"Ec_GeV", r.ec_gev},
            {"Ec_err_GeV", r.ec_err_gev}};
}

inline std::string to_text(const critical_scale_report& r) {
    std::ostringstream os;
    os << "critical scale t_c        = " << detail::num(r.tc) << " +/- "
       << detail::num(r.tc_err) << "\n";
    os << "critical energy E_c [GeV] = " << detail::num(r.ec_gev) << " +/- "
       << detail::num(r.ec_err_gev) << "\n";
    return os.str();
}

inline nlohmann::ordered_json to_json(const prediction_report& r) {
    return {{"tc", r.tc},
            {"tc_err", r.tc_err},
            {"Ec_GeV", r.ec_gev},
            {"Ec_err_GeV", r.ec_err_gev},
            {"gt0", r.gt0},
            {"gt_tc", r.gt_tc},
            {"lambda0", r.lambda0},
            {"lambda0_err", r.lambda0_err},
            {"mH_GeV", r.mh_gev},
            {"mH_err_GeV", r.mh_err_gev},
            {"convention", r.convention},
            {"error_method", r.method}};
}

inline std::string to_text(const prediction_report& r) {
    std::ostringstream os;
    os << "critical scale t_c            = " << detail::num(r.tc) << " +/- "
       << detail::num(r.tc_err) << "\n";
    os << "critical energy E_c [GeV]     = " << detail::num(r.ec_gev) << " +/- "
       << detail::num(r.ec_err_gev) << "\n";
    os << "top Yukawa at reference scale = " << detail::num(r.gt0) << "\n";
    os << "top Yukawa at t_c             = " << detail::num(r.gt_tc) << "\n";
    os << "quartic at reference scale    = " << detail::num(r.lambda0) << " +/- "
       << detail::num(r.lambda0_err) << "\n";
    os << "Higgs mass [GeV]              = " << detail::num(r.mh_gev) << " +/- "
       << detail::num(r.mh_err_gev) << "\n";
    os << "boundary convention           = " << r.convention << "\n";
    os << "error method                  = " << r.method << "\n";
    return os.str();
}

inline nlohmann::ordered_json to_json(const bounds_report& r) {
    return {{"mH_lower_GeV", r.mh_lower_gev},
            {"mH_upper_GeV", r.mh_upper_gev},
            {"lambda_as0", r.lambda_as0},
            {"top_mode", r.top_mode_name}};
}

inline std::string to_text(const bounds_report& r) {
    std::ostringstream os;
    os << "Higgs mass lower bound [GeV]     = " << detail::num(r.mh_lower_gev) << "\n";
    os << "Higgs mass upper bound [GeV]     = " << detail::num(r.mh_upper_gev) << "\n";
    os << "asymptotic quartic at ref. scale = " << detail::num(r.lambda_as0) << "\n";
    os << "top mass mode                    = " << r.top_mode_name << "\n";
    return os.str();
}

inline nlohmann::ordered_json to_json(const scenario_result& r) {
    nlohmann::ordered_json computed = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.computed) computed[k] = v;
    nlohmann::ordered_json reference = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.reference) reference[k] = v;
    return {{"name", r.name},
            {"computed", computed},
            {"reference", reference},
            {"threshold", r.threshold},
            {"deviation", r.deviation},
            {"verdict", r.verdict()}};
}

inline std::string to_text(const scenario_result& r) {
    std::ostringstream os;
    os << "scenario: " << r.name << "\n";
    for (const auto& [k, v] : r.computed)
        os << "  computed " << k << " = " << detail::num(v) << "\n";
    for (const auto& [k, v] : r.reference)
        os << "  reference " << k << " = " << detail::num(v) << "\n";
    os << "  threshold = " << detail::num(r.threshold) << "\n";
    os << "  deviation = " << detail::num(r.deviation) << "\n";
    os << "  verdict   = " << r.verdict() << "\n";
    if (r.name == "gravity")
        os << "  note: computed curvature differs from the quoted literature value;"
              " see ratio_to_quoted\n";
    return os.str();
}

inline nlohmann::ordered_json to_json(const commutant_solution& s) {
    return {{"tc", s.tc},
            {"g1_tc", s.g1_tc},
            {"g2_tc", s.g2_tc},
            {"g3_tc", s.g3_tc},
            {"gt_tc", s.gt_tc},
            {"trX", s.tr_x},
            {"A", s.a_scale},
            {"residual_g1", s.residual_g1},
            {"unphysical", s.unphysical},
            {"B", s.b_scale},
            {"C", s.c_scale},
            {"mu_GeV", s.mu_gev},
            {"lambda_YMH", s.lambda_ymh},
            {"ell_H_GeV_inv", s.ell_h_display_gev_inv},
            {"ell_H_alt_GeV_inv", s.ell_h_substitution_gev_inv}};
}

inline std::string to_text(const commutant_solution& s) {
    std::ostringstream os;
    os << "critical scale t_c                 = " << detail::num(s.tc) << "\n";
    os << "g1(t_c)                            = " << detail::num(s.g1_tc) << "\n";
    os << "g2(t_c)                            = " << detail::num(s.g2_tc) << "\n";
    os << "g3(t_c)                            = " << detail::num(s.g3_tc) << "\n";
    os << "top Yukawa gt(t_c)                 = " << detail::num(s.gt_tc) << "\n";
    os << "weight trace trX                   = " << detail::num(s.tr_x) << "\n";
    os << "gauge normalization A              = " << detail::num(s.a_scale) << "\n";
    os << "g1 relation closure residual       = " << detail::num(s.residual_g1) << "\n";
    os << "unphysical solution                = " << (s.unphysical ? "yes" : "no") << "\n";
    os << "Yukawa normalization B             = " << detail::num(s.b_scale) << "\n";
    os << "quartic normalization C            = " << detail::num(s.c_scale) << "\n";
    os << "scalar mass parameter mu [GeV]     = " << detail::num(s.mu_gev) << "\n";
    os << "Yang-Mills-Higgs coupling ratio    = " << detail::num(s.lambda_ymh) << "\n";
    os << "scalar length (display) [1/GeV]    = " << detail::num(s.ell_h_display_gev_inv)
       << "\n";
    os << "scalar length (substituted) [1/GeV] = "
       << detail::num(s.ell_h_substitution_gev_inv) << "\n";
    return os.str();
}

} // namespace higgsrg
