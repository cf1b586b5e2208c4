#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "higgsrg/constants.hpp"
#include "higgsrg/errors.hpp"

namespace higgsrg {

// A measured quantity with a symmetric absolute uncertainty.
struct experimental_value {
    double value = 0.0;
    double error = 0.0;
};

enum class top_mode {
    direct, // direct observation of the top mass
    ewfit,  // electroweak-fit preferred top mass
    custom, // user-supplied top mass
};

inline std::string to_string(top_mode m) {
    switch (m) {
        case top_mode::direct: return "direct";
        case top_mode::ewfit: return "ewfit";
        case top_mode::custom: return "custom";
    }
    return "direct";
}

inline top_mode top_mode_from_string(const std::string& s) {
    if (s == "direct") return top_mode::direct;
    if (s == "ewfit") return top_mode::ewfit;
    if (s == "custom") return top_mode::custom;
    throw input_error("invalid top_mode '" + s + "' (expected direct, ewfit, or custom)");
}

// Full input set for a prediction run: gauge couplings at the reference
// scale mZ, the reference masses, and the top-mass selection mode.
struct input_set {
    experimental_value g1{0.34537, 0.00003};
    experimental_value g2{0.62976, 0.00020};
    experimental_value g3{1.22132, 0.00290};
    experimental_value mZ{91.1876, 0.0021};
    experimental_value mW{80.403, 0.029};
    experimental_value mT{174.2, 3.3};
    top_mode mode = top_mode::direct;

    static input_set defaults(top_mode m = top_mode::direct) {
        input_set in;
        in.mode = m;
        if (m == top_mode::ewfit) in.mT = {172.3, 10.2};
        return in;
    }

    void validate() const {
        auto check = [](const char* name, const experimental_value& v) {
            if (!std::isfinite(v.value) || v.value <= 0.0)
                throw input_error(std::string(name) + " must be positive and finite");
            if (!std::isfinite(v.error) || v.error < 0.0)
                throw input_error(std::string(name) + "_err must be non-negative and finite");
        };
        check("g1", g1);
        check("g2", g2);
        check("g3", g3);
        check("mZ", mZ);
        check("mW", mW);
        check("mT", mT);
    }
};

// Gauge couplings from the empirical electroweak parameters
// (fine-structure constant, weak mixing angle, strong coupling).
inline std::array<double, 3> couplings_from_empirical(double alpha, double sin2_theta_w,
                                                      double alpha_s) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw input_error("alpha must be positive");
    if (!(sin2_theta_w > 0.0) || !(sin2_theta_w < 1.0))
        throw input_error("sin2_theta_w must lie in (0, 1)");
    if (!(alpha_s > 0.0) || !std::isfinite(alpha_s))
        throw input_error("alpha_s must be positive");
    const double e2 = 4.0 * constants::pi * alpha;
    return {
        std::sqrt(e2 / (1.0 - sin2_theta_w)),
        std::sqrt(e2 / sin2_theta_w),
        std::sqrt(4.0 * constants::pi * alpha_s),
    };
}

// Inverse map, for round-trip checks: (g1, g2, g3) -> (alpha, sin2, alpha_s).
inline std::array<double, 3> empirical_from_couplings(double g1, double g2, double g3) {
    if (!(g1 > 0.0) || !(g2 > 0.0) || !(g3 > 0.0))
        throw input_error("couplings must be positive");
    const double e2 = g1 * g1 * g2 * g2 / (g1 * g1 + g2 * g2);
    return {
        e2 / (4.0 * constants::pi),
        e2 / (g2 * g2),
        g3 * g3 / (4.0 * constants::pi),
    };
}

// Initial top-Yukawa coupling at the reference scale: gt = (mT / 2 mW) * g2.
inline double gt_initial(double m_top, double m_w, double g2) {
    if (!(m_w > 0.0)) throw input_error("mW must be positive");
    return 0.5 * (m_top / m_w) * g2;
}

// Worst-case linear error on the initial top Yukawa.
inline double gt_initial_error(const input_set& in) {
    const double gt0 = gt_initial(in.mT.value, in.mW.value, in.g2.value);
    return gt0 * (in.mT.error / in.mT.value + in.mW.error / in.mW.value +
                  in.g2.error / in.g2.value);
}

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& text, int line_no) {
    const std::string t = trim(text);
    if (t.empty())
        throw input_error("line " + std::to_string(line_no) + ": empty value");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw input_error("line " + std::to_string(line_no) + ": malformed number '" + t + "'");
    return v;
}

} // namespace detail

// Parses the key = value configuration format. Lines may carry '#' comments,
// whitespace around keys and values is ignored, unknown or duplicate keys are
// rejected with the offending line number. Explicit keys override the
// defaults selected by top_mode; custom mode requires an explicit mT.
inline input_set load_config(const std::string& text) {
    std::map<std::string, std::pair<std::string, int>> kv;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw input_error("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        static const std::vector<std::string> known = {
            "g1", "g1_err", "g2", "g2_err", "g3", "g3_err",
            "mZ", "mZ_err", "mW", "mW_err", "mT", "mT_err", "top_mode"};
        bool ok = false;
        for (const auto& k : known) ok = ok || (k == key);
        if (!ok)
            throw input_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        if (kv.count(key))
            throw input_error("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        kv[key] = {value, line_no};
    }

    top_mode mode = top_mode::direct;
    if (auto it = kv.find("top_mode"); it != kv.end()) {
        try {
            mode = top_mode_from_string(it->second.first);
        } catch (const input_error& e) {
            throw input_error("line " + std::to_string(it->second.second) + ": " +
                              e.what());
        }
    }
    input_set in = input_set::defaults(mode == top_mode::custom ? top_mode::direct : mode);
    in.mode = mode;
    if (mode == top_mode::custom) {
        if (!kv.count("mT"))
            throw input_error("top_mode = custom requires an explicit mT");
        in.mT = {0.0, 0.0};
    }

    auto assign = [&](const char* key, double& slot) {
        if (auto it = kv.find(key); it != kv.end())
            slot = detail::parse_double(it->second.first, it->second.second);
    };
    assign("g1", in.g1.value);
    assign("g1_err", in.g1.error);
    assign("g2", in.g2.value);
    assign("g2_err", in.g2.error);
    assign("g3", in.g3.value);
    assign("g3_err", in.g3.error);
    assign("mZ", in.mZ.value);
    assign("mZ_err", in.mZ.error);
    assign("mW", in.mW.value);
    assign("mW_err", in.mW.error);
    assign("mT", in.mT.value);
    assign("mT_err", in.mT.error);

    in.validate();
    return in;
}

inline input_set load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return load_config(buf.str());
}

// Writes every field explicitly at full precision, so that
// load_config(serialize_config(in)) reproduces in bit for bit.
inline std::string serialize_config(const input_set& in) {
    std::ostringstream os;
    auto put = [&](const char* key, double v) {
        os << key << " = " << detail::format_double(v) << "\n";
    };
    put("g1", in.g1.value);
    put("g1_err", in.g1.error);
    put("g2", in.g2.value);
    put("g2_err", in.g2.error);
    put("g3", in.g3.value);
    put("g3_err", in.g3.error);
    put("mZ", in.mZ.value);
    put("mZ_err", in.mZ.error);
    put("mW", in.mW.value);
    put("mW_err", in.mW.error);
    put("mT", in.mT.value);
    put("mT_err", in.mT.error);
    os << "top_mode = " << to_string(in.mode) << "\n";
    return os.str();
}

} // namespace higgsrg
