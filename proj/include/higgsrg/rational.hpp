#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "higgsrg/errors.hpp"

namespace higgsrg {

// Exact rational arithmetic for hypercharge bookkeeping. Hypercharge
// consistency checks must distinguish "equal" from "equal to rounding",
// so they cannot run on doubles.
struct rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr rational() = default;
    constexpr rational(std::int64_t n) : num(n), den(1) {}
    rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw input_error("rational with zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend rational operator+(rational a, rational b) { return rational(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend rational operator-(rational a, rational b) { return rational(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend rational operator*(rational a, rational b) { return rational(a.num * b.num, a.den * b.den); }
    friend bool operator==(rational a, rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(rational a, rational b) { return !(a == b); }
};

} // namespace higgsrg
