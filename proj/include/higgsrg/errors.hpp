#pragma once

#include <stdexcept>
#include <string>

namespace higgsrg {

// Invalid user-supplied data: malformed config files, out-of-domain
// parameters, inconsistent field content. CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Failure of a numerical procedure on otherwise valid inputs: integration
// blow-up, Landau-pole crossing, domain violation of a closed-form solution.
// CLI maps this to exit code 2.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace higgsrg
