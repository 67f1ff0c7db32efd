#ifndef SELBERG_ERRORS_HPP
#define SELBERG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace selberg {

/// A denominator factor of one of the closed-form matrix or vector entries
/// vanishes for the given parameter tuple. The message names the factor.
class ParameterSingular : public std::runtime_error {
public:
    explicit ParameterSingular(const std::string& what) : std::runtime_error(what) {}
};

/// A brute-force average was requested for an integrand whose termwise
/// integral does not converge.
class DivergentIntegral : public std::runtime_error {
public:
    explicit DivergentIntegral(const std::string& what) : std::runtime_error(what) {}
};

/// A symbolic expansion exceeded the configured term budget, or an expansion
/// was requested outside the supported desk-scale parameter range.
class ExpansionLimit : public std::runtime_error {
public:
    explicit ExpansionLimit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace selberg

#endif
