#pragma once

#include <stdexcept>
#include <string>

namespace zexp {

// Argument outside an operation's mathematical domain.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Query beyond the data a table or catalog covers.
struct coverage_error : std::runtime_error {
    explicit coverage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation too close to a pole of a constituent factor.
struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file or stream.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested computation exceeds a configured resource budget.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Quadrature failed to reach the requested tolerance.
struct quadrature_error : std::runtime_error {
    explicit quadrature_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Reported truncation tail exceeds the acceptable bound for the call.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Least-squares offset fit rejected (residual spread too large).
struct fit_rejected_error : std::runtime_error {
    explicit fit_rejected_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace zexp
