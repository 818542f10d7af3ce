#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Evaluation requested at (or too close to) a pole in s.
struct PoleError : std::domain_error {
  explicit PoleError(const std::string& msg) : std::domain_error(msg) {}
};

// Requested tolerance still unmet after parameter escalation.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input exceeds a documented implementation limit.
struct LimitError : std::domain_error {
  explicit LimitError(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace hurwitz
