#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyfock {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An infinite series did not meet its stopping rule within the term cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature rule construction failed (Newton did not converge).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite integrand value met while summing over quadrature nodes.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, std::size_t node)
      : std::runtime_error(what + " (node " + std::to_string(node) + ")"), node_(node) {}

  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

}  // namespace polyfock
