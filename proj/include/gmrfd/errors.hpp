#pragma once

#include <stdexcept>

namespace gmrfd {

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quantity diverges at the requested parameter (signal power at zeta = 1/4).
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Spectral density evaluated at its pole.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quadrature refinement did not reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense oracle asked for a lattice larger than it supports.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Communication energy consumes the whole budget.
class InfeasibleDensityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No candidate density in a sweep leaves energy for sensing.
class NoFeasibleDensityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gmrfd
