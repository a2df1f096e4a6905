#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gfrac {

using Cplx = std::complex<double>;

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parameter or sequence value violates a validity constraint
/// (g outside [0,1], |alpha| > 1, malformed gap, non-finite input).
struct ValidityError : Error {
  int index = -1;
  explicit ValidityError(const std::string& msg, int idx = -1) : Error(msg), index(idx) {}
};

/// Evaluation hit a pole (vanishing denominator) at the recorded point.
struct PoleError : Error {
  Cplx at;
  explicit PoleError(const std::string& msg, Cplx z = {}) : Error(msg), at(z) {}
};

/// Iteration budget exhausted before the convergence criterion was met.
/// Carries the last two approximants for diagnosis.
struct ConvergenceError : Error {
  Cplx last{}, previous{};
  int depth = 0;
  ConvergenceError(const std::string& msg, Cplx v_last, Cplx v_prev, int d)
      : Error(msg), last(v_last), previous(v_prev), depth(d) {}
};

/// Input outside the operation's domain (oracle disk, hypothesis range,
/// non-positive-integer c, zero polynomial, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A factor that must be nonzero degenerated (unimodular Schur parameter,
/// vanishing bilinear denominator).
struct DegenerateError : Error {
  int index = -1;
  explicit DegenerateError(const std::string& msg, int idx = -1) : Error(msg), index(idx) {}
};

}  // namespace gfrac
