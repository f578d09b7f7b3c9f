#pragma once

#include <stdexcept>
#include <string>

namespace selfmap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the evaluable domain (non-finite input, series radius
/// guard, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Evaluation requested too close to a pole of a rational map.
struct PoleError : Error {
  using Error::Error;
};

/// The requested tolerance lies below what double precision can certify at
/// this argument.  `feasible_tol` is the smallest bound the engine is willing
/// to put its name to; callers that only need bound-aware comparisons can
/// retry with it.
struct ToleranceUnreachable : Error {
  ToleranceUnreachable(const std::string& what, double feasible)
      : Error(what), feasible_tol(feasible) {}
  double feasible_tol;
};

}  // namespace selfmap
