#pragma once

#include <cmath>
#include <stdexcept>

#include "selfmap/errors.hpp"
#include "selfmap/eval_result.hpp"

namespace selfmap::detail {

inline void require_finite(Complex z) {
  if (!is_finite(z)) throw DomainError("non-finite argument");
}

inline void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw std::invalid_argument("tolerance must be positive and finite");
}

}  // namespace selfmap::detail
