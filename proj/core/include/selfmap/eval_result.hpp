#pragma once

#include <cmath>
#include <complex>

namespace selfmap {

// All evaluations work on finite complex points; NaN/infinity are rejected at
// every public entry point.
using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

enum class Method { Series, Quadrature, ClosedForm };

const char* method_name(Method m);

/// A computed function value together with a certified absolute error bound.
///
/// For Method::Series the bound covers the rigorous truncation tail plus the
/// floating-point noise of the summation; for Method::Quadrature it is the
/// a-posteriori estimate of the adaptive rule; closed forms report 0.
struct EvalResult {
  Complex value{};
  double error_bound = 0.0;          // absolute, in value units, >= 0
  int terms_or_subdivisions = 0;     // series terms summed / quadrature panels
  Method method = Method::ClosedForm;
};

}  // namespace selfmap
