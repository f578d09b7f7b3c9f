#pragma once

#include "selfmap/eval_result.hpp"

namespace selfmap {

// erf(z) = (2/sqrt(pi)) * integral_0^z exp(-t^2) dt, evaluated by two
// independent routes so each can serve as an oracle for the other:
//
//  * erf_series     -- the entire Taylor expansion
//                      (2/sqrt(pi)) * sum (-1)^n z^(2n+1) / (n! (2n+1)),
//                      summed in compensated double-double arithmetic with a
//                      rigorous geometric tail bound.
//  * erf_quadrature -- adaptive Gauss-Kronrod 7-15 integration along the
//                      straight segment 0 -> z (the integrand is entire, so
//                      the path is immaterial): erf(z) = (2/sqrt(pi)) z *
//                      integral_0^1 exp(-(z s)^2) ds.
//
// Both report a certified absolute error bound and refuse tolerances that
// double precision cannot honour at the given argument (see
// ToleranceUnreachable).

/// Radius guard for the series.  Beyond this the intermediate terms are so
/// large (~1e60) that even compensated summation certifies nothing useful.
inline constexpr double kSeriesRadiusLimit = 12.0;

inline constexpr int kSeriesMaxTerms = 800;

/// Adaptive quadrature stops subdividing after this many panel evaluations.
inline constexpr int kQuadraturePanelBudget = 10000;

/// Taylor-series evaluation with a certified bound.
///
/// The reported error_bound is the geometric tail bound (once the term ratio
/// r_n = |z|^2 (2n+1) / ((n+1)(2n+3)) drops below 1/2, the tail is dominated
/// by |t_{N+1}| / (1 - r_{N+1})) plus the floating-point noise floor of the
/// compensated sum.  Throws DomainError for |z| > kSeriesRadiusLimit and
/// ToleranceUnreachable when tol is below the noise floor.
EvalResult erf_series(Complex z, double tol);

/// Adaptive Gauss-Kronrod evaluation of the defining integral.  The
/// error_bound is the summed per-panel |K15 - G7| estimate.  Throws
/// ToleranceUnreachable when the panel budget is exhausted or the estimate
/// cannot drop below the rule's double-precision noise floor.
EvalResult erf_quadrature(Complex z, double tol);

/// d/dz erf(z) = (2/sqrt(pi)) exp(-z^2), by the closed form.
Complex erf_derivative(Complex z);

}  // namespace selfmap
