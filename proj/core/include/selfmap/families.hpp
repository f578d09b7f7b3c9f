#pragma once

#include <string>

#include "selfmap/eval_result.hpp"

namespace selfmap {

// The three analytic maps under study, all fixing the origin:
//
//   sine        g(x)   = sin(pi x / 2)                 g'(0)  = pi/2
//   rational    g_a(x) = (a+1) x / (1 + a x^2)         g_a'(0) = 1 + a
//   scaled erf  h_k(x) = erf(k x) / erf(k),  k > 0     h_k'(0) = 2k/(sqrt(pi) erf(k))

enum class FamilyTag { Sine, Rational, ScaledErf };

class MapFamily {
 public:
  static MapFamily sine();
  static MapFamily rational(double a);
  static MapFamily scaled_erf(double k);  // requires k > 0

  FamilyTag tag() const { return tag_; }
  double a() const { return a_; }
  double k() const { return k_; }

  /// True for rational maps with |a| > 1: still evaluable, but known not to
  /// map (-1,1) into itself.  The checker, not this flag, issues verdicts.
  bool non_selfmap() const { return non_selfmap_; }

  std::string label() const;

 private:
  MapFamily(FamilyTag tag, double a, double k, bool non_selfmap)
      : tag_(tag), a_(a), k_(k), non_selfmap_(non_selfmap) {}

  FamilyTag tag_;
  double a_;
  double k_;
  bool non_selfmap_;
};

/// Rational evaluation raises PoleError once |1 + a z^2| drops below this;
/// otherwise overflow would masquerade as a huge function value.
inline constexpr double kPoleProximity = 1e-12;

/// Evaluates the family at z.
///
/// Sine and rational are closed forms (error_bound 0).  Scaled erf uses
/// erf_quadrature on the real axis (valid for any k) and erf_series off it
/// (requires |k z| <= kSeriesRadiusLimit); the bound follows the quotient
/// rule (e_N + |N/D| e_D) / (|D| - e_D) and may exceed tol when the series
/// noise floor binds at large |k z| -- callers compare bound-aware.
EvalResult eval(const MapFamily& family, Complex z, double tol);

enum class DerivativeFormula { HalfPi, OnePlusA, ErfRatio };

struct OriginDerivative {
  double value;
  DerivativeFormula formula;
};

/// Closed-form derivative at the origin; erf(k) is computed by quadrature at
/// tolerance tol for the scaled-erf family.
OriginDerivative origin_derivative(const MapFamily& family, double tol);

/// lim_{z -> i} g_a(z) = (1+a)/(1-a) i, outside the unit disk for a in (0,1).
/// Throws PoleError at a = 1.
Complex rational_boundary_limit(double a);

}  // namespace selfmap
