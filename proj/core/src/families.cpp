#include "selfmap/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "selfmap/detail/validate.hpp"
#include "selfmap/erf.hpp"
#include "selfmap/errors.hpp"
#include "selfmap/format.hpp"

namespace selfmap {

MapFamily MapFamily::sine() { return {FamilyTag::Sine, 0.0, 0.0, false}; }

MapFamily MapFamily::rational(double a) {
  if (!std::isfinite(a))
    throw std::invalid_argument("rational: parameter a must be finite");
  return {FamilyTag::Rational, a, 0.0, std::abs(a) > 1.0};
}

MapFamily MapFamily::scaled_erf(double k) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw std::invalid_argument("scaled_erf: parameter k must be positive");
  return {FamilyTag::ScaledErf, 0.0, k, false};
}

std::string MapFamily::label() const {
  switch (tag_) {
    case FamilyTag::Sine:
      return "sine";
    case FamilyTag::Rational:
      return "rational(a=" + format_double(a_) + ")";
    case FamilyTag::ScaledErf:
      return "scaled-erf(k=" + format_double(k_) + ")";
  }
  return "?";
}

namespace {

EvalResult scaled_erf_numerator(double k, Complex z, double tol) {
  const Complex w = k * z;
  if (z.imag() == 0.0) return erf_quadrature(w, tol);
  try {
    return erf_series(w, tol);
  } catch (const ToleranceUnreachable& e) {
    // Large |kz|: take the best certifiable bound instead; every consumer of
    // family values compares bound-aware.
    return erf_series(w, 2.0 * e.feasible_tol);
  }
}

}  // namespace

EvalResult eval(const MapFamily& family, Complex z, double tol) {
  detail::require_finite(z);
  detail::require_tol(tol);
  switch (family.tag()) {
    case FamilyTag::Sine:
      return {std::sin(std::numbers::pi / 2.0 * z), 0.0, 0,
              Method::ClosedForm};
    case FamilyTag::Rational: {
      const double a = family.a();
      const Complex denom = 1.0 + a * (z * z);
      if (std::abs(denom) < kPoleProximity)
        throw PoleError("rational map pole near z = " + format_complex(z));
      return {(a + 1.0) * z / denom, 0.0, 0, Method::ClosedForm};
    }
    case FamilyTag::ScaledErf: {
      const double k = family.k();
      const EvalResult num = scaled_erf_numerator(k, z, tol);
      const EvalResult den = erf_quadrature(Complex{k, 0.0}, tol);
      const double d = den.value.real();  // erf(k) > 0 for k > 0
      if (!(d > den.error_bound))
        throw DomainError("scaled-erf: erf(k) not resolvable at tolerance " +
                          format_double(tol));
      const Complex value = num.value / d;
      const double bound =
          (num.error_bound + std::abs(value) * den.error_bound) /
          (d - den.error_bound);
      return {value, bound,
              num.terms_or_subdivisions + den.terms_or_subdivisions,
              num.method};
    }
  }
  throw std::logic_error("unhandled family tag");
}

OriginDerivative origin_derivative(const MapFamily& family, double tol) {
  detail::require_tol(tol);
  switch (family.tag()) {
    case FamilyTag::Sine:
      return {std::numbers::pi / 2.0, DerivativeFormula::HalfPi};
    case FamilyTag::Rational:
      return {1.0 + family.a(), DerivativeFormula::OnePlusA};
    case FamilyTag::ScaledErf: {
      const double k = family.k();
      const double erf_k =
          erf_quadrature(Complex{k, 0.0}, tol).value.real();
      return {2.0 * k / (std::sqrt(std::numbers::pi) * erf_k),
              DerivativeFormula::ErfRatio};
    }
  }
  throw std::logic_error("unhandled family tag");
}

Complex rational_boundary_limit(double a) {
  if (!std::isfinite(a))
    throw std::invalid_argument("rational_boundary_limit: a must be finite");
  if (a == 1.0)
    throw PoleError("rational boundary limit has a pole at a = 1");
  return {0.0, (1.0 + a) / (1.0 - a)};
}

}  // namespace selfmap
