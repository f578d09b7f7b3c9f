#include "selfmap/erf.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "selfmap/detail/double_double.hpp"
#include "selfmap/detail/validate.hpp"
#include "selfmap/errors.hpp"
#include "selfmap/format.hpp"

namespace selfmap {

const char* method_name(Method m) {
  switch (m) {
    case Method::Series:
      return "series";
    case Method::Quadrature:
      return "quadrature";
    case Method::ClosedForm:
      return "closed-form";
  }
  return "?";
}

namespace {

using detail::CDD;
using detail::DD;

// 2/sqrt(pi) as an unevaluated hi+lo pair.
constexpr double kTwoOverSqrtPiHi = 1.1283791670955126;
constexpr double kTwoOverSqrtPiLo = 1.533545961316588e-17;

constexpr double kUnitRoundoff = 0x1.0p-53;

// |t_{n+1}| / |t_n| for t_n = z^(2n+1) / (n! (2n+1)).  Decreasing in n, which
// is what makes the geometric tail bound valid.
double term_ratio(double zsq, int n) {
  return zsq * (2.0 * n + 1.0) / ((n + 1.0) * (2.0 * n + 3.0));
}

}  // namespace

EvalResult erf_series(Complex z, double tol) {
  detail::require_finite(z);
  detail::require_tol(tol);
  const double r = std::abs(z);
  if (r > kSeriesRadiusLimit)
    throw DomainError("erf_series: |z| = " + format_double(r) +
                      " exceeds the series radius guard " +
                      format_double(kSeriesRadiusLimit));
  if (z == Complex{}) return {Complex{}, 0.0, 1, Method::Series};

  const DD pref{kTwoOverSqrtPiHi, kTwoOverSqrtPiLo};
  const double zsq = r * r;
  const CDD zc = detail::cdd_from(z.real(), z.imag());
  const CDD w = detail::cdd_mul(zc, zc);

  CDD term = zc;  // t_0 = z
  CDD sum = term;
  double term_mag = r;  // |t_n|, tracked in plain doubles
  double peak_mag = r;  // max_n |t_n|, drives the noise floor
  int added = 1;

  // Covers the drift of the plain-double |t_n| tracking over the run.
  constexpr double kSlack = 1.0 + 1e-12;

  while (true) {
    const int n = added - 1;  // index of the last summed term
    const double next_mag = term_mag * term_ratio(zsq, n);
    const double rho = term_ratio(zsq, n + 1);
    if (rho < 0.5) {
      const double tail = kTwoOverSqrtPiHi * next_mag / (1.0 - rho) * kSlack;
      // |value| may still move by at most `tail`; that upper bound feeds the
      // final-rounding part of the noise floor.
      const double value_ub = kTwoOverSqrtPiHi * detail::cdd_abs(sum) + tail;
      const double noise =
          2.0 * kUnitRoundoff * value_ub + 16.0 * kUnitRoundoff *
                                               kUnitRoundoff *
                                               kTwoOverSqrtPiHi * peak_mag;
      if (tail <= 0.5 * tol && tail + noise <= tol) {
        const CDD scaled = {detail::dd_mul(sum.re, pref),
                            detail::dd_mul(sum.im, pref)};
        const Complex value{detail::dd_value(scaled.re),
                            detail::dd_value(scaled.im)};
        return {value, tail + noise, added, Method::Series};
      }
      if (noise > tol && tail <= 0x1.0p-20 * noise) {
        // Tail exhausted; what remains is the cancellation floor.
        throw ToleranceUnreachable(
            "erf_series: tolerance " + format_double(tol) +
                " is below the double-precision floor " +
                format_double(tail + noise) + " at |z| = " + format_double(r),
            tail + noise);
      }
    }
    if (added >= kSeriesMaxTerms) {
      const double feasible =
          kTwoOverSqrtPiHi * next_mag / std::max(1.0 - rho, 0.5);
      throw ToleranceUnreachable(
          "erf_series: term budget exhausted before tolerance " +
              format_double(tol),
          feasible);
    }
    const DD c =
        detail::dd_from_div(-(2.0 * n + 1.0), (n + 1.0) * (2.0 * n + 3.0));
    term = detail::cdd_scale(detail::cdd_mul(term, w), c);
    sum = detail::cdd_add(sum, term);
    term_mag = next_mag;
    peak_mag = std::max(peak_mag, term_mag);
    ++added;
  }
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].  Odd indices (plus the
// centre) carry the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993945, 0.5860872354676911, 0.4058451513773972,
    0.20778495500789848, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224, 0.06309209262997856, 0.10479001032225019,
    0.14065325971552592, 0.1690047266392679, 0.19035057806478542,
    0.20443294007529889, 0.20948214108472782};
constexpr double kWg[4] = {0.1294849661688697, 0.27970539148927664,
                           0.3818300505051189, 0.4179591836734694};

struct PanelResult {
  Complex integral;   // K15 estimate
  double err;         // |K15 - G7|
  double abs_integral;  // K15 applied to |f|, for the noise floor
};

template <typename F>
PanelResult gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex resk = kWgk[7] * fc;
  Complex resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const Complex f1 = f(c - h * kXgk[j]);
    const Complex f2 = f(c + h * kXgk[j]);
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[(j - 1) / 2] * (f1 + f2);
  }
  return {h * resk, h * std::abs(resk - resg), h * resabs};
}

// Neumaier-compensated complex accumulator for the panel sums.
struct Accumulator {
  double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;

  static void add1(double& s, double& comp, double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v))
      comp += (s - t) + v;
    else
      comp += (v - t) + s;
    s = t;
  }

  void add(Complex v) {
    add1(re, re_c, v.real());
    add1(im, im_c, v.imag());
  }

  Complex value() const { return {re + re_c, im + im_c}; }
};

}  // namespace

EvalResult erf_quadrature(Complex z, double tol) {
  detail::require_finite(z);
  detail::require_tol(tol);
  if (z == Complex{}) return {Complex{}, 0.0, 0, Method::Quadrature};

  // erf(z) = (2/sqrt(pi)) z * I with I = integral_0^1 exp(-(z s)^2) ds.
  const auto f = [z](double s) {
    const Complex t = z * s;
    return std::exp(-(t * t));
  };
  const double scale = kTwoOverSqrtPiHi * std::abs(z);

  constexpr int kMaxDepth = 48;
  struct Segment {
    double a, b;
    PanelResult r;
    int depth;
  };
  std::vector<Segment> work;
  int panels = 1;
  work.push_back({0.0, 1.0, gk15(f, 0.0, 1.0), 0});

  Accumulator total;
  double est = 0.0;     // accepted |K-G| estimates, integral scale
  double absint = 0.0;  // integral of |f|
  while (!work.empty()) {
    const Segment s = work.back();
    work.pop_back();
    const double len = s.b - s.a;
    // A panel whose estimate sits at the double-precision noise of the rule
    // cannot be improved by splitting.
    const double noise_floor = 2.0 * kUnitRoundoff * s.r.abs_integral;
    const bool budget_left = panels + 2 <= kQuadraturePanelBudget;
    if (s.r.err <= 0.5 * (tol / scale) * len || s.r.err <= noise_floor ||
        s.depth >= kMaxDepth || !budget_left) {
      total.add(s.r.integral);
      est += s.r.err;
      absint += s.r.abs_integral;
      continue;
    }
    const double mid = 0.5 * (s.a + s.b);
    panels += 2;
    work.push_back({mid, s.b, gk15(f, mid, s.b), s.depth + 1});
    work.push_back({s.a, mid, gk15(f, s.a, mid), s.depth + 1});
  }

  const Complex integral = total.value();
  Complex value = kTwoOverSqrtPiHi * (z * integral);
  value += kTwoOverSqrtPiLo * (z * integral);
  const double bound =
      est * scale +
      2.0 * kUnitRoundoff * (std::abs(value) + scale * absint);
  if (bound > tol)
    throw ToleranceUnreachable(
        "erf_quadrature: tolerance " + format_double(tol) +
            " unreachable within the panel budget; achieved " +
            format_double(bound) + " at z = " + format_complex(z),
        bound);
  return {value, bound, panels, Method::Quadrature};
}

Complex erf_derivative(Complex z) {
  detail::require_finite(z);
  const Complex e = std::exp(-(z * z));
  return kTwoOverSqrtPiHi * e + kTwoOverSqrtPiLo * e;
}

}  // namespace selfmap
