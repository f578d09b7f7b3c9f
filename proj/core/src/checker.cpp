#include "selfmap/checker.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "selfmap/detail/validate.hpp"
#include "selfmap/errors.hpp"

namespace selfmap {
namespace {

double van_der_corput(std::uint64_t i) {
  double v = 0.0;
  double f = 0.5;
  while (i) {
    if (i & 1) v += f;
    f *= 0.5;
    i >>= 1;
  }
  return v;
}

// Fixed, nested probe sequence over (-1,1): the published counterexample
// points first, then dyadic near-endpoint probes, then the van der Corput
// fill.  Prefixes of the sequence are prefixes of any longer run, which is
// what makes witnesses monotone in the resolution.
std::vector<Complex> interval_probes(long samples) {
  std::vector<Complex> probes;
  probes.reserve(static_cast<std::size_t>(samples) + 82);
  probes.emplace_back(0.995, 0.0);
  probes.emplace_back(-0.995, 0.0);
  for (int j = 1; j <= 40; ++j) {
    const double x = 1.0 - std::ldexp(1.0, -j);
    probes.emplace_back(x, 0.0);
    probes.emplace_back(-x, 0.0);
  }
  for (long i = 1; i <= samples; ++i)
    probes.emplace_back(
        2.0 * van_der_corput(static_cast<std::uint64_t>(i)) - 1.0, 0.0);
  return probes;
}

// Finite stand-in for the diverging value at a pole probe: the certified
// lower-bound magnitude |a+1||z| / kPoleProximity in the numerator's phase.
// (witness values must stay finite.)
Complex pole_witness_value(const MapFamily& family, Complex z) {
  const Complex num = (family.a() + 1.0) * z;
  const double mag = std::abs(num) / kPoleProximity;
  if (num == Complex{}) return {mag, 0.0};
  return num / std::abs(num) * mag;
}

struct ProbeValue {
  Complex value{};
  double bound = 0.0;
  bool pole = false;
};

ProbeValue eval_probe(const MapFamily& family, Complex z, double tol) {
  try {
    const EvalResult r = eval(family, z, tol);
    return {r.value, r.error_bound, false};
  } catch (const PoleError&) {
    return {pole_witness_value(family, z), 0.0, true};
  }
}

// Bound-aware violation test: never report a witness that rounding could
// explain.
bool violates(const ProbeValue& p) {
  return p.pole || std::abs(p.value) > 1.0 + p.bound;
}

}  // namespace

SelfMapVerdict check_interval(const MapFamily& family, long samples,
                              double tol) {
  if (samples < 2)
    throw std::invalid_argument("check_interval: samples must be >= 2");
  detail::require_tol(tol);
  const std::vector<Complex> probes = interval_probes(samples);
  const long resolution = static_cast<long>(probes.size());
  for (const Complex& x : probes) {
    const ProbeValue p = eval_probe(family, x, tol);
    if (!violates(p)) continue;
    const ProbeValue confirm = p.pole ? p : eval_probe(family, x, tol / 10.0);
    if (!violates(confirm)) continue;
    return {DomainKind::Interval, Outcome::Witness, x, confirm.value,
            resolution};
  }
  return {DomainKind::Interval, Outcome::NoViolationFound, std::nullopt,
          std::nullopt, resolution};
}

SelfMapVerdict check_disk(const MapFamily& family, double boundary_radius,
                          long angular_samples, double tol) {
  if (!(boundary_radius > 0.0 && boundary_radius < 1.0))
    throw std::invalid_argument(
        "check_disk: boundary radius must lie in (0,1)");
  if (angular_samples < 8)
    throw std::invalid_argument("check_disk: need at least 8 angular samples");
  detail::require_tol(tol);

  const double r = boundary_radius;
  std::vector<Complex> probes;
  probes.reserve(static_cast<std::size_t>(angular_samples) + 4);
  probes.emplace_back(r, 0.0);
  probes.emplace_back(-r, 0.0);
  probes.emplace_back(0.0, r);  // exact axis probes precede their angular twins
  probes.emplace_back(0.0, -r);
  for (long j = 0; j < angular_samples; ++j) {
    const double th =
        2.0 * std::numbers::pi * static_cast<double>(j) / angular_samples;
    probes.emplace_back(r * std::cos(th), r * std::sin(th));
  }
  const long resolution = static_cast<long>(probes.size());

  // Among violating probes report the max-modulus one; ties keep the
  // smallest index.
  long best = -1;
  double best_mod = 0.0;
  ProbeValue best_probe;
  for (long i = 0; i < resolution; ++i) {
    const ProbeValue p = eval_probe(family, probes[i], tol);
    if (!violates(p)) continue;
    const double mod = std::abs(p.value);
    if (best < 0 || mod > best_mod) {
      best = i;
      best_mod = mod;
      best_probe = p;
    }
  }
  if (best >= 0) {
    const ProbeValue confirm =
        best_probe.pole ? best_probe
                        : eval_probe(family, probes[best], tol / 10.0);
    if (violates(confirm))
      return {DomainKind::Disk, Outcome::Witness, probes[best], confirm.value,
              resolution};
  }
  return {DomainKind::Disk, Outcome::NoViolationFound, std::nullopt,
          std::nullopt, resolution};
}

SchwarzVerdict schwarz_verdict(const MapFamily& family, double boundary_radius,
                               long angular_samples, double tol) {
  SchwarzVerdict v;
  v.fixes_origin = eval(family, Complex{}, tol).value == Complex{};
  v.origin_derivative_magnitude =
      std::abs(origin_derivative(family, tol).value);
  v.disk_verdict = check_disk(family, boundary_radius, angular_samples, tol);
  if (v.fixes_origin && v.origin_derivative_magnitude > 1.0) {
    v.classification = v.disk_verdict.outcome == Outcome::Witness
                           ? SchwarzClass::LemmaForcesViolation_WitnessFound
                           : SchwarzClass::LemmaForcesViolation_WitnessMissing;
  } else {
    v.classification = SchwarzClass::ConsistentWithLemma;
  }
  return v;
}

Complex finite_difference_derivative(const MapFamily& family, Complex at,
                                     double step, double tol) {
  detail::require_finite(at);
  detail::require_tol(tol);
  if (!(step > 0.0) || !std::isfinite(step))
    throw std::invalid_argument("step must be positive and finite");
  const Complex hi = eval(family, at + step, tol).value;
  const Complex lo = eval(family, at - step, tol).value;
  return (hi - lo) / (2.0 * step);
}

}  // namespace selfmap
