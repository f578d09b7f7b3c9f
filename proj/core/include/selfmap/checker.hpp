#pragma once

#include <optional>

#include "selfmap/families.hpp"

namespace selfmap {

// Verifies or falsifies self-map properties by deterministic sampling, and
// renders Schwarz-lemma verdicts using the lemma's contrapositive: a map that
// fixes the origin with |f'(0)| > 1 cannot send the unit disk into itself,
// so a boundary scan must be able to exhibit a witness.

enum class DomainKind { Interval, Disk };
enum class Outcome { NoViolationFound, Witness };

struct SelfMapVerdict {
  DomainKind domain;
  Outcome outcome;
  std::optional<Complex> witness_point;  // present iff outcome == Witness
  std::optional<Complex> witness_value;  // |witness_value| > 1, bound-aware
  long resolution = 0;                   // probes examined
};

enum class SchwarzClass {
  ConsistentWithLemma,
  LemmaForcesViolation_WitnessFound,
  LemmaForcesViolation_WitnessMissing,
};

struct SchwarzVerdict {
  bool fixes_origin = false;
  double origin_derivative_magnitude = 0.0;
  SelfMapVerdict disk_verdict;
  SchwarzClass classification = SchwarzClass::ConsistentWithLemma;
};

/// Scans (-1,1) for |f(x)| > 1 + error_bound.  The probe sequence is fixed
/// and nested: the published counterexample points +-0.995 first, then the
/// dyadic near-endpoint probes +-(1 - 2^-j), j = 1..40, then `samples` points
/// of the base-2 van der Corput sequence mapped onto (-1,1).  The first
/// violating probe (re-verified at tol/10) is reported.  A pole inside the
/// interval counts as a witness; its reported value is the certified
/// lower-bound magnitude at the pole-proximity threshold.
SelfMapVerdict check_interval(const MapFamily& family, long samples,
                              double tol = 1e-12);

/// Scans the circle |z| = boundary_radius (by the maximum modulus principle a
/// violation anywhere in the disk shows up on such a circle).  Probes are the
/// axis points +-r, +-ri followed by angular_samples equispaced angles; among
/// violating probes the one of maximum modulus is reported (ties: smallest
/// index).  NoViolationFound is resolution-qualified, never a certificate.
SelfMapVerdict check_disk(const MapFamily& family, double boundary_radius,
                          long angular_samples, double tol = 1e-12);

/// Combines exact origin fixing, the closed-form origin derivative and a disk
/// scan.  classification is LemmaForcesViolation_* iff the origin is fixed
/// and the derivative magnitude exceeds 1.
SchwarzVerdict schwarz_verdict(const MapFamily& family, double boundary_radius,
                               long angular_samples, double tol = 1e-12);

/// Central difference (f(at + step) - f(at - step)) / (2 step), the
/// cross-check for the closed-form derivatives.
Complex finite_difference_derivative(const MapFamily& family, Complex at,
                                     double step, double tol = 1e-12);

}  // namespace selfmap
