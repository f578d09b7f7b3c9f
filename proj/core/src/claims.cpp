#include "selfmap/claims.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "selfmap/checker.hpp"
#include "selfmap/detail/splitmix.hpp"
#include "selfmap/erf.hpp"
#include "selfmap/errors.hpp"
#include "selfmap/families.hpp"
#include "selfmap/figures.hpp"
#include "selfmap/format.hpp"

namespace selfmap {
namespace {

constexpr std::uint64_t kClaimSeed = 20260810ull;

// erf(1), frozen from brute-force quadrature run at 10x the adaptive panel
// budget ahead of the build (the acceptance suite re-derives it with an
// independent composite-Simpson oracle).
constexpr double kErfOneReference = 0.842700792949715;

std::vector<Complex> disk_samples(int count, double radius,
                                  std::uint64_t seed) {
  detail::SplitMix64 rng(seed);
  std::vector<Complex> zs;
  zs.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double r = radius * std::sqrt(rng.uniform());
    const double th = 2.0 * std::numbers::pi * rng.uniform();
    zs.emplace_back(r * std::cos(th), r * std::sin(th));
  }
  return zs;
}

ClaimReport run_claim(std::string id, std::string description,
                      std::string expected,
                      const std::function<void(ClaimReport&)>& body) {
  ClaimReport rep{std::move(id), std::move(description), std::move(expected),
                  "", true};
  try {
    body(rep);
  } catch (const std::exception& e) {
    rep.pass = false;
    if (!rep.observed.empty()) rep.observed += "; ";
    rep.observed += std::string("exception: ") + e.what();
  }
  return rep;
}

void note_failure(ClaimReport& rep, const std::string& why) {
  rep.pass = false;
  if (!rep.observed.empty()) rep.observed += "; ";
  rep.observed += why;
}

ClaimReport claim_c1() {
  return run_claim(
      "C1", "series and quadrature erf agree within combined certified bounds",
      "1000 deterministic pseudo-random z, |z| <= 4: |series - quadrature| <= "
      "combined bounds and combined bounds <= 1e-10; points the engine "
      "refuses at its double-precision floor are counted and cross-checked "
      "at the feasible bound",
      [](ClaimReport& rep) {
        constexpr double kSeriesTol = 2.5e-11;
        constexpr double kQuadTol = 2.5e-11;
        constexpr double kCap = 1e-10;
        int compared = 0;
        int refused = 0;
        double max_dev = 0.0;
        double max_combined = 0.0;
        for (const Complex z : disk_samples(1000, 4.0, kClaimSeed)) {
          EvalResult s, q;
          try {
            s = erf_series(z, kSeriesTol);
            q = erf_quadrature(z, kQuadTol);
          } catch (const ToleranceUnreachable& e) {
            ++refused;
            // Refusals are only legitimate where |erf| is so large that its
            // last-place unit alone exceeds the requested bound (near +-4i).
            if (!(e.feasible_tol > kQuadTol) || std::abs(z) < 3.0)
              note_failure(rep,
                           "unjustified refusal at z = " + format_complex(z));
            const EvalResult s2 = erf_series(z, 1e-8);
            const EvalResult q2 = erf_quadrature(z, 1e-8);
            if (!(std::abs(s2.value - q2.value) <=
                  s2.error_bound + q2.error_bound))
              note_failure(rep, "cross-check failed at refused z = " +
                                    format_complex(z));
            continue;
          }
          ++compared;
          const double dev = std::abs(s.value - q.value);
          const double combined = s.error_bound + q.error_bound;
          max_dev = std::max(max_dev, dev);
          max_combined = std::max(max_combined, combined);
          if (!(dev <= combined))
            note_failure(rep, "disagreement at z = " + format_complex(z));
          if (!(combined <= kCap))
            note_failure(rep,
                         "bound above cap at z = " + format_complex(z));
        }
        // Uniform samples on the radius-4 disk land near +-4i (where
        // |erf| ~ 1e6 and one ulp already exceeds the cap) a few percent of
        // the time; anything beyond that would make the claim vacuous.
        if (refused > 100) note_failure(rep, "too many floor refusals");
        if (!rep.observed.empty()) rep.observed += "; ";
        rep.observed += "compared=" + std::to_string(compared) +
                        " refused_at_floor=" + std::to_string(refused) +
                        " max_dev=" + format_double(max_dev) +
                        " max_combined=" + format_double(max_combined);
      });
}

ClaimReport claim_c2() {
  return run_claim(
      "C2", "erf(1) matches the frozen brute-force reference",
      "erf_quadrature(1, 1e-13) within 1e-12 of 0.842700792949715",
      [](ClaimReport& rep) {
        const EvalResult q = erf_quadrature(Complex{1.0, 0.0}, 1e-13);
        const double dev = std::abs(q.value.real() - kErfOneReference);
        if (!(dev <= 1e-12)) note_failure(rep, "value off the reference");
        if (q.value.imag() != 0.0) note_failure(rep, "imaginary residue");
        if (!rep.observed.empty()) rep.observed += "; ";
        rep.observed += "value=" + format_double(q.value.real()) +
                        " dev=" + format_double(dev) +
                        " bound=" + format_double(q.error_bound);
      });
}

ClaimReport claim_c3() {
  return run_claim(
      "C3", "odd symmetry erf(-z) = -erf(z)",
      "max |erf(-z) + erf(z)| over 1000 real and complex samples <= 2e-12",
      [](ClaimReport& rep) {
        double worst = 0.0;
        detail::SplitMix64 rng(kClaimSeed + 1);
        for (int i = 0; i < 500; ++i) {
          const Complex x{-4.0 + 8.0 * rng.uniform(), 0.0};
          const Complex sum = erf_quadrature(-x, 1e-12).value +
                              erf_quadrature(x, 1e-12).value;
          worst = std::max(worst, std::abs(sum));
        }
        for (const Complex z : disk_samples(500, 4.0, kClaimSeed + 2)) {
          // 1e-9 keeps the request above the noise floor across the disk.
          const Complex sum =
              erf_series(-z, 1e-9).value + erf_series(z, 1e-9).value;
          worst = std::max(worst, std::abs(sum));
        }
        if (!(worst <= 2e-12)) note_failure(rep, "odd symmetry broken");
        if (!rep.observed.empty()) rep.observed += "; ";
        rep.observed += "max |erf(-z)+erf(z)| = " + format_double(worst);
      });
}

ClaimReport claim_c4() {
  return run_claim(
      "C4", "sine family derivative at the origin",
      "origin_derivative(sine) = pi/2 exactly, in (1,2); central difference "
      "at step 1e-5 within 1e-9",
      [](ClaimReport& rep) {
        const OriginDerivative od =
            origin_derivative(MapFamily::sine(), 1e-12);
        const Complex fd = finite_difference_derivative(
            MapFamily::sine(), Complex{}, 1e-5, 1e-12);
        const double half_pi = std::numbers::pi / 2.0;
        const double fd_dev = std::abs(fd - half_pi);
        if (od.value != half_pi) note_failure(rep, "not the closed form");
        if (!(half_pi > 1.0 && half_pi < 2.0))
          note_failure(rep, "outside (1,2)");
        if (!(fd_dev <= 1e-9)) note_failure(rep, "finite difference off");
        if (!rep.observed.empty()) rep.observed += "; ";
        rep.observed += "value=" + format_double(od.value) +
                        " fd_dev=" + format_double(fd_dev);
      });
}

ClaimReport claim_c5() {
  return run_claim(
      "C5", "rational counterexample g_1.01 leaves (-1,1)",
      "eval(rational(1.01), 0.995) > 1.00001 and check_interval finds a "
      "witness at resolution 1e4",
      [](ClaimReport& rep) {
        const double v = eval(MapFamily::rational(1.01), Complex{0.995, 0.0},
                              1e-12)
                             .value.real();
        const SelfMapVerdict verdict =
            check_interval(MapFamily::rational(1.01), 10000);
        if (!(v > 1.00001)) note_failure(rep, "value not above 1.00001");
        if (verdict.outcome != Outcome::Witness)
          note_failure(rep, "no witness found");
        else if (!(std::abs(*verdict.witness_value) > 1.00001))
          note_failure(rep, "witness value not above 1.00001");
        if (!rep.observed.empty()) rep.observed += "; ";
        rep.observed +=
            "g(0.995)=" + format_double(v) +
            (verdict.outcome == Outcome::Witness
                 ? " witness_at=" + format_complex(*verdict.witness_point)
                 : " no_witness");
      });
}

ClaimReport claim_c6() {
  return run_claim(
      "C6", "sine leaves the disk at 3i/5",
      "check_disk(sine, 0.6, 256) returns a witness on the imaginary axis "
      "with modulus within 1e-9 of sinh(0.3 pi)",
      [](ClaimReport& rep) {
        const SelfMapVerdict verdict =
            check_disk(MapFamily::sine(), 0.6, 256);
        const double oracle = std::sinh(0.3 * std::numbers::pi);
        if (verdict.outcome != Outcome::Witness) {
          note_failure(rep, "no witness found");
          return;
        }
        const double mod = std::abs(*verdict.witness_value);
        if (!(std::abs(verdict.witness_point->real()) <= 1e-12))
          note_failure(rep, "witness not on the imaginary axis");
        if (!(std::abs(mod - oracle) <= 1e-9))
          note_failure(rep, "modulus off sinh(0.3 pi)");
        if (!rep.observed.empty()) rep.observed += "; ";
        rep.observed += "witness_at=" + format_complex(*verdict.witness_point) +
                        " |value|=" + format_double(mod) +
                        " sinh(0.3pi)=" + format_double(oracle);
      });
}

// Central differences at steps h, h/2, h/4, h/8 with three Richardson
// eliminations; truncation O(h^8), noise kept small by the large base step.
double richardson_origin_derivative(const MapFamily& family, double base_step) {
  double d[4];
  for (int m = 0; m < 4; ++m)
    d[m] = finite_difference_derivative(family, Complex{},
                                        base_step / (1 << m), 1e-15)
               .real();
  for (int level = 1; level <= 3; ++level) {
    const double fac = std::pow(4.0, level);
    for (int m = 0; m + level < 4; ++m)
      d[m] = (fac * d[m + 1] - d[m]) / (fac - 1.0);
  }
  return d[0];
}

ClaimReport claim_c7() {
  return run_claim(
      "C7", "scaled-erf origin derivative grows like 2k/sqrt(pi)",
      "h_k'(0) strictly increasing over k in {1,5,10,50}, within 1e-10 of the "
      "Richardson finite-difference value, and for k=50 within 1e-6 relative "
      "of 100/sqrt(pi)",
      [](ClaimReport& rep) {
        const double ks[4] = {1.0, 5.0, 10.0, 50.0};
        double prev = 0.0;
        std::string vals;
        for (double k : ks) {
          const MapFamily fam = MapFamily::scaled_erf(k);
          const double od = origin_derivative(fam, 1e-13).value;
          const double fd = richardson_origin_derivative(fam, 0.05 / k);
          if (!(od > prev))
            note_failure(rep, "not increasing at k=" + format_double(k));
          if (!(std::abs(od - fd) <= 1e-10))
            note_failure(rep, "finite difference off at k=" +
                                  format_double(k) + " (dev=" +
                                  format_double(std::abs(od - fd)) + ")");
          prev = od;
          if (!vals.empty()) vals += " ";
          vals += format_double(od);
        }
        const double asymptote = 100.0 / std::sqrt(std::numbers::pi);
        if (!(std::abs(prev - asymptote) <= 1e-6 * prev))
          note_failure(rep, "k=50 off the 2k/sqrt(pi) asymptote");
        if (!rep.observed.empty()) rep.observed += "; ";
        rep.observed += "h_k'(0) = [" + vals + "]";
      });
}

ClaimReport claim_c8() {
  return run_claim(
      "C8", "contrapositive Schwarz suite on the 0.99 disk",
      "sine, rational(0.25/0.5/0.9), scaled-erf(1/2/5/10): "
      "LemmaForcesViolation_WitnessFound; rational(0): ConsistentWithLemma "
      "(radius 0.99, 4096 angular samples)",
      [](ClaimReport& rep) {
        const std::vector<MapFamily> expanding = {
            MapFamily::sine(),          MapFamily::rational(0.25),
            MapFamily::rational(0.5),   MapFamily::rational(0.9),
            MapFamily::scaled_erf(1.0), MapFamily::scaled_erf(2.0),
            MapFamily::scaled_erf(5.0), MapFamily::scaled_erf(10.0)};
        int found = 0;
        for (const MapFamily& fam : expanding) {
          const SchwarzVerdict v = schwarz_verdict(fam, 0.99, 4096);
          if (v.classification ==
              SchwarzClass::LemmaForcesViolation_WitnessFound)
            ++found;
          else
            note_failure(rep, "no forced witness for " + fam.label());
        }
        const SchwarzVerdict id = schwarz_verdict(MapFamily::rational(0.0),
                                                  0.99, 4096);
        if (id.classification != SchwarzClass::ConsistentWithLemma)
          note_failure(rep, "identity misclassified");
        if (!rep.observed.empty()) rep.observed += "; ";
        rep.observed += "forced_witnesses=" + std::to_string(found) +
                        "/8 identity=consistent-with-lemma";
      });
}

}  // namespace

std::vector<ClaimReport> run_claim_suite() {
  std::vector<ClaimReport> out;
  out.push_back(claim_c1());
  out.push_back(claim_c2());
  out.push_back(claim_c3());
  out.push_back(claim_c4());
  out.push_back(claim_c5());
  out.push_back(claim_c6());
  out.push_back(claim_c7());
  out.push_back(claim_c8());
  return out;
}

std::string format_claim(const ClaimReport& report) {
  return report.claim_id + (report.pass ? " [PASS] " : " [FAIL] ") +
         report.description + " | expected: " + report.expected +
         " | observed: " + report.observed;
}

}  // namespace selfmap
