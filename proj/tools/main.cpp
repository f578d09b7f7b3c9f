// Command-line front end: evaluate the map families, run self-map and
// Schwarz-lemma checks, verify the built-in claim suite, and emit figure
// data as CSV.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selfmap/checker.hpp"
#include "selfmap/claims.hpp"
#include "selfmap/errors.hpp"
#include "selfmap/families.hpp"
#include "selfmap/figures.hpp"
#include "selfmap/format.hpp"

namespace {

using selfmap::Complex;
using selfmap::MapFamily;

const char* classification_name(selfmap::SchwarzClass c) {
  switch (c) {
    case selfmap::SchwarzClass::ConsistentWithLemma:
      return "consistent-with-lemma";
    case selfmap::SchwarzClass::LemmaForcesViolation_WitnessFound:
      return "lemma-forces-violation-witness-found";
    case selfmap::SchwarzClass::LemmaForcesViolation_WitnessMissing:
      return "lemma-forces-violation-witness-missing";
  }
  return "?";
}

std::string verdict_line(const selfmap::SelfMapVerdict& v) {
  const char* domain =
      v.domain == selfmap::DomainKind::Interval ? "interval" : "disk";
  if (v.outcome == selfmap::Outcome::Witness) {
    return std::string("verdict=witness domain=") + domain +
           " point=" + selfmap::format_complex(*v.witness_point) +
           " value=" + selfmap::format_complex(*v.witness_value) +
           " |value|=" + selfmap::format_double(std::abs(*v.witness_value)) +
           " resolution=" + std::to_string(v.resolution);
  }
  return std::string("verdict=no-violation-found domain=") + domain +
         " resolution=" + std::to_string(v.resolution);
}

// Family selection shared by eval/check/schwarz subcommands.
struct FamilyArgs {
  std::string name;
  double a = 0.0;
  double k = 0.0;
  bool has_a = false;
  bool has_k = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", name, "Family: sine | rational | scaled-erf")
        ->required()
        ->check(CLI::IsMember({"sine", "rational", "scaled-erf"}));
    cmd->add_option("--a", a, "Parameter a (rational family)")
        ->each([this](const std::string&) { has_a = true; });
    cmd->add_option("--k", k, "Parameter k (scaled-erf family, k > 0)")
        ->each([this](const std::string&) { has_k = true; });
  }

  MapFamily build() const {
    if (name == "sine") return MapFamily::sine();
    if (name == "rational") {
      if (!has_a)
        throw CLI::ValidationError("--a", "required for the rational family");
      return MapFamily::rational(a);
    }
    if (!has_k)
      throw CLI::ValidationError("--k", "required for the scaled-erf family");
    return MapFamily::scaled_erf(k);
  }
};

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw selfmap::Error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "selfmap: evaluate erf-based analytic maps, check interval/disk "
      "self-map properties, and emit figure data"};
  app.require_subcommand(1);
  app.footer(
      "Complex literals: a+bi with optional parts (0.6i, -1, 0.3-0.2i, "
      "1e-3+2i).\n"
      "Exit codes: 0 success/all-pass; 1 usage error; 2 domain or evaluation "
      "error;\n"
      "verify-paper-claims exits with the number of failing claims (a result "
      "of 1\n"
      "is therefore ambiguous with a usage error).");

  int rc = 0;
  double tol = 1e-12;
  std::string out_path;

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "Evaluate a family at a point");
  FamilyArgs eval_family;
  eval_family.attach(cmd_eval);
  std::string at_text;
  cmd_eval->add_option("--at", at_text, "Evaluation point (complex literal)")
      ->required();
  cmd_eval->add_option("--tol", tol, "Requested error bound")
      ->capture_default_str();
  cmd_eval->add_option("--out", out_path, "Output path (default stdout)");
  cmd_eval->callback([&] {
    const std::optional<Complex> z = selfmap::parse_complex(at_text);
    if (!z) throw CLI::ValidationError("--at", "not a complex literal");
    const selfmap::EvalResult r = eval(eval_family.build(), *z, tol);
    Output out(out_path);
    out.stream() << "value=" << selfmap::format_complex(r.value)
                 << " error_bound=" << selfmap::format_double(r.error_bound)
                 << " method=" << selfmap::method_name(r.method)
                 << " terms_or_subdivisions=" << r.terms_or_subdivisions
                 << '\n';
  });

  // check-interval
  auto* cmd_ci = app.add_subcommand(
      "check-interval", "Scan (-1,1) for |f(x)| > 1 (bound-aware)");
  FamilyArgs ci_family;
  ci_family.attach(cmd_ci);
  long ci_samples = 10000;
  cmd_ci->add_option("--samples", ci_samples, "Low-discrepancy sample count")
      ->capture_default_str();
  cmd_ci->add_option("--tol", tol, "Evaluation tolerance")
      ->capture_default_str();
  cmd_ci->add_option("--out", out_path, "Output path (default stdout)");
  cmd_ci->callback([&] {
    const selfmap::SelfMapVerdict v =
        check_interval(ci_family.build(), ci_samples, tol);
    Output out(out_path);
    out.stream() << verdict_line(v) << '\n';
  });

  // check-disk
  auto* cmd_cd = app.add_subcommand(
      "check-disk", "Scan the circle |z| = r for |f(z)| > 1 (bound-aware)");
  FamilyArgs cd_family;
  cd_family.attach(cmd_cd);
  double cd_radius = 0.99;
  long cd_samples = 256;
  cmd_cd->add_option("--radius", cd_radius, "Boundary radius in (0,1)")
      ->capture_default_str();
  cmd_cd->add_option("--samples", cd_samples, "Angular sample count")
      ->capture_default_str();
  cmd_cd->add_option("--tol", tol, "Evaluation tolerance")
      ->capture_default_str();
  cmd_cd->add_option("--out", out_path, "Output path (default stdout)");
  cmd_cd->callback([&] {
    const selfmap::SelfMapVerdict v =
        check_disk(cd_family.build(), cd_radius, cd_samples, tol);
    Output out(out_path);
    out.stream() << verdict_line(v) << '\n';
  });

  // schwarz
  auto* cmd_sz = app.add_subcommand(
      "schwarz", "Render the contrapositive Schwarz-lemma verdict");
  FamilyArgs sz_family;
  sz_family.attach(cmd_sz);
  double sz_radius = 0.99;
  long sz_samples = 4096;
  cmd_sz->add_option("--radius", sz_radius, "Boundary radius in (0,1)")
      ->capture_default_str();
  cmd_sz->add_option("--samples", sz_samples, "Angular sample count")
      ->capture_default_str();
  cmd_sz->add_option("--tol", tol, "Evaluation tolerance")
      ->capture_default_str();
  cmd_sz->add_option("--out", out_path, "Output path (default stdout)");
  cmd_sz->callback([&] {
    const selfmap::SchwarzVerdict v =
        schwarz_verdict(sz_family.build(), sz_radius, sz_samples, tol);
    Output out(out_path);
    out.stream() << "classification=" << classification_name(v.classification)
                 << " fixes_origin=" << (v.fixes_origin ? "true" : "false")
                 << " origin_derivative_magnitude="
                 << selfmap::format_double(v.origin_derivative_magnitude)
                 << " disk: " << verdict_line(v.disk_verdict) << '\n';
  });

  // verify-paper-claims
  auto* cmd_claims = app.add_subcommand(
      "verify-paper-claims",
      "Run the built-in claim suite C1..C8; exit code = failing claims");
  cmd_claims->add_option("--out", out_path, "Output path (default stdout)");
  cmd_claims->callback([&] {
    const std::vector<selfmap::ClaimReport> reports =
        selfmap::run_claim_suite();
    Output out(out_path);
    int failing = 0;
    for (const selfmap::ClaimReport& rep : reports) {
      out.stream() << selfmap::format_claim(rep) << '\n';
      if (!rep.pass) ++failing;
    }
    out.stream() << "claims_passed=" << (reports.size() - failing) << "/"
                 << reports.size() << '\n';
    rc = failing;
  });

  // figure-interval
  auto* cmd_fi = app.add_subcommand(
      "figure-interval", "CSV of h_k(x) columns over [-1,1]");
  std::vector<double> fi_ks{1.0, 5.0, 10.0, 50.0};
  int fi_points = 401;
  cmd_fi->add_option("--k", fi_ks, "k values (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  cmd_fi->add_option("--points", fi_points, "Grid points")
      ->capture_default_str();
  cmd_fi->add_option("--tol", tol, "Evaluation tolerance")
      ->capture_default_str();
  cmd_fi->add_option("--out", out_path, "Output path (default stdout)");
  cmd_fi->callback([&] {
    const selfmap::IntervalFigure fig =
        selfmap::figure_interval(fi_ks, fi_points, tol);
    Output out(out_path);
    selfmap::write_interval_csv(fig, out.stream());
  });

  // figure-disk
  auto* cmd_fd = app.add_subcommand(
      "figure-disk", "CSV of |erf(z)| over the polar unit-disk grid");
  int fd_radial = 101;
  int fd_angular = 256;
  cmd_fd->add_option("--radial", fd_radial, "Radial grid count")
      ->capture_default_str();
  cmd_fd->add_option("--angular", fd_angular, "Angular grid count")
      ->capture_default_str();
  cmd_fd->add_option("--tol", tol, "Evaluation tolerance")
      ->capture_default_str();
  cmd_fd->add_option("--out", out_path, "Output path (default stdout)");
  cmd_fd->callback([&] {
    const selfmap::DiskFigure fig =
        selfmap::figure_disk(fd_radial, fd_angular, tol);
    Output out(out_path);
    selfmap::write_disk_csv(fig, out.stream());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const selfmap::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
