// polydefect: lattice-polytope invariants and dual-defect checks from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polydefect/construct.hpp"
#include "polydefect/errors.hpp"
#include "polydefect/fuzz.hpp"
#include "polydefect/identities.hpp"
#include "polydefect/report.hpp"
#include "polydefect/survey.hpp"

using namespace polydefect;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

unsigned resolve_threads(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("POLYDEFECT_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("POLYDEFECT_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

void print(const Json& j, bool json, const std::string& text) {
  if (json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string render_identity(const IdentityReport& r) {
  std::string s = (r.passed ? "PASS  " : "FAIL  ") + r.name + "  [" + r.ranges + "]  " + std::to_string(r.cases) + " cases\n";
  if (r.first_failure)
    s += "      first failure: " + r.first_failure->parameters + "  lhs=" + r.first_failure->lhs + "  rhs=" +
         r.first_failure->rhs + "\n";
  for (const auto& n : r.notes) s += "      note: " + n + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-polytope invariants, the invariant c(P), and dual-defect checks"};
  app.require_subcommand(1);
  bool json = false;
  int threads_flag = 0;

  // info
  auto* info = app.add_subcommand("info", "Invariants, verdict and identity checks for one polytope");
  std::string info_file, info_spec;
  std::optional<int> radius;
  info->add_option("file", info_file, "polytope JSON file");
  info->add_option("--spec", info_spec, "construction expression instead of a file");
  info->add_option("--radius", radius, "search width-one directions with coefficients in [-r, r]")->check(CLI::NonNegativeNumber);
  info->add_flag("--json", json, "JSON output");

  // construct
  auto* cons = app.add_subcommand("construct", "Build a polytope from an expression and print its JSON");
  std::string cons_spec, cons_out;
  cons->add_option("spec", cons_spec, "e.g. product(pyramid(dilate(2,simplex(2))),cube(1,2))")->required();
  cons->add_option("-o,--output", cons_out, "write to this file instead of stdout");

  // identities
  auto* ids = app.add_subcommand("identities", "Run the binomial identity suites");
  std::string suite = "all";
  long a_max = 20, b_max = 20, n_max = 12, cert_a = 6, cert_j = 10, rec_a = 5, rec_j = 12;
  std::vector<long> at;
  ids->add_option("suite", suite, "convolution | alternating | certificate | telescoped | recurrences | all")
      ->transform(CLI::CheckedTransformer(std::map<std::string, std::string>{
          {"convolution", "convolution"}, {"lemma22", "convolution"}, {"alternating", "alternating"},
          {"lemma23", "alternating"}, {"certificate", "certificate"}, {"telescoped", "telescoped"},
          {"recurrences", "recurrences"}, {"all", "all"}}));
  ids->add_option("--a-max", a_max, "convolution: upper bound for a");
  ids->add_option("--b-max", b_max, "convolution: upper bound for b");
  ids->add_option("--n-max", n_max, "alternating: upper bound for n");
  ids->add_option("--cert-a-max", cert_a, "certificate/telescoped: upper bound for a");
  ids->add_option("--cert-j-max", cert_j, "certificate/telescoped: upper bound for j");
  ids->add_option("--rec-a-max", rec_a, "recurrences: upper bound for a");
  ids->add_option("--rec-j-max", rec_j, "recurrences: upper bound for j");
  ids->add_option("--at", at, "certificate: check the single point a j k i")->expected(4);
  ids->add_flag("--json", json, "JSON output");

  // survey
  auto* survey = app.add_subcommand("survey", "Tabulate a family of products of dilated simplices");
  std::string family;
  std::vector<long> bounds;
  survey->add_option("family", family, "segre K1MAX K2MAX | dilated-simplex R DMAX KMAX")
      ->required()
      ->check(CLI::IsMember({"segre", "dilated-simplex"}));
  survey->add_option("bounds", bounds, "family bounds")->required();
  survey->add_flag("--json", json, "JSON output");
  survey->add_option("--threads", threads_flag, "worker threads (default: POLYDEFECT_THREADS or 1)");

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "Check every applicable invariant on seeded random polytopes");
  std::string kind;
  int fuzz_dim = 3;
  long fuzz_bound = 2;
  std::size_t fuzz_count = 0;
  std::uint64_t seed = 0;
  fuzz->add_option("kind", kind, "simplex | simple | general")->required()->check(CLI::IsMember({"simplex", "simple", "general"}));
  fuzz->add_option("dim", fuzz_dim, "dimension")->required();
  fuzz->add_option("bound", fuzz_bound, "coordinate bound")->required();
  fuzz->add_option("count", fuzz_count, "number of instances")->required();
  fuzz->add_option("--seed", seed, "RNG seed");
  fuzz->add_option("--threads", threads_flag, "worker threads (default: POLYDEFECT_THREADS or 1)");
  fuzz->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*info) {
      if (info_file.empty() == info_spec.empty()) throw InputError("info needs exactly one of FILE or --spec");
      const LatticePolytope p = info_spec.empty() ? read_polytope_file(info_file) : construct(info_spec);
      ReportOptions opts;
      opts.radius = radius;
      const Json report = build_report(p, info_spec.empty() ? info_file : info_spec, opts);
      print(report, json, render_text(report));
      return report_passed(report) ? 0 : kExitFailure;
    }

    if (*cons) {
      const Json j = polytope_to_json(construct(cons_spec));
      if (cons_out.empty()) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::ofstream out(cons_out);
        if (!out) throw InputError("cannot write '" + cons_out + "'");
        out << j.dump(2) << '\n';
      }
      return 0;
    }

    if (*ids) {
      if (!at.empty()) {
        try {
          const bool ok = wz_certificate_check(at[0], at[1], at[2], at[3]);
          const Json j{{"a", at[0]}, {"j", at[1]}, {"k", at[2]}, {"i", at[3]}, {"status", ok ? "pass" : "fail"}};
          print(j, json, std::string(ok ? "PASS" : "FAIL") + "  certificate at a=" + std::to_string(at[0]) + " j=" +
                             std::to_string(at[1]) + " k=" + std::to_string(at[2]) + " i=" + std::to_string(at[3]) + "\n");
          return ok ? 0 : kExitFailure;
        } catch (const InputError& e) {
          const Json j{{"status", "out-of-domain"}, {"reason", e.what()}};
          print(j, json, std::string("SKIP  ") + e.what() + "\n");
          return 0;
        }
      }
      std::vector<IdentityReport> reports;
      const bool all = suite == "all";
      if (all || suite == "convolution") reports.push_back(convolution_sweep(a_max, b_max));
      if (all || suite == "alternating") reports.push_back(alternating_sum_sweep(n_max));
      if (all || suite == "certificate") reports.push_back(certificate_sweep(cert_a, cert_j));
      if (all || suite == "telescoped") reports.push_back(telescoped_sweep(cert_a, cert_j));
      if (all || suite == "recurrences") reports.push_back(recurrence_sweep(rec_a, rec_j));
      Json j{{"format", kReportFormat}, {"suites", Json::array()}};
      std::string text;
      bool ok = true;
      for (const auto& r : reports) {
        j["suites"].push_back(to_json(r));
        text += render_identity(r);
        ok = ok && r.passed;
      }
      j["passed"] = ok;
      print(j, json, text);
      return ok ? 0 : kExitFailure;
    }

    if (*survey) {
      const unsigned threads = resolve_threads(threads_flag);
      std::vector<SurveyRow> rows;
      if (family == "segre") {
        if (bounds.size() != 2) throw InputError("segre needs K1MAX K2MAX");
        rows = survey_segre(bounds[0], bounds[1], threads);
      } else {
        if (bounds.size() != 3) throw InputError("dilated-simplex needs R DMAX KMAX");
        rows = survey_dilated_simplices(bounds[0], bounds[1], bounds[2], threads);
      }
      const Json j = to_json(rows, family);
      std::string text = render_survey(rows);
      if (family == "segre") text += std::string("\nnote: ") + kSegreWordingNote + "\n";
      print(j, json, text);
      return j["all_consistent"].get<bool>() ? 0 : kExitFailure;
    }

    if (*fuzz) {
      FuzzOptions opts;
      opts.kind = parse_fuzz_kind(kind);
      opts.dim = fuzz_dim;
      opts.bound = fuzz_bound;
      opts.count = fuzz_count;
      opts.seed = seed;
      opts.threads = resolve_threads(threads_flag);
      const FuzzResult result = run_fuzz(opts);
      const Json j = to_json(result);
      std::string text = "fuzz " + kind + " dim " + std::to_string(fuzz_dim) + " bound " + std::to_string(fuzz_bound) +
                         " seed " + std::to_string(seed) + ": " + std::to_string(fuzz_count) + " instances, " +
                         std::to_string(result.checks()) + " checks, " + std::to_string(result.failures()) +
                         " failures, " + std::to_string(result.findings()) + " findings\n";
      for (const auto& inst : j["instances"]) {
        text += "  instance " + inst["index"].dump() + " vertices " + inst["vertices"].dump() + "\n";
        for (const auto& f : inst.value("failures", Json::array())) text += "    FAIL " + f.get<std::string>() + "\n";
        for (const auto& f : inst.value("findings", Json::array())) text += "    finding: " + f.get<std::string>() + "\n";
        text += "    reproduce: " + inst["reproduce"].get<std::string>() + "\n";
      }
      print(j, json, text);
      return result.failures() == 0 ? 0 : kExitFailure;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
