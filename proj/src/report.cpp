#include "polydefect/report.hpp"

#include <fstream>
#include <sstream>

#include "polydefect/errors.hpp"

namespace polydefect {

Json to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json to_json(const Rat& v) { return to_string(v); }

Json polytope_to_json(const LatticePolytope& p) {
  Json vs = Json::array();
  for (const auto& v : p.vertices()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_json(x));
    vs.push_back(std::move(row));
  }
  return Json{{"ambient_dim", p.ambient_dim()}, {"vertices", std::move(vs)}};
}

namespace {

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InputError("vertex coordinate is not an integer: " + j.dump());
    return v;
  }
  throw InputError("vertex coordinate is not an integer: " + j.dump());
}

}  // namespace

LatticePolytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("vertices"))
    throw InputError("polytope JSON needs \"ambient_dim\" and \"vertices\"");
  if (!j["ambient_dim"].is_number_integer() || j["ambient_dim"].get<long>() < 0)
    throw InputError("\"ambient_dim\" must be a nonnegative integer");
  const auto n = j["ambient_dim"].get<std::size_t>();
  const Json& vs = j["vertices"];
  if (!vs.is_array() || vs.empty()) throw InputError("\"vertices\" must be a nonempty array");
  std::vector<IntVector> pts;
  for (const auto& row : vs) {
    if (!row.is_array()) throw InputError("each vertex must be an array of integers");
    IntVector v;
    for (const auto& x : row) v.push_back(int_from_json(x));
    pts.push_back(std::move(v));
  }
  return LatticePolytope::from_vertices(n, pts);
}

LatticePolytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open polytope file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return polytope_from_json(j);
}

Json to_json(const EhrhartProfile& prof) {
  Json coeffs = Json::array();
  for (const auto& c : prof.ehr_coeffs) coeffs.push_back(to_json(c));
  Json h = Json::array();
  for (const auto& x : prof.h_star) h.push_back(to_json(x));
  return Json{{"dim", prof.dim},
              {"ehrhart_polynomial", std::move(coeffs)},
              {"h_star", std::move(h)},
              {"normalized_volume", to_json(prof.normalized_volume)},
              {"degree", prof.degree},
              {"codegree", prof.codegree}};
}

Json to_json(const DefectVerdict& v) {
  return Json{{"is_smooth", v.is_smooth},   {"codegree", v.codegree},
              {"dim", v.dim},               {"c_value", to_json(v.c_value)},
              {"criterion_met", v.criterion_met}, {"defect", v.defect},
              {"note", v.q_normal_note}};
}

Json to_json(const IdentityReport& r) {
  Json j{{"name", r.name}, {"ranges", r.ranges}, {"passed", r.passed}, {"cases", r.cases}};
  if (r.first_failure)
    j["first_failure"] = Json{{"parameters", r.first_failure->parameters},
                              {"lhs", r.first_failure->lhs},
                              {"rhs", r.first_failure->rhs}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const BoxPointProfile& prof) {
  Json s = Json::array();
  for (const auto& [support, count] : prof.s) s.push_back(Json{{"support", support}, {"count", to_json(count)}});
  Json h = Json::array();
  for (const auto& x : prof.h_star_from_heights) h.push_back(to_json(x));
  return Json{{"n", prof.n}, {"num_points", prof.points.size()}, {"s", std::move(s)}, {"h_star_from_heights", std::move(h)}};
}

Json build_report(const LatticePolytope& p, const std::string& input, const ReportOptions& options) {
  const EhrhartProfile prof = ehrhart_profile(p);
  const DefectVerdict verdict = defect_verdict(p);
  const bool simple = is_simple(p);
  const int n = p.dim();

  Json report;
  report["format"] = kReportFormat;
  report["input"] = input;

  Json inv;
  inv["ambient_dim"] = p.ambient_dim();
  inv["dim"] = n;
  inv["num_vertices"] = p.num_vertices();
  inv["f_vector"] = p.f_vector();
  inv["lattice_points"] = to_json(count_points(p, 1));
  inv["interior_points"] = to_json(count_interior(p, 1));
  inv["simple"] = simple;
  inv["smooth"] = verdict.is_smooth;
  Json ehr = to_json(prof);
  for (auto it = ehr.begin(); it != ehr.end(); ++it)
    if (it.key() != "dim") inv[it.key()] = it.value();
  inv["c"] = to_json(verdict.c_value);
  report["invariants"] = std::move(inv);
  report["verdict"] = to_json(verdict);

  Json checks = Json::array();
  {
    IdentityReport rec;
    rec.name = "reciprocity";
    rec.ranges = "1 <= k <= " + std::to_string(n + 2);
    for (long k = 1; k <= n + 2; ++k) {
      const Rat at = evaluate(prof.ehr_coeffs, Rat(-k));
      const Rat lhs = n % 2 == 0 ? at : Rat(-at);
      rec.check(lhs, Rat(count_interior(p, k)), "k=" + std::to_string(k));
    }
    checks.push_back(to_json(rec));
  }
  if (prof.degree < n) {
    IdentityReport expr;
    expr.name = "master expression";
    expr.ranges = "d=" + std::to_string(prof.degree) + ", n=" + std::to_string(n);
    expr.check(master_expression(p), Int(0), "P");
    checks.push_back(to_json(expr));
    if (simple) checks.push_back(to_json(simple_polytope_identity_check(p)));
  }
  if (simple && n >= 1) {
    IdentityReport van;
    van.name = "vanishing equations";
    const auto values = vanishing_equations(p);
    van.ranges = "1 <= k <= " + std::to_string(values.size());
    for (std::size_t k = 1; k <= values.size(); ++k)
      van.check(values[k - 1], count_interior(p, static_cast<long>(k)), "k=" + std::to_string(k));
    checks.push_back(to_json(van));
  }
  if (p.is_simplex()) {
    const BoxPointProfile box = box_points(p);
    IdentityReport agree;
    agree.name = "box points";
    agree.ranges = "simplex";
    agree.check(c_from_box(box), verdict.c_value, "c from box points vs face-lattice c");
    for (std::size_t k = 0; k < box.h_star_from_heights.size(); ++k)
      agree.check(box.h_star_from_heights[k], prof.h_star[k], "h*_" + std::to_string(k));
    agree.check(Int(static_cast<long>(box.points.size())), prof.normalized_volume, "number of box points vs volume");
    checks.push_back(to_json(agree));
    checks.push_back(to_json(support_bound_check(p)));
    Json b = to_json(box);
    b["c_from_box"] = to_json(c_from_box(box));
    report["box"] = std::move(b);
  }
  report["checks"] = std::move(checks);

  if (options.radius) {
    Json dirs = Json::array();
    for (const auto& u : width_one_directions(p, *options.radius)) {
      Json row = Json::array();
      for (const auto& x : u) row.push_back(to_json(x));
      dirs.push_back(std::move(row));
    }
    report["width_one_directions"] = Json{{"radius", *options.radius}, {"directions", std::move(dirs)}};
  }
  return report;
}

bool report_passed(const Json& report) {
  if (!report.contains("checks")) return true;
  for (const auto& c : report["checks"])
    if (!c.value("passed", false)) return false;
  return true;
}

namespace {

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool all_scalars(const Json& j) {
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !all_scalars(x))) return false;
  return true;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  std::size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    os << pad << it.key() << std::string(width - it.key().size(), ' ') << "  ";
    if (v.is_object()) {
      os << '\n';
      render(os, v, indent + 2);
    } else if (v.is_array() && !all_scalars(v)) {
      os << '\n';
      for (const auto& item : v) {
        if (item.is_object()) {
          render(os, item, indent + 2);
          os << '\n';
        } else {
          os << pad << "  " << item.dump() << '\n';
        }
      }
    } else if (v.is_array()) {
      os << v.dump() << '\n';
    } else {
      os << scalar(v) << '\n';
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace polydefect
