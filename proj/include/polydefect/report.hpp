#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "polydefect/defect.hpp"
#include "polydefect/ehrhart.hpp"
#include "polydefect/identities.hpp"
#include "polydefect/polytope.hpp"
#include "polydefect/simplex_box.hpp"

namespace polydefect {

using Json = nlohmann::ordered_json;

inline constexpr int kReportFormat = 1;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const Int& v);
Json to_json(const Rat& v);

// {"ambient_dim": n, "vertices": [[...], ...]}
Json polytope_to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j);
LatticePolytope read_polytope_file(const std::string& path);

Json to_json(const EhrhartProfile& prof);
Json to_json(const DefectVerdict& v);
Json to_json(const IdentityReport& r);
Json to_json(const BoxPointProfile& prof);

struct ReportOptions {
  std::optional<int> radius;  // width-one direction scan when set
};

/// The report behind `polydefect info`: invariants, verdict, and the identity
/// checks that apply to this polytope.
Json build_report(const LatticePolytope& p, const std::string& input, const ReportOptions& options = {});

// True when every identity check in the report passed.
bool report_passed(const Json& report);

std::string render_text(const Json& report);

}  // namespace polydefect
