#include "polydefect/fuzz.hpp"

#include <algorithm>
#include <sstream>

#include "polydefect/defect.hpp"
#include "polydefect/ehrhart.hpp"
#include "polydefect/errors.hpp"
#include "polydefect/parallel.hpp"
#include "polydefect/simplex_box.hpp"

namespace polydefect {

FuzzKind parse_fuzz_kind(const std::string& name) {
  if (name == "simplex") return FuzzKind::simplex;
  if (name == "simple") return FuzzKind::simple;
  if (name == "general") return FuzzKind::general;
  throw InputError("unknown fuzz kind '" + name + "' (expected simplex, simple or general)");
}

std::string to_string(FuzzKind kind) {
  switch (kind) {
    case FuzzKind::simplex: return "simplex";
    case FuzzKind::simple: return "simple";
    case FuzzKind::general: return "general";
  }
  return "?";
}

namespace {

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t index) : engine_(mix(mix(seed) ^ index)) {}

long InstanceRng::uniform(long lo, long hi) {
  if (hi < lo) std::swap(lo, hi);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection keeps the draw unbiased and identical on every platform
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t x = engine_();
  while (limit != 0 && x >= limit) x = engine_();
  return lo + static_cast<long>(span == 0 ? x : x % span);
}

namespace {

std::vector<IntVector> random_points(InstanceRng& rng, std::size_t count, int dim, long bound) {
  std::vector<IntVector> pts(count, IntVector(static_cast<std::size_t>(dim)));
  for (auto& p : pts)
    for (auto& x : p) x = rng.uniform(-bound, bound);
  return pts;
}

Int simplex_volume(const std::vector<IntVector>& pts) {
  const std::size_t n = pts.size() - 1;
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = pts[i + 1][j] - pts[0][j];
  return abs(determinant(m));
}

}  // namespace

LatticePolytope random_simplex(InstanceRng& rng, int dim, long bound, long max_volume) {
  if (dim < 1 || bound < 1) throw InputError("random simplex needs dim >= 1 and bound >= 1");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto pts = random_points(rng, static_cast<std::size_t>(dim) + 1, dim, bound);
    const Int vol = simplex_volume(pts);
    if (vol != 0 && vol <= max_volume) return LatticePolytope::from_vertices(static_cast<std::size_t>(dim), pts);
  }
  // a unimodular fallback keeps the run deterministic even for tiny volume caps
  return unit_simplex(dim);
}

namespace {

LatticePolytope random_factor(InstanceRng& rng, int m, long bound) {
  const long choice = rng.uniform(0, m == 2 ? 3 : 2);
  if (m == 1) {
    return cube(1, rng.uniform(1, std::max(1L, bound)));
  }
  switch (choice) {
    case 0: return dilate(unit_simplex(m), rng.uniform(1, std::max(1L, bound)));
    case 1: return random_simplex(rng, m, std::max(1L, bound / 2), 20);
    case 2: return product(cube(1, rng.uniform(1, 2)), random_factor(rng, m - 1, bound));
    default: {
      // any lattice polygon is simple
      for (;;) {
        auto pts = random_points(rng, static_cast<std::size_t>(rng.uniform(3, 6)), 2, std::max(1L, bound / 2));
        auto q = LatticePolytope::from_vertices(2, pts);
        if (q.dim() == 2) return q;
      }
    }
  }
}

}  // namespace

LatticePolytope random_simple(InstanceRng& rng, int dim, long bound) {
  if (dim < 1 || bound < 1) throw InputError("random simple polytope needs dim >= 1 and bound >= 1");
  int left = dim;
  std::vector<LatticePolytope> parts;
  while (left > 0) {
    const int m = static_cast<int>(rng.uniform(1, std::min(left, 3)));
    parts.push_back(random_factor(rng, m, bound));
    left -= m;
  }
  LatticePolytope p = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) p = product(p, parts[i]);
  return p;
}

LatticePolytope random_general(InstanceRng& rng, int dim, long bound) {
  if (dim < 1 || bound < 1) throw InputError("random polytope needs dim >= 1 and bound >= 1");
  for (;;) {
    const auto count = static_cast<std::size_t>(rng.uniform(dim + 1, dim + 4));
    auto p = LatticePolytope::from_vertices(static_cast<std::size_t>(dim), random_points(rng, count, dim, bound));
    if (p.dim() == dim) return p;
  }
}

namespace {

class Recorder {
 public:
  explicit Recorder(InstanceOutcome& out) : out_(out) {}

  void check(bool ok, const std::string& what) {
    ++out_.checks;
    if (!ok) out_.failures.push_back(what);
  }
  void check(const Int& lhs, const Int& rhs, const std::string& what) {
    check(lhs == rhs, what + ": " + to_string(lhs) + " != " + to_string(rhs));
  }

 private:
  InstanceOutcome& out_;
};

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

void check_profile(Recorder& rec, const LatticePolytope& p, const EhrhartProfile& prof) {
  const int n = p.dim();
  rec.check(prof.h_star.at(0), Int(1), "h*_0");
  Int sum = 0;
  for (std::size_t i = 0; i < prof.h_star.size(); ++i) {
    rec.check(prof.h_star[i] >= 0, "h*_" + std::to_string(i) + " negative in " + join(prof.h_star));
    sum += prof.h_star[i];
  }
  rec.check(sum, prof.normalized_volume, "sum of h* vs volume");
  int deg = 0;
  for (std::size_t i = 0; i < prof.h_star.size(); ++i)
    if (prof.h_star[i] != 0) deg = static_cast<int>(i);
  rec.check(deg == n + 1 - prof.codegree,
            "degree from h* " + std::to_string(deg) + " vs dim+1-codegree " + std::to_string(n + 1 - prof.codegree));
  for (long k = 1; k <= n + 2; ++k) rec.check(reciprocity_check(p, k), "reciprocity at k=" + std::to_string(k));
}

void check_monotonicity(Recorder& rec, const std::vector<std::vector<FaceRecord>>& faces, const EhrhartProfile& top) {
  for (const auto& level : faces) {
    for (const auto& f : level) {
      bool ok = true;
      for (std::size_t i = 0; i < f.profile.h_star.size(); ++i)
        if (f.profile.h_star[i] > top.h_star.at(i)) ok = false;
      rec.check(ok, "h* of face " + join(f.profile.h_star) + " exceeds h* of polytope " + join(top.h_star));
    }
  }
}

}  // namespace

InstanceOutcome check_instance(const LatticePolytope& p) {
  InstanceOutcome out;
  Recorder rec(out);
  try {
    const int n = p.dim();
    const EhrhartProfile prof = ehrhart_profile(p);
    check_profile(rec, p, prof);

    const auto faces = face_records(p);
    check_monotonicity(rec, faces, prof);
    const Int c = c_invariant(faces, n);

    if (prof.degree < n) rec.check(master_expression(p), Int(0), "master expression");

    if (is_simple(p)) {
      if (prof.degree < n) {
        const IdentityReport r = simple_polytope_identity_check(p);
        ++out.checks;
        if (!r.passed)
          out.failures.push_back(r.name + " failed at " + (r.first_failure ? r.first_failure->parameters : "?"));
      }
      const auto values = vanishing_equations(p);
      for (std::size_t k = 1; k <= values.size(); ++k)
        rec.check(values[k - 1], count_interior(p, static_cast<long>(k)), "vanishing equation k=" + std::to_string(k));
    }

    if (p.is_simplex()) {
      const BoxPointProfile box = box_points(p);
      rec.check(c_from_box(box), c, "c from box points vs face lattice");
      rec.check(c >= 0, "negative c for a simplex: " + to_string(c));
      for (std::size_t k = 0; k < box.h_star_from_heights.size(); ++k)
        rec.check(box.h_star_from_heights[k], prof.h_star[k], "box height count h*_" + std::to_string(k));
      const IdentityReport bound = support_bound_check(p);
      ++out.checks;
      if (!bound.passed)
        out.failures.push_back("support bound failed at " + (bound.first_failure ? bound.first_failure->parameters : "?"));
    } else if (c < 0) {
      out.findings.push_back("c = " + to_string(c) + " < 0 for a non-simplex");
    }

    if (is_smooth(p)) {
      const DefectVerdict v = defect_verdict(p);
      rec.check(v.criterion_met == (v.c_value == 0), "criterion vs c = 0 for smooth polytope");
      rec.check(v.c_value, c, "verdict c vs face-lattice c");
    }
  } catch (const ConsistencyError& e) {
    out.failures.push_back(std::string("consistency error: ") + e.what());
  }
  return out;
}

std::size_t FuzzResult::checks() const {
  std::size_t s = 0;
  for (const auto& i : instances) s += i.checks;
  return s;
}

std::size_t FuzzResult::failures() const {
  std::size_t s = 0;
  for (const auto& i : instances) s += i.failures.size();
  return s;
}

std::size_t FuzzResult::findings() const {
  std::size_t s = 0;
  for (const auto& i : instances) s += i.findings.size();
  return s;
}

FuzzResult run_fuzz(const FuzzOptions& options) {
  if (options.dim < 1) throw InputError("fuzz dimension must be at least 1");
  if (options.bound < 1) throw InputError("fuzz coordinate bound must be at least 1");
  FuzzResult result;
  result.options = options;
  result.instances = parallel_map(options.count, options.threads, [&](std::size_t i) {
    InstanceRng rng(options.seed, i);
    LatticePolytope p = [&] {
      switch (options.kind) {
        case FuzzKind::simplex: return random_simplex(rng, options.dim, options.bound);
        case FuzzKind::simple: return random_simple(rng, options.dim, options.bound);
        case FuzzKind::general: break;
      }
      return random_general(rng, options.dim, options.bound);
    }();
    InstanceOutcome out = check_instance(p);
    out.index = i;
    out.vertices = polytope_to_json(p)["vertices"];
    return out;
  });
  return result;
}

Json to_json(const FuzzResult& result) {
  const FuzzOptions& o = result.options;
  Json j{{"format", kReportFormat},
         {"kind", to_string(o.kind)},
         {"dim", o.dim},
         {"bound", o.bound},
         {"count", o.count},
         {"seed", o.seed},
         {"checks", result.checks()},
         {"failures", result.failures()},
         {"findings", result.findings()}};
  Json notable = Json::array();
  for (const auto& inst : result.instances) {
    if (inst.failures.empty() && inst.findings.empty()) continue;
    Json e{{"index", inst.index}, {"vertices", inst.vertices}};
    if (!inst.failures.empty()) e["failures"] = inst.failures;
    if (!inst.findings.empty()) e["findings"] = inst.findings;
    e["reproduce"] = "polydefect fuzz " + to_string(o.kind) + " " + std::to_string(o.dim) + " " + std::to_string(o.bound) +
                     " " + std::to_string(inst.index + 1) + " --seed " + std::to_string(o.seed);
    notable.push_back(std::move(e));
  }
  j["instances"] = std::move(notable);
  return j;
}

}  // namespace polydefect
