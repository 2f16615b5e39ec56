#include "polydefect/defect.hpp"

#include <algorithm>

#include "polydefect/errors.hpp"

namespace polydefect {
namespace {

Int sign_pow(long e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

Int h_at(const EhrhartProfile& prof, long k) {
  if (k < 0 || k >= static_cast<long>(prof.h_star.size())) return 0;
  return prof.h_star[static_cast<std::size_t>(k)];
}

// Σ_{F ∈ F_j} h*_k(F)
Int h_sum(const std::vector<std::vector<FaceRecord>>& faces, std::size_t j, long k) {
  Int s = 0;
  for (const auto& rec : faces[j]) s += h_at(rec.profile, k);
  return s;
}

std::string pk(long p, long i) { return "p=" + std::to_string(p) + ", i=" + std::to_string(i); }

}  // namespace

std::vector<std::vector<FaceRecord>> face_records(const LatticePolytope& p) {
  std::vector<std::vector<FaceRecord>> out;
  for (const auto& level : p.faces_by_dim()) {
    std::vector<FaceRecord> recs;
    recs.reserve(level.size());
    for (const auto& face : level) {
      LatticePolytope fp = face.dim == p.dim() ? p : p.face_polytope(face);
      EhrhartProfile prof = ehrhart_profile(fp);
      recs.push_back({face, std::move(fp), std::move(prof)});
    }
    out.push_back(std::move(recs));
  }
  return out;
}

Int c_invariant(const std::vector<std::vector<FaceRecord>>& faces, int n) {
  Int c = 0;
  for (std::size_t j = 0; j < faces.size(); ++j) {
    Int vol = 0;
    for (const auto& rec : faces[j]) vol += rec.profile.normalized_volume;
    c += sign_pow(n - static_cast<long>(j)) * static_cast<long>(j + 1) * vol;
  }
  return c;
}

Int c_invariant(const LatticePolytope& p) { return c_invariant(face_records(p), p.dim()); }

DefectVerdict defect_verdict(const LatticePolytope& p) {
  DefectVerdict v;
  v.dim = p.dim();
  v.is_smooth = is_smooth(p);
  v.codegree = codegree(p);
  v.c_value = c_invariant(p);
  v.criterion_met = 2 * v.codegree >= v.dim + 3;
  if (!v.is_smooth) {
    v.q_normal_note = "not smooth: the codegree criterion characterizes dual defect only for smooth polytopes; "
                      "invariants reported without a defect claim";
    return v;
  }
  if (v.criterion_met != (sgn(v.c_value) == 0))
    throw ConsistencyError("smooth polytope with criterion " + std::string(v.criterion_met ? "met" : "not met") +
                           " but c(P) = " + to_string(v.c_value) + ": " + describe(p));
  if (v.criterion_met) {
    v.defect = 2 * v.codegree - 2 - v.dim;
    v.q_normal_note = "dual defective with defect " + std::to_string(v.defect) + "; Q-normal with mu = cd = tau = " +
                      std::to_string(v.codegree);
  } else {
    v.q_normal_note = "not dual defective; c(P) is the degree of the A-discriminant";
  }
  return v;
}

bool product_defect_criterion(const std::vector<LatticePolytope>& factors) {
  if (factors.empty()) throw InputError("product criterion needs at least one factor");
  int max_cd = 0, dims = 0;
  for (const auto& f : factors) {
    if (!is_smooth(f)) throw InputError("product criterion needs smooth factors: " + describe(f));
    max_cd = std::max(max_cd, codegree(f));
    dims += f.dim();
  }
  return 2 * max_cd >= dims + 3;
}

bool segre_veronese_defect(const std::vector<long>& d, const std::vector<long>& k) {
  if (d.empty() || d.size() != k.size()) throw InputError("need matching nonempty d and k lists");
  long total = 0, max_cd = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1 || k[i] < 1) throw InputError("d_i and k_i must be positive");
    total += k[i];
    max_cd = std::max(max_cd, (k[i] + 1 + d[i] - 1) / d[i]);
  }
  const bool by_ceiling = 2 * max_cd >= total + 3;
  bool reduced = false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] == 1 && 2 * k[i] > total) reduced = true;
  if (by_ceiling != reduced) throw ConsistencyError("ceiling and reduced Segre-Veronese criteria disagree");
  return by_ceiling;
}

Int c_segre_closed(long k1, long k2) {
  if (k1 < 1 || k2 < 1) throw InputError("c_segre_closed needs k1, k2 >= 1");
  Int c = 0;
  for (long i = 1; i <= k1 + 1; ++i)
    for (long j = 1; j <= k2 + 1; ++j)
      c += sign_pow(k1 + k2 - i - j) * (i + j - 1) * generalized_binomial(k1 + 1, i) *
           generalized_binomial(k2 + 1, j) * generalized_binomial(i + j - 2, i - 1);
  return c;
}

namespace {

Int expr_from_counts(const LatticePolytope& p, int d) {
  const int n = p.dim();
  const auto& faces = p.faces_by_dim();
  Int total = 0;
  for (long q = d + 1; q <= n; ++q)
    for (long i = 1; i <= q - d; ++i) {
      Int inner = 0;
      for (const auto& g : faces[static_cast<std::size_t>(q)]) {
        const LatticePolytope gp = q == n ? p : p.face_polytope(g);
        inner += count_interior(gp, i);
      }
      total += sign_pow(d - i) * i * generalized_binomial(q + 1, q - d - i) * inner;
    }
  return total;
}

}  // namespace

Int master_expression(const LatticePolytope& p) {
  const int n = p.dim();
  const int d = degree(p);
  if (d >= n) throw InputError("expression undefined (empty outer sum range is the d=n degenerate case)");
  return expr_from_counts(p, d);
}

IdentityReport simple_polytope_identity_check(const LatticePolytope& p) {
  const int n = p.dim();
  const int d = degree(p);
  return simple_polytope_identity_check(p, d < n - d ? SimpleIdentityPart::low_degree : SimpleIdentityPart::high_degree);
}

IdentityReport simple_polytope_identity_check(const LatticePolytope& p, SimpleIdentityPart part) {
  if (!is_simple(p)) throw InputError("the simple-polytope identity needs a simple polytope (inclusion-exclusion over faces)");
  const int n = p.dim();
  const auto faces = face_records(p);
  const int d = faces.back().front().profile.degree;
  if (d >= n) throw InputError("the simple-polytope identity needs degree < dim");
  const SimpleIdentityPart expected = d < n - d ? SimpleIdentityPart::low_degree : SimpleIdentityPart::high_degree;
  if (part != expected) throw InputError("requested part does not match the degree range of this polytope");

  IdentityReport rep;
  rep.name = part == SimpleIdentityPart::low_degree ? "simple polytope identity (low degree)" : "simple polytope identity (high degree)";
  rep.ranges = "n=" + std::to_string(n) + ", d=" + std::to_string(d);

  // Face inclusion-exclusion for simple polytopes, for every (p, i) the derivation uses.
  for (long q = d + 1; q <= n; ++q)
    for (long i = 1; i <= q - d; ++i) {
      Int interior = 0;
      for (const auto& g : faces[static_cast<std::size_t>(q)]) interior += count_interior(g.polytope, i);
      Int expanded = 0;
      for (long j = 0; j <= q; ++j) {
        Int s = 0;
        for (const auto& rec : faces[static_cast<std::size_t>(j)]) s += count_points(rec.polytope, i);
        expanded += sign_pow(q - j) * generalized_binomial(n - j, n - q) * s;
      }
      rep.check(interior, expanded, "inclusion-exclusion " + pk(q, i));
    }

  const Int route_counts = expr_from_counts(p, d);
  rep.check(route_counts, Int(0), "master expression vanishes");

  Int route_expanded = 0, route_reduced = 0;
  for (long j = 0; j <= n; ++j) {
    for (long k = 0; k <= std::min<long>(j, d); ++k) {
      const Int hs = h_sum(faces, static_cast<std::size_t>(j), k);
      Int bracket = 0;
      for (long q = d + 1; q <= n; ++q)
        for (long i = 1; i <= q - d; ++i)
          bracket += sign_pow(q - d - i) * i * generalized_binomial(q + 1, q - d - i) *
                     generalized_binomial(n - j, n - q) * generalized_binomial(i + j - k, j);
      const Int reduced = alternating_binomial_sum(n, d, j, k);
      rep.check(bracket, reduced, "middle bracket reduction j=" + std::to_string(j) + ", k=" + std::to_string(k));
      route_expanded += sign_pow(j) * bracket * hs;
      route_reduced += sign_pow(j) * reduced * hs;
    }
  }
  rep.check(route_expanded, route_counts, "h*-expansion equals master expression");
  rep.check(route_reduced, route_expanded, "reduced expansion equals h*-expansion");

  if (part == SimpleIdentityPart::low_degree) {
    Int alt = 0;
    for (long j = 0; j <= n; ++j) {
      Int vol = 0;
      for (const auto& rec : faces[static_cast<std::size_t>(j)]) vol += rec.profile.normalized_volume;
      alt += sign_pow(j) * (j + 1) * vol;
    }
    const Int c = c_invariant(faces, n);
    rep.check(sign_pow(n) * alt, c, "alternating volume sum equals c(P)");
    rep.check(alt, route_reduced, "c-form equals reduced expansion");
    rep.check(c, Int(0), "c(P) = 0");
  } else {
    const long a = n - d;
    Int stmt = 0;
    for (long j = 0; j <= n; ++j) {
      Int s = 0;
      for (const auto& rec : faces[static_cast<std::size_t>(j)]) {
        Int low = 0;
        for (long k = 0; k < a; ++k) low += h_at(rec.profile, k);
        s += a * h_at(rec.profile, a) + (j + 1) * low;
      }
      stmt += sign_pow(j) * s;
    }
    rep.check(stmt, route_reduced, "part (ii) form equals reduced expansion");
    rep.check(stmt, Int(0), "part (ii) identity = 0");
  }
  return rep;
}

std::vector<Int> vanishing_equations(const LatticePolytope& p) {
  if (!is_simple(p)) throw InputError("vanishing equations need a simple polytope");
  const int n = p.dim();
  const auto& faces = p.faces_by_dim();
  std::vector<std::vector<LatticePolytope>> polys(faces.size());
  for (std::size_t j = 0; j < faces.size(); ++j)
    for (const auto& f : faces[j]) polys[j].push_back(static_cast<int>(j) == n ? p : p.face_polytope(f));

  std::vector<Int> out;
  const long kmax = (n + 2) / 2;  // ceil((n+1)/2)
  for (long k = 1; k <= kmax; ++k) {
    Int s = 0;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      Int level = 0;
      for (const auto& f : polys[j]) level += count_points(f, k);
      s += sign_pow(n - static_cast<long>(j)) * level;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace polydefect
