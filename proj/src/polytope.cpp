#include "polydefect/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "polydefect/errors.hpp"

namespace polydefect {
namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool contains(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector z;  // (c, a): c + <a, y> >= 0 on every point
  Bitset tight;
};

Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector lifted(const IntVector& y) {
  IntVector row;
  row.reserve(y.size() + 1);
  row.emplace_back(1);
  row.insert(row.end(), y.begin(), y.end());
  return row;
}

std::size_t affine_rank(const std::vector<IntVector>& pts, const std::vector<std::size_t>& idx) {
  if (idx.size() <= 1) return 0;
  std::vector<IntVector> rows;
  rows.reserve(idx.size() - 1);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    IntVector d = pts[idx[i]];
    for (std::size_t c = 0; c < d.size(); ++c) d[c] -= pts[idx[0]][c];
    rows.push_back(std::move(d));
  }
  return rank(IntMatrix::from_rows(rows));
}

// Facets of conv(points) for points spanning Z^r affinely (r >= 1), by the
// double description method on the cone {(c, a) : c + <a, y_i> >= 0}. Its
// extreme rays are exactly the facet inequalities; incidence is over `points`.
std::vector<Facet> double_description(const std::vector<IntVector>& points, std::size_t r) {
  const std::size_t n = points.size();
  std::vector<IntVector> rows;
  rows.reserve(n);
  for (const auto& y : points) rows.push_back(lifted(y));

  std::vector<std::size_t> basis_rows;
  {
    std::vector<IntVector> chosen;
    for (std::size_t i = 0; i < n && basis_rows.size() < r + 1; ++i) {
      chosen.push_back(rows[i]);
      if (rank(IntMatrix::from_rows(chosen)) == chosen.size())
        basis_rows.push_back(i);
      else
        chosen.pop_back();
    }
  }
  if (basis_rows.size() != r + 1) throw ConsistencyError("double description: points not full-dimensional");

  std::vector<IntVector> b_rows;
  for (auto i : basis_rows) b_rows.push_back(rows[i]);
  const auto inverse = rational_inverse(IntMatrix::from_rows(b_rows));

  std::vector<Ray> rays;
  for (std::size_t j = 0; j <= r; ++j) {
    Int scale = 1;
    for (std::size_t i = 0; i <= r; ++i) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), inverse[i][j].get_den_mpz_t());
    IntVector z(r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
      Rat v = inverse[i][j] * scale;
      z[i] = v.get_num();
    }
    rays.push_back({primitive(z), Bitset(n)});
  }
  std::vector<bool> processed(n, false);
  auto absorb = [&](std::size_t i) {
    processed[i] = true;
    for (auto& ray : rays)
      if (sgn(dot(rows[i], ray.z)) == 0) ray.tight.set(i);
  };
  for (auto i : basis_rows) absorb(i);

  for (std::size_t i = 0; i < n; ++i) {
    if (processed[i]) continue;
    std::vector<Int> values(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t t = 0; t < rays.size(); ++t) {
      values[t] = dot(rows[i], rays[t].z);
      if (sgn(values[t]) > 0) pos.push_back(t);
      if (sgn(values[t]) < 0) neg.push_back(t);
    }
    if (neg.empty()) {
      absorb(i);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t t = 0; t < rays.size(); ++t)
      if (sgn(values[t]) >= 0) next.push_back(rays[t]);
    for (auto p : pos) {
      for (auto q : neg) {
        Bitset common = rays[p].tight & rays[q].tight;
        if (common.count() + 1 < r) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
          if (t != p && t != q && rays[t].tight.contains(common)) adjacent = false;
        if (!adjacent) continue;
        IntVector z(r + 1);
        for (std::size_t c = 0; c <= r; ++c) z[c] = values[p] * rays[q].z[c] - values[q] * rays[p].z[c];
        next.push_back({primitive(z), std::move(common)});
      }
    }
    rays = std::move(next);
    absorb(i);
  }

  std::vector<Facet> facets;
  facets.reserve(rays.size());
  for (const auto& ray : rays) {
    Facet f;
    f.normal.assign(ray.z.begin() + 1, ray.z.end());
    const Int g = gcd_of(f.normal);
    if (sgn(g) == 0) throw ConsistencyError("double description produced the trivial inequality");
    if (!mpz_divisible_p(ray.z[0].get_mpz_t(), g.get_mpz_t()))
      throw ConsistencyError("facet offset is not integral");
    for (auto& x : f.normal) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    f.offset = ray.z[0] / g;
    for (std::size_t i = 0; i < n; ++i)
      if (ray.tight.test(i)) f.vertices.push_back(i);
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return facets;
}

}  // namespace

struct LatticePolytope::Impl {
  std::size_t ambient_dim = 0;
  int dim = 0;
  std::vector<IntVector> vertices;
  AffineLatticeChart chart;
  std::vector<IntVector> chart_vertices;
  std::vector<Facet> facets;

  mutable std::once_flag faces_once;
  mutable std::vector<std::vector<Face>> faces;

  void build_faces() const;
};

void LatticePolytope::Impl::build_faces() const {
  std::vector<std::size_t> all(vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue{all};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto current = queue[head];
    for (const auto& f : facets) {
      std::vector<std::size_t> meet;
      std::set_intersection(current.begin(), current.end(), f.vertices.begin(), f.vertices.end(),
                            std::back_inserter(meet));
      if (meet.empty() || meet.size() == current.size()) continue;
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  faces.assign(static_cast<std::size_t>(dim) + 1, {});
  for (const auto& vs : seen) {
    const auto d = affine_rank(chart_vertices, vs);
    faces[d].push_back(Face{vs, static_cast<int>(d)});
  }
}

LatticePolytope LatticePolytope::from_vertices(std::size_t ambient_dim, const std::vector<IntVector>& points) {
  if (points.empty()) throw InputError("polytope needs at least one point");
  for (const auto& p : points)
    if (p.size() != ambient_dim) throw InputError("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(ambient_dim));

  std::vector<IntVector> distinct;
  {
    std::set<IntVector> seen;
    for (const auto& p : points)
      if (seen.insert(p).second) distinct.push_back(p);
  }

  auto impl = std::make_shared<Impl>();
  impl->ambient_dim = ambient_dim;
  impl->chart = saturated_chart(distinct);
  const std::size_t r = impl->chart.rank();
  impl->dim = static_cast<int>(r);

  std::vector<IntVector> ys;
  ys.reserve(distinct.size());
  for (const auto& p : distinct) ys.push_back(*impl->chart.coordinates(p));

  if (r == 0) {
    impl->vertices = {distinct.front()};
    impl->chart_vertices = {ys.front()};
    return LatticePolytope(std::move(impl));
  }

  const auto raw = double_description(ys, r);

  // A point is a vertex iff the normals of the facets through it span R^r.
  std::vector<std::size_t> new_index(distinct.size(), distinct.size());
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    std::vector<IntVector> normals;
    for (const auto& f : raw)
      if (std::binary_search(f.vertices.begin(), f.vertices.end(), i)) normals.push_back(f.normal);
    if (normals.size() >= r && rank(IntMatrix::from_rows(normals)) == r) {
      new_index[i] = impl->vertices.size();
      impl->vertices.push_back(distinct[i]);
      impl->chart_vertices.push_back(ys[i]);
    }
  }
  for (const auto& f : raw) {
    Facet g{f.normal, f.offset, {}};
    for (auto i : f.vertices)
      if (new_index[i] != distinct.size()) g.vertices.push_back(new_index[i]);
    impl->facets.push_back(std::move(g));
  }
  return LatticePolytope(std::move(impl));
}

std::size_t LatticePolytope::ambient_dim() const { return impl_->ambient_dim; }
int LatticePolytope::dim() const { return impl_->dim; }
const std::vector<IntVector>& LatticePolytope::vertices() const { return impl_->vertices; }
const AffineLatticeChart& LatticePolytope::chart() const { return impl_->chart; }
const std::vector<IntVector>& LatticePolytope::chart_vertices() const { return impl_->chart_vertices; }
const std::vector<Facet>& LatticePolytope::facets() const { return impl_->facets; }

const std::vector<std::vector<Face>>& LatticePolytope::faces_by_dim() const {
  std::call_once(impl_->faces_once, [this] { impl_->build_faces(); });
  return impl_->faces;
}

std::vector<std::size_t> LatticePolytope::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : faces_by_dim()) f.push_back(level.size());
  return f;
}

LatticePolytope LatticePolytope::face_polytope(const Face& face) const {
  std::vector<IntVector> pts;
  pts.reserve(face.vertex_indices.size());
  for (auto i : face.vertex_indices) pts.push_back(vertices().at(i));
  return from_vertices(ambient_dim(), pts);
}

bool is_simple(const LatticePolytope& p) {
  if (p.dim() <= 1) return true;
  std::vector<std::size_t> through(p.num_vertices(), 0);
  for (const auto& f : p.facets())
    for (auto v : f.vertices) ++through[v];
  return std::all_of(through.begin(), through.end(),
                     [&](std::size_t c) { return c == static_cast<std::size_t>(p.dim()); });
}

bool is_smooth(const LatticePolytope& p) {
  if (!is_simple(p)) return false;
  if (p.dim() == 0) return true;
  for (std::size_t v = 0; v < p.num_vertices(); ++v) {
    std::vector<IntVector> normals;
    for (const auto& f : p.facets())
      if (std::binary_search(f.vertices.begin(), f.vertices.end(), v)) normals.push_back(f.normal);
    const Int det = determinant(IntMatrix::from_rows(normals));
    if (abs(det) != 1) return false;
  }
  return true;
}

bool contains(const LatticePolytope& p, std::span<const Rat> x, Membership mode) {
  const auto y = p.chart().coordinates(x);
  if (!y) return false;
  if (p.dim() == 0) return true;
  for (const auto& f : p.facets()) {
    Rat s = f.offset;
    for (std::size_t i = 0; i < y->size(); ++i) s += f.normal[i] * (*y)[i];
    if (sgn(s) < 0) return false;
    if (mode == Membership::relative_interior && sgn(s) == 0) return false;
  }
  return true;
}

bool contains(const LatticePolytope& p, std::span<const Int> x, Membership mode) {
  RatVector q(x.begin(), x.end());
  return contains(p, std::span<const Rat>(q), mode);
}

LatticePolytope dilate(const LatticePolytope& p, long k) {
  if (k < 1) throw InputError("dilation factor must be at least 1");
  std::vector<IntVector> vs = p.vertices();
  for (auto& v : vs)
    for (auto& x : v) x *= k;
  return LatticePolytope::from_vertices(p.ambient_dim(), vs);
}

LatticePolytope product(const LatticePolytope& p, const LatticePolytope& q) {
  std::vector<IntVector> vs;
  vs.reserve(p.num_vertices() * q.num_vertices());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      IntVector v = a;
      v.insert(v.end(), b.begin(), b.end());
      vs.push_back(std::move(v));
    }
  return LatticePolytope::from_vertices(p.ambient_dim() + q.ambient_dim(), vs);
}

LatticePolytope pyramid(const LatticePolytope& p) {
  std::vector<IntVector> vs;
  for (const auto& a : p.vertices()) {
    IntVector v = a;
    v.emplace_back(0);
    vs.push_back(std::move(v));
  }
  IntVector apex(p.ambient_dim() + 1);
  apex.back() = 1;
  vs.push_back(std::move(apex));
  return LatticePolytope::from_vertices(p.ambient_dim() + 1, vs);
}

LatticePolytope cayley(const std::vector<LatticePolytope>& parts) {
  if (parts.empty()) throw InputError("cayley needs at least one polytope");
  const std::size_t m = parts.front().ambient_dim();
  for (const auto& p : parts)
    if (p.ambient_dim() != m) throw InputError("cayley: all polytopes must share one ambient dimension");
  const std::size_t k1 = parts.size();
  std::vector<IntVector> vs;
  for (std::size_t i = 0; i < k1; ++i)
    for (const auto& a : parts[i].vertices()) {
      IntVector v = a;
      v.resize(m + k1);
      v[m + i] = 1;
      vs.push_back(std::move(v));
    }
  return LatticePolytope::from_vertices(m + k1, vs);
}

LatticePolytope unit_simplex(int n) {
  if (n < 0) throw InputError("simplex dimension must be nonnegative");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<IntVector> vs{IntVector(dim)};
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector v(dim);
    v[i] = 1;
    vs.push_back(std::move(v));
  }
  return LatticePolytope::from_vertices(dim, vs);
}

LatticePolytope cube(int n, long a) {
  if (n < 0 || a < 1) throw InputError("cube(n, a) needs n >= 0 and a >= 1");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<IntVector> vs;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    IntVector v(dim);
    for (std::size_t i = 0; i < dim; ++i)
      if (mask >> i & 1U) v[i] = a;
    vs.push_back(std::move(v));
  }
  return LatticePolytope::from_vertices(dim, vs);
}

namespace {

using Fan = std::pair<std::set<IntVector>, std::set<std::set<IntVector>>>;

Fan normal_fan(const LatticePolytope& p) {
  Fan fan;
  for (const auto& f : p.facets()) fan.first.insert(f.normal);
  for (std::size_t v = 0; v < p.num_vertices(); ++v) {
    std::set<IntVector> cone;
    for (const auto& f : p.facets())
      if (std::binary_search(f.vertices.begin(), f.vertices.end(), v)) cone.insert(f.normal);
    fan.second.insert(std::move(cone));
  }
  return fan;
}

}  // namespace

bool is_strictly_isomorphic(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw InputError("strict isomorphism needs one ambient dimension");
  if (!p.is_full_dimensional() || !q.is_full_dimensional())
    throw InputError("strict isomorphism needs full-dimensional polytopes; reduce first");
  return normal_fan(p) == normal_fan(q);
}

FullDimensionalModel full_dimensional_model(const LatticePolytope& p) {
  return {LatticePolytope::from_vertices(static_cast<std::size_t>(p.dim()), p.chart_vertices()), p.chart()};
}

std::vector<IntVector> width_one_directions(const LatticePolytope& p, int radius) {
  if (radius < 1) throw InputError("width search radius must be at least 1");
  const std::size_t n = p.ambient_dim();
  std::vector<IntVector> found;
  std::vector<long> u(n, -radius);
  while (true) {
    std::size_t lead = 0;
    while (lead < n && u[lead] == 0) ++lead;
    if (lead < n && u[lead] > 0) {
      IntVector dir(u.begin(), u.end());
      if (gcd_of(dir) == 1) {
        Int lo, hi;
        bool first = true;
        for (const auto& v : p.vertices()) {
          const Int s = dot(dir, v);
          if (first || s < lo) lo = s;
          if (first || s > hi) hi = s;
          first = false;
        }
        if (hi - lo == 1) found.push_back(std::move(dir));
      }
    }
    std::size_t i = n;
    while (i > 0 && u[i - 1] == radius) u[--i] = -radius;
    if (i == 0) break;
    ++u[i - 1];
  }
  return found;
}

std::string describe(const LatticePolytope& p) {
  std::ostringstream os;
  os << "polytope(dim=" << p.dim() << ", ambient=" << p.ambient_dim() << ", vertices=[";
  for (std::size_t i = 0; i < p.num_vertices(); ++i) {
    if (i) os << ',';
    os << to_string(std::span<const Int>(p.vertices()[i]));
  }
  os << "])";
  return os.str();
}

}  // namespace polydefect
