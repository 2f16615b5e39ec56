#include "polydefect/simplex_box.hpp"

#include <algorithm>
#include <tuple>

#include "polydefect/ehrhart.hpp"
#include "polydefect/errors.hpp"

namespace polydefect {

BoxPointProfile box_points(const LatticePolytope& simplex) {
  if (!simplex.is_simplex()) throw InputError("box points need a lattice simplex: " + describe(simplex));
  const auto n = static_cast<std::size_t>(simplex.dim());

  // Rows: (y_i, 1) for the chart coordinates y_i of each vertex.
  IntMatrix w(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t c = 0; c < n; ++c) w(i, c) = simplex.chart_vertices()[i][c];
    w(i, n) = 1;
  }
  const auto w_inv = rational_inverse(w);

  // Λ = row lattice of W = U^{-1} S V^{-1}; Z^{n+1}/Λ has representatives
  // Σ z_t (row t of V^{-1}) with 0 <= z_t < d_t.
  const SmithForm snf = smith_normal_form(w);
  const IntMatrix v_inv = unimodular_inverse(snf.V);
  std::vector<Int> divisors(n + 1);
  for (std::size_t t = 0; t <= n; ++t) divisors[t] = snf.S(t, t);

  BoxPointProfile prof;
  prof.n = static_cast<int>(n);
  prof.h_star_from_heights.assign(n + 1, 0);

  std::vector<Int> z(n + 1, 0);
  while (true) {
    IntVector x(n + 1);
    for (std::size_t t = 0; t <= n; ++t)
      for (std::size_t c = 0; c <= n; ++c) x[c] += z[t] * v_inv(t, c);

    BoxPoint bp;
    bp.lambda.assign(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
      Rat l = 0;
      for (std::size_t c = 0; c <= n; ++c) l += x[c] * w_inv[c][i];
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
      bp.lambda[i] = l - fl;
      bp.lambda[i].canonicalize();
    }
    Rat height = 0;
    bp.point.assign(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
      height += bp.lambda[i];
      if (sgn(bp.lambda[i]) != 0) bp.support.push_back(i);
    }
    for (std::size_t c = 0; c <= n; ++c) {
      Rat coord = 0;
      for (std::size_t i = 0; i <= n; ++i) coord += bp.lambda[i] * w(i, c);
      if (coord.get_den() != 1) throw ConsistencyError("box point is not a lattice point");
      bp.point[c] = coord.get_num();
    }
    if (height.get_den() != 1) throw ConsistencyError("box point height is not an integer");
    bp.height = height.get_num().get_si();
    prof.h_star_from_heights.at(static_cast<std::size_t>(bp.height)) += 1;
    prof.s[bp.support] += 1;
    prof.points.push_back(std::move(bp));

    std::size_t t = 0;
    while (t <= n) {
      z[t] += 1;
      if (z[t] < divisors[t]) break;
      z[t] = 0;
      ++t;
    }
    if (t > n) break;
  }
  std::sort(prof.points.begin(), prof.points.end(), [](const BoxPoint& a, const BoxPoint& b) {
    return std::tie(a.height, a.support, a.point) < std::tie(b.height, b.support, b.point);
  });
  return prof;
}

Int c_from_box(const BoxPointProfile& profile) {
  Int c = 0;
  for (const auto& [support, count] : profile.s)
    c += generalized_binomial(static_cast<long>(support.size()), profile.n) * count;
  return c;
}

Int c_from_box(const LatticePolytope& simplex) { return c_from_box(box_points(simplex)); }

IdentityReport support_bound_check(const LatticePolytope& simplex) {
  const BoxPointProfile prof = box_points(simplex);
  const int deg = degree(simplex);
  IdentityReport rep;
  rep.name = "support bound";
  rep.ranges = "n=" + std::to_string(prof.n) + ", deg=" + std::to_string(deg);
  // Only nonzero s_I are stored, so every stored support must satisfy the bound.
  for (const auto& [support, count] : prof.s) {
    const bool ok = static_cast<long>(support.size()) <= 2L * deg;
    rep.check(ok, "I=" + to_string(IntVector(support.begin(), support.end())),
              "s_I=" + to_string(count) + " with |I|=" + std::to_string(support.size()),
              "|I| <= " + std::to_string(2 * deg));
  }
  return rep;
}

}  // namespace polydefect
