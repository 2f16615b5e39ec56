#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polydefect/errors.hpp"
#include "polydefect/polytope.hpp"

using namespace polydefect;
using fixtures::poly;

namespace {

std::set<oracle::Halfspace> facet_set(const LatticePolytope& p) {
  std::set<oracle::Halfspace> out;
  for (const auto& f : p.facets()) out.insert({f.normal, -f.offset});
  return out;
}

std::vector<IntVector> random_points(std::mt19937_64& rng, std::size_t count, std::size_t n, long bound) {
  std::vector<IntVector> pts(count, IntVector(n));
  for (auto& p : pts)
    for (auto& x : p) x = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return pts;
}

}  // namespace

TEST_CASE("facets agree with the subset scan") {
  std::mt19937_64 rng(21);
  int tested = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 3;
    auto pts = random_points(rng, n + 1 + rng() % 6, n, 3);
    const auto p = LatticePolytope::from_vertices(n, pts);
    if (p.dim() != static_cast<int>(n)) continue;
    ++tested;
    CHECK(facet_set(p) == oracle::facets_by_subset_scan(pts));
    // every listed vertex is tight on its facets, and vertices really are extreme
    for (const auto& f : p.facets()) CHECK(f.vertices.size() >= n);
  }
  CHECK(tested > 100);
}

TEST_CASE("non-extreme input points are dropped") {
  const auto p = poly(2, {{0, 0}, {2, 0}, {0, 2}, {1, 0}, {1, 1}, {0, 0}});
  CHECK(p.num_vertices() == 3);
  CHECK(p.dim() == 2);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(poly(2, {}), InputError);
  CHECK_THROWS_AS(poly(2, {{0, 0}, {1, 0, 0}}), InputError);
  CHECK_THROWS_AS(dilate(unit_simplex(2), 0), InputError);
  CHECK_THROWS_AS(cayley({unit_simplex(2), unit_simplex(3)}), InputError);
}

TEST_CASE("f-vectors") {
  CHECK(cube(3, 1).f_vector() == std::vector<std::size_t>{8, 12, 6, 1});
  CHECK(unit_simplex(4).f_vector() == std::vector<std::size_t>{5, 10, 10, 5, 1});
  CHECK(cube(4, 2).f_vector() == std::vector<std::size_t>{16, 32, 24, 8, 1});
  // octahedron
  const auto oct = poly(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  CHECK(oct.f_vector() == std::vector<std::size_t>{6, 12, 8, 1});
  CHECK_FALSE(is_simple(oct));
}

TEST_CASE("lower-dimensional polytopes") {
  const auto seg = poly(3, {{0, 0, 0}, {2, 4, 6}});
  CHECK(seg.dim() == 1);
  CHECK(seg.facets().size() == 2);
  CHECK(seg.f_vector() == std::vector<std::size_t>{2, 1});
  const auto pt = poly(2, {{3, 4}});
  CHECK(pt.dim() == 0);
  CHECK(pt.f_vector() == std::vector<std::size_t>{1});
  const auto tri = fixtures::cayley_triangles()[0];
  CHECK(tri.dim() == 2);
  CHECK(tri.facets().size() == 3);
}

TEST_CASE("simple and smooth") {
  CHECK(is_smooth(unit_simplex(3)));
  CHECK(is_smooth(cube(3, 2)));
  CHECK(is_smooth(product(dilate(unit_simplex(2), 3), unit_simplex(1))));
  CHECK(is_simple(fixtures::simplex_c21()));
  CHECK_FALSE(is_smooth(fixtures::simplex_c21()));
  // a simple but non-smooth triangle
  const auto tri = poly(2, {{0, 0}, {2, 1}, {1, 2}});
  CHECK(is_simple(tri));
  CHECK_FALSE(is_smooth(tri));
  CHECK_FALSE(is_simple(fixtures::cayley_example()));
}

TEST_CASE("constructions") {
  CHECK(fixtures::q_chain(1).dim() == 5);
  CHECK(fixtures::q_chain(1).is_simplex());
  CHECK(fixtures::q_chain(2).dim() == 6);
  const auto c = fixtures::cayley_example();
  CHECK(c.dim() == 6);
  CHECK(c.num_vertices() == 9);
  CHECK(c.ambient_dim() == 7);
  const auto pr = product(unit_simplex(2), cube(2, 1));
  CHECK(pr.dim() == 4);
  CHECK(pr.num_vertices() == 12);
}

TEST_CASE("membership") {
  const auto seg = poly(2, {{0, 0}, {2, 0}});
  CHECK(contains(seg, IntVector{1, 0}, Membership::relative_interior));
  CHECK_FALSE(contains(seg, IntVector{2, 0}, Membership::relative_interior));
  CHECK(contains(seg, IntVector{2, 0}, Membership::closed));
  CHECK_FALSE(contains(seg, IntVector{1, 1}, Membership::closed));
  CHECK(contains(seg, RatVector{Rat(1, 2), 0}, Membership::relative_interior));
  const auto pt = poly(2, {{1, 1}});
  CHECK(contains(pt, IntVector{1, 1}, Membership::relative_interior));
}

TEST_CASE("strict isomorphism") {
  const auto p = poly(2, {{0, 0}, {3, 0}, {1, 2}});
  CHECK(is_strictly_isomorphic(p, dilate(p, 2)));
  CHECK_FALSE(is_strictly_isomorphic(unit_simplex(2), cube(2, 1)));
  CHECK(is_strictly_isomorphic(cube(2, 1), poly(2, {{0, 0}, {2, 0}, {0, 1}, {2, 1}})));
  CHECK_THROWS_AS(is_strictly_isomorphic(fixtures::cayley_triangles()[0], fixtures::cayley_triangles()[1]), InputError);
}

TEST_CASE("Cayley triangles compared in their own planes") {
  // each triangle lies in the plane spanned by e_i and e_4
  const auto tris = fixtures::cayley_triangles();
  std::vector<LatticePolytope> planar;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    std::vector<IntVector> pts;
    for (const auto& v : tris[i].vertices()) pts.push_back({v[i], v[3]});
    planar.push_back(poly(2, pts));
  }
  for (std::size_t a = 0; a < planar.size(); ++a)
    for (std::size_t b = a + 1; b < planar.size(); ++b)
      MESSAGE("triangles " << a << " and " << b << " strictly isomorphic: " << is_strictly_isomorphic(planar[a], planar[b]));
}

TEST_CASE("full-dimensional model keeps lattice data") {
  const auto seg = poly(3, {{0, 0, 0}, {2, 4, 6}});
  const auto m = full_dimensional_model(seg);
  CHECK(m.polytope.ambient_dim() == 1);
  CHECK(m.polytope.dim() == 1);
  const auto v = m.polytope.vertices();
  CHECK(abs(v[0][0] - v[1][0]) == 2);
}

TEST_CASE("width-one directions") {
  CHECK(width_one_directions(dilate(unit_simplex(2), 2), 2).empty());
  const auto seg_cayley = cayley({poly(1, {{0}, {2}}), poly(1, {{0}, {3}})});
  const auto dirs = width_one_directions(seg_cayley, 1);
  CHECK(std::find(dirs.begin(), dirs.end(), IntVector{0, 1, 0}) != dirs.end());
  CHECK_FALSE(width_one_directions(fixtures::cayley_example(), 1).empty());
  CHECK(width_one_directions(cube(2, 1), 1).size() == 2);
}
