#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polydefect/defect.hpp"
#include "polydefect/errors.hpp"

using namespace polydefect;
using fixtures::poly;

namespace {

LatticePolytope segre(long k1, long k2) { return product(unit_simplex(static_cast<int>(k1)), unit_simplex(static_cast<int>(k2))); }

}  // namespace

TEST_CASE("c on small examples") {
  CHECK(c_invariant(cube(2, 1)) == 2);
  CHECK(c_invariant(dilate(unit_simplex(2), 2)) == 3);
  CHECK(c_invariant(segre(1, 2)) == 0);
  CHECK(c_invariant(segre(1, 1)) == 2);
  CHECK(c_invariant(unit_simplex(3)) == 0);
  CHECK(c_invariant(fixtures::simplex_c21()) == 21);
}

TEST_CASE("c of a polygon is 3 Vol - 2 perimeter + corners") {
  // c = 3 Vol_Z - 2 (boundary lattice length) + (number of vertices)
  const auto p = poly(2, {{0, 0}, {4, 0}, {3, 2}, {0, 3}});
  const Int vol = normalized_volume(p);
  Int boundary = 0;
  for (const auto& f : p.faces_by_dim()[1]) boundary += normalized_volume(p.face_polytope(f));
  CHECK(c_invariant(p) == 3 * vol - 2 * boundary + 4);
}

TEST_CASE("verdicts for smooth and singular inputs") {
  for (long k = 1; k <= 2; ++k) {
    const auto v = defect_verdict(segre(k, k));
    CHECK(v.is_smooth);
    CHECK(v.codegree == k + 1);
    CHECK_FALSE(v.criterion_met);
    CHECK(v.c_value > 0);
    CHECK(v.defect == 0);
  }
  const auto v13 = defect_verdict(segre(1, 3));
  CHECK(v13.criterion_met);
  CHECK(v13.c_value == 0);
  CHECK(v13.defect == 2);
  const auto v3 = defect_verdict(unit_simplex(3));
  CHECK(v3.criterion_met);
  CHECK(v3.defect == 3);

  const auto vc = defect_verdict(fixtures::cayley_example());
  CHECK_FALSE(vc.is_smooth);
  CHECK(vc.codegree == 3);
  CHECK_FALSE(vc.criterion_met);
  CHECK(vc.defect == 0);
  CHECK_FALSE(vc.q_normal_note.empty());
}

TEST_CASE("product criterion") {
  CHECK_FALSE(product_defect_criterion({dilate(unit_simplex(2), 2), cube(1, 1)}));
  CHECK(product_defect_criterion({unit_simplex(1), unit_simplex(3)}));
  CHECK_THROWS_AS(product_defect_criterion({fixtures::simplex_c21(), unit_simplex(1)}), InputError);
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b) {
      const bool crit = product_defect_criterion({unit_simplex(static_cast<int>(a)), unit_simplex(static_cast<int>(b))});
      CHECK(crit == (a != b));
      CHECK(segre_veronese_defect({1, 1}, {a, b}) == crit);
    }
  // dilated factors: 2 S_3 has codegree 2
  CHECK_FALSE(segre_veronese_defect({2, 1}, {3, 1}));
  CHECK(segre_veronese_defect({1, 1, 1}, {5, 1, 1}));
}

TEST_CASE("closed form for c of a product of two simplices") {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b) {
      CHECK(c_segre_closed(a, b) == c_invariant(segre(a, b)));
      CHECK((c_segre_closed(a, b) == 0) == (a != b));
    }
  CHECK(c_segre_closed(1, 1) == 2);
}

TEST_CASE("master expression") {
  CHECK(master_expression(fixtures::q_chain(2)) == 0);
  CHECK(master_expression(fixtures::cayley_example()) == 0);
  CHECK(master_expression(segre(1, 3)) == 0);
  CHECK_THROWS_AS(master_expression(fixtures::simplex_c21()), InputError);
}

TEST_CASE("simple-polytope identity and its intermediate routes") {
  const auto p = fixtures::q_chain(2);
  CHECK(is_simple(p));
  const auto r = simple_polytope_identity_check(p);
  CHECK(r.passed);
  CHECK(r.cases > 10);
  CHECK(simple_polytope_identity_check(p, SimpleIdentityPart::low_degree).passed);
  CHECK_THROWS_AS(simple_polytope_identity_check(p, SimpleIdentityPart::high_degree), InputError);
  // d >= n - d: S_1 x S_3 has d = 1, n = 4 -> low; 2S_2 x 2S_2 has d = 2, n = 4 -> high
  const auto hi = product(dilate(unit_simplex(2), 2), dilate(unit_simplex(2), 2));
  CHECK(simple_polytope_identity_check(hi).passed);
  CHECK(simple_polytope_identity_check(hi, SimpleIdentityPart::high_degree).passed);
  CHECK_THROWS_AS(simple_polytope_identity_check(fixtures::cayley_example()), InputError);
  CHECK_THROWS_AS(simple_polytope_identity_check(fixtures::simplex_c21()), InputError);
}

TEST_CASE("vanishing equations equal interior counts") {
  for (const auto& p : {fixtures::q_chain(2), segre(2, 3), cube(3, 2), fixtures::simplex_c21()}) {
    const auto v = vanishing_equations(p);
    CHECK(v.size() == static_cast<std::size_t>((p.dim() + 2) / 2));
    for (std::size_t k = 1; k <= v.size(); ++k) CHECK(v[k - 1] == count_interior(p, static_cast<long>(k)));
  }
  CHECK_THROWS_AS(vanishing_equations(fixtures::cayley_example()), InputError);
}

TEST_CASE("face records carry consistent profiles") {
  const auto faces = face_records(fixtures::simplex_c21());
  REQUIRE(faces.size() == 5);
  CHECK(faces[0].size() == 5);
  CHECK(faces[3].size() == 5);
  for (const auto& level : faces)
    for (const auto& f : level) CHECK(f.profile.dim == f.face.dim);
}
