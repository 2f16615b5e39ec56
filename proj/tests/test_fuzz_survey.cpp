#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polydefect/defect.hpp"
#include "polydefect/errors.hpp"
#include "polydefect/fuzz.hpp"
#include "polydefect/survey.hpp"

using namespace polydefect;

TEST_CASE("instance generators are reproducible") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    InstanceRng a(5, i), b(5, i);
    CHECK(random_simplex(a, 3, 3).vertices() == random_simplex(b, 3, 3).vertices());
    CHECK(random_simple(a, 4, 2).vertices() == random_simple(b, 4, 2).vertices());
  }
  InstanceRng r(1, 0);
  for (int t = 0; t < 1000; ++t) {
    const long v = r.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("generated instances have the requested shape") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    InstanceRng rng(9, i);
    const auto s = random_simplex(rng, 4, 3);
    CHECK(s.is_simplex());
    CHECK(s.dim() == 4);
    CHECK(normalized_volume(s) <= 500);
    const auto p = random_simple(rng, 4, 3);
    CHECK(p.dim() == 4);
    CHECK(is_simple(p));
    CHECK(random_general(rng, 3, 2).dim() == 3);
  }
}

TEST_CASE("fuzz runs are deterministic and thread-independent") {
  FuzzOptions o;
  o.kind = FuzzKind::simplex;
  o.dim = 3;
  o.bound = 3;
  o.count = 20;
  o.seed = 7;
  const auto a = to_json(run_fuzz(o)).dump();
  o.threads = 3;
  const auto b = to_json(run_fuzz(o)).dump();
  CHECK(a == b);
  CHECK(run_fuzz(o).failures() == 0);
}

TEST_CASE("zero instances is a no-op") {
  FuzzOptions o;
  o.count = 0;
  const auto r = run_fuzz(o);
  CHECK(r.instances.empty());
  CHECK(r.checks() == 0);
}

TEST_CASE("fuzz input errors") {
  CHECK_THROWS_AS(parse_fuzz_kind("cube"), InputError);
  FuzzOptions o;
  o.dim = 0;
  o.count = 1;
  CHECK_THROWS_AS(run_fuzz(o), InputError);
}

TEST_CASE("segre survey") {
  const auto one = survey_segre(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].c_general == 2);
  const auto rows = survey_segre(3, 3);
  CHECK(rows.size() == 9);
  for (const auto& r : rows) {
    CHECK(r.consistent);
    CHECK((r.c_general == 0) == (r.k[0] != r.k[1]));
    CHECK(*r.c_closed == r.c_general);
  }
  CHECK(to_json(rows, "segre").contains("note"));
}

TEST_CASE("dilated-simplex survey") {
  const auto rows = survey_dilated_simplices(2, 2, 3);
  CHECK(rows.size() == 21);
  for (const auto& r : rows) {
    CHECK(r.consistent);
    CHECK(r.factor_codegree == std::vector<int>(r.factor_codegree_ceiling.begin(), r.factor_codegree_ceiling.end()));
  }
  CHECK_THROWS_AS(survey_dilated_simplices(0, 1, 1), InputError);
}
