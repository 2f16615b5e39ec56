#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "polydefect/construct.hpp"
#include "polydefect/errors.hpp"
#include "polydefect/report.hpp"

using namespace polydefect;

TEST_CASE("grammar") {
  CHECK(construct("simplex(4)").vertices() == unit_simplex(4).vertices());
  CHECK(construct(" product( simplex(1) , simplex(2) ) ").dim() == 3);
  CHECK(construct("product(simplex(1),simplex(1),simplex(1))").num_vertices() == 8);
  const auto q = construct("product(pyramid(pyramid(pyramid(dilate(2,simplex(2))))),cube(1,2))");
  CHECK(q.vertices() == fixtures::q_chain(2).vertices());
  const std::string t = "file(" + fixtures::fixture_path("cayley_triangle_");
  const auto c = construct("cayley(" + t + "0.json)," + t + "1.json)," + t + "2.json))");
  CHECK(c.vertices() == fixtures::cayley_example().vertices());
}

TEST_CASE("grammar errors") {
  for (const char* bad : {"", "simplex", "simplex(", "simplex(2", "simplex(2))", "cube(2)", "dilate(0,simplex(1))",
                          "blob(1)", "product(simplex(1))", "simplex(-1)", "file(/nonexistent/x.json)",
                          "cayley(simplex(1),simplex(2))"})
    CHECK_THROWS_AS(construct(bad), InputError);
}

TEST_CASE("polytope JSON round trip") {
  const auto p = fixtures::simplex_c21();
  const auto j = polytope_to_json(p);
  CHECK(j["ambient_dim"] == 4);
  CHECK(polytope_from_json(j).vertices() == p.vertices());
  Json big = Json::parse(R"({"ambient_dim": 1, "vertices": [[0], ["123456789012345678901234567890"]]})");
  CHECK(polytope_from_json(big).vertices()[1][0] == Int("123456789012345678901234567890"));
  CHECK(polytope_to_json(polytope_from_json(big))["vertices"][1][0] == "123456789012345678901234567890");
}

TEST_CASE("polytope JSON errors") {
  for (const char* bad : {R"([])", R"({"vertices": [[0]]})", R"({"ambient_dim": 1, "vertices": []})",
                          R"({"ambient_dim": 1, "vertices": [[0.5]]})", R"({"ambient_dim": 1, "vertices": [["x"]]})",
                          R"({"ambient_dim": 2, "vertices": [[0]]})", R"({"ambient_dim": -1, "vertices": [[0]]})"})
    CHECK_THROWS_AS(polytope_from_json(Json::parse(bad)), InputError);
  CHECK_THROWS_AS(read_polytope_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("report fields") {
  const auto r = build_report(fixtures::cayley_example(), "cayley");
  CHECK(r["format"] == kReportFormat);
  const auto& inv = r["invariants"];
  CHECK(inv["dim"] == 6);
  CHECK(inv["lattice_points"] == 9);
  CHECK(inv["codegree"] == 3);
  CHECK(inv["simple"] == false);
  CHECK(r["verdict"]["criterion_met"] == false);
  CHECK(report_passed(r));
  CHECK_FALSE(r.contains("box"));

  const auto s = build_report(fixtures::simplex_c21(), "simplex", ReportOptions{2});
  CHECK(s["invariants"]["c"] == 21);
  CHECK(s["box"]["c_from_box"] == 21);
  CHECK(s.contains("width_one_directions"));
  CHECK(report_passed(s));
}

TEST_CASE("reports are deterministic") {
  const auto a = build_report(fixtures::q_chain(2), "q").dump();
  const auto b = build_report(fixtures::q_chain(2), "q").dump();
  CHECK(a == b);
  CHECK(render_text(build_report(unit_simplex(2), "s")).find("codegree") != std::string::npos);
}
