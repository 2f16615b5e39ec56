#pragma once

#include <string>
#include <vector>

#include "polydefect/construct.hpp"
#include "polydefect/polytope.hpp"

namespace fixtures {

using polydefect::IntVector;
using polydefect::LatticePolytope;

inline LatticePolytope poly(std::size_t n, const std::vector<IntVector>& pts) {
  return LatticePolytope::from_vertices(n, pts);
}

// conv(e4, e1+e4, e2+e4, e1+e2+2e3+e4, -e1-e2-e3-2e4)
inline LatticePolytope simplex_c21() {
  return poly(4, {{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {1, 1, 2, 1}, {-1, -1, -1, -2}});
}

inline std::vector<LatticePolytope> cayley_triangles() {
  return {poly(4, {{0, 0, 0, 0}, {2, 0, 0, 1}, {1, 0, 0, 1}}),
          poly(4, {{0, 0, 0, 0}, {0, 2, 0, 1}, {0, 1, 0, 1}}),
          poly(4, {{0, 0, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 0}})};
}

inline LatticePolytope cayley_example() { return polydefect::cayley(cayley_triangles()); }

// Q = 2 S_2, Q' = pyramid^3(Q), P = Q' x [0, 2]
inline LatticePolytope q_chain(int step) {
  using namespace polydefect;
  LatticePolytope q = dilate(unit_simplex(2), 2);
  if (step == 0) return q;
  q = pyramid(pyramid(pyramid(q)));
  if (step == 1) return q;
  return product(q, cube(1, 2));
}

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace fixtures
