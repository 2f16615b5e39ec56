#pragma once

#include <map>
#include <vector>

#include "polydefect/identities.hpp"
#include "polydefect/polytope.hpp"

namespace polydefect {

using Support = std::vector<std::size_t>;  // sorted vertex indices in 0..n

struct BoxPoint {
  IntVector point;      // in Z^{n+1}: chart coordinates of the simplex lifted to height 1
  RatVector lambda;     // point = Σ lambda_i (v_i, 1), 0 <= lambda_i < 1
  Support support;      // {i : lambda_i != 0}
  long height = 0;      // Σ lambda_i
};

/// Lattice points of the half-open parallelepiped spanned by the lifted
/// vertices of a lattice simplex.
struct BoxPointProfile {
  int n = 0;
  std::vector<BoxPoint> points;
  std::map<Support, Int> s;            // nonzero s_I only; s_{} = 1
  std::vector<Int> h_star_from_heights;  // length n + 1
};

// Enumerates Z^{n+1} / Λ through Smith normal form coset representatives,
// Λ the lattice of lifted vertices. Throws InputError if P is not a simplex.
BoxPointProfile box_points(const LatticePolytope& simplex);

// Σ_I C(|I|, n) s_I = (n+1) s_{[n+1]} + Σ_{|I|=n} s_I
Int c_from_box(const BoxPointProfile& profile);
Int c_from_box(const LatticePolytope& simplex);

// s_I = 0 whenever |I| > 2 deg(P).
IdentityReport support_bound_check(const LatticePolytope& simplex);

}  // namespace polydefect
