#pragma once

#include <vector>

#include "polydefect/lattice_algebra.hpp"
#include "polydefect/polytope.hpp"

namespace polydefect {

struct EhrhartProfile {
  int dim = 0;
  std::vector<Rat> ehr_coeffs;  // coefficient of k^i at index i, length dim + 1
  std::vector<Int> h_star;      // length dim + 1, trailing zeros kept
  Int normalized_volume;
  int degree = 0;
  int codegree = 0;
};

// |kP ∩ Z^n| for k >= 0 (k = 0 gives 1).
Int count_points(const LatticePolytope& p, long k);
// Lattice points in the relative interior of kP, k >= 1. A point is its own relative interior.
Int count_interior(const LatticePolytope& p, long k);

std::vector<Rat> ehrhart_polynomial(const LatticePolytope& p);
Rat evaluate(const std::vector<Rat>& coeffs, const Rat& t);

std::vector<Int> h_star(const LatticePolytope& p);
int codegree(const LatticePolytope& p);
int degree(const LatticePolytope& p);
Int normalized_volume(const LatticePolytope& p);

/// Builds every field from one pass of counts at k = 0..dim+1 plus an
/// interior-point search for the codegree. Throws ConsistencyError if any of
/// the profile's internal identities fails.
EhrhartProfile ehrhart_profile(const LatticePolytope& p);

// Every lattice point of P, by scanning the bounding box of its vertices.
// Meant for small polytopes such as faces.
std::vector<IntVector> lattice_points(const LatticePolytope& p);

// (-1)^dim ehr_P(-k) == |relint(kP) ∩ Z^n|
bool reciprocity_check(const LatticePolytope& p, long k);

}  // namespace polydefect
