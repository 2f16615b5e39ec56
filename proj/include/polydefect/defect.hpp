#pragma once

#include <string>
#include <vector>

#include "polydefect/ehrhart.hpp"
#include "polydefect/identities.hpp"
#include "polydefect/polytope.hpp"

namespace polydefect {

/// Dual-defect verdict. For smooth P the codegree criterion and c(P) = 0 are
/// required to agree; for singular P only the invariants are reported.
struct DefectVerdict {
  bool is_smooth = false;
  int codegree = 0;
  int dim = 0;
  Int c_value;
  bool criterion_met = false;  // 2 cd >= n + 3
  int defect = 0;              // 2 cd - 2 - n when smooth and criterion_met
  std::string q_normal_note;
};

struct FaceRecord {
  Face face;
  LatticePolytope polytope;
  EhrhartProfile profile;
};

// Every face of P with its Ehrhart profile, grouped by dimension.
std::vector<std::vector<FaceRecord>> face_records(const LatticePolytope& p);

// Σ_j (-1)^{n-j} (j+1) Σ_{F ∈ F_j} Vol_Z(F)
Int c_invariant(const LatticePolytope& p);
Int c_invariant(const std::vector<std::vector<FaceRecord>>& faces, int n);

DefectVerdict defect_verdict(const LatticePolytope& p);

// 2 max cd(P_i) >= Σ dim(P_i) + 3. Every factor must be smooth.
bool product_defect_criterion(const std::vector<LatticePolytope>& factors);

// Criterion for Π d_i S_{k_i}; evaluates the ceiling form and the reduced
// form (2 k_i > Σ k with d_i = 1) and throws ConsistencyError if they differ.
bool segre_veronese_defect(const std::vector<long>& d, const std::vector<long>& k);

// Closed double sum for c(S_{k1} x S_{k2}).
Int c_segre_closed(long k1, long k2);

/// Σ_{p=d+1}^{n} Σ_{i=1}^{p-d} (-1)^{d-i} i C(p+1, p-d-i) Σ_{G ∈ F_p} |relint(iG) ∩ Z^n|
/// with d = degree(P), n = dim(P). Throws InputError when d = n.
Int master_expression(const LatticePolytope& p);

enum class SimpleIdentityPart { low_degree, high_degree };  // d < n-d, d >= n-d

/// Checks the simple-polytope identity for the part selected by the degree,
/// together with every intermediate route of its derivation: the master
/// expression from interior counts, its h*-expansion before and after the
/// binomial reductions, and the face inclusion-exclusion it rests on.
IdentityReport simple_polytope_identity_check(const LatticePolytope& p);
IdentityReport simple_polytope_identity_check(const LatticePolytope& p, SimpleIdentityPart part);

// For k = 1..ceil((n+1)/2): Σ_j (-1)^{n-j} Σ_{F ∈ F_j} |kF ∩ Z^n|. P must be simple.
std::vector<Int> vanishing_equations(const LatticePolytope& p);

}  // namespace polydefect
