#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polydefect/lattice_algebra.hpp"

namespace polydefect {

/// Facet inequality <normal, y> >= -offset in the saturated chart of the
/// polytope's affine hull. The normal is primitive in the chart lattice.
struct Facet {
  IntVector normal;
  Int offset;
  std::vector<std::size_t> vertices;  // sorted indices into LatticePolytope::vertices()
};

struct Face {
  std::vector<std::size_t> vertex_indices;  // sorted
  int dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

enum class Membership { closed, relative_interior };

/// Lattice polytope given by its vertices in Z^ambient_dim.
///
/// Copies share one immutable implementation. The chart, facets and vertex
/// list are built on construction; the face lattice is built on first use.
class LatticePolytope {
 public:
  /// Removes duplicates and non-extreme points. Throws InputError on an empty
  /// list or on points of the wrong length.
  static LatticePolytope from_vertices(std::size_t ambient_dim, const std::vector<IntVector>& points);

  std::size_t ambient_dim() const;
  int dim() const;
  const std::vector<IntVector>& vertices() const;
  std::size_t num_vertices() const { return vertices().size(); }

  const AffineLatticeChart& chart() const;
  // Vertex coordinates in the chart, index-aligned with vertices().
  const std::vector<IntVector>& chart_vertices() const;
  const std::vector<Facet>& facets() const;

  // faces_by_dim()[j] lists the j-dimensional faces; the top entry is P itself.
  const std::vector<std::vector<Face>>& faces_by_dim() const;
  std::vector<std::size_t> f_vector() const;

  LatticePolytope face_polytope(const Face& face) const;

  bool is_full_dimensional() const { return static_cast<std::size_t>(dim()) == ambient_dim(); }
  bool is_simplex() const { return num_vertices() == static_cast<std::size_t>(dim()) + 1; }

 private:
  struct Impl;
  explicit LatticePolytope(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_simple(const LatticePolytope& p);
bool is_smooth(const LatticePolytope& p);

bool contains(const LatticePolytope& p, std::span<const Rat> x, Membership mode);
bool contains(const LatticePolytope& p, std::span<const Int> x, Membership mode);

LatticePolytope dilate(const LatticePolytope& p, long k);
LatticePolytope product(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope pyramid(const LatticePolytope& p);
// conv(P_0 x e_0, ..., P_k x e_k) in R^{m+k+1}.
LatticePolytope cayley(const std::vector<LatticePolytope>& parts);

// Unimodular simplex conv(0, e_1, ..., e_n).
LatticePolytope unit_simplex(int n);
// [0, a]^n.
LatticePolytope cube(int n, long a);

// Same normal fan. Both polytopes must be full-dimensional in one ambient space.
bool is_strictly_isomorphic(const LatticePolytope& p, const LatticePolytope& q);

struct FullDimensionalModel {
  LatticePolytope polytope;
  AffineLatticeChart chart;
};

FullDimensionalModel full_dimensional_model(const LatticePolytope& p);

/// Primitive functionals u with max|u_i| <= radius and width exactly one on P,
/// one representative per ± pair (first nonzero entry positive). The scan is
/// bounded; directions outside the radius are not reported.
std::vector<IntVector> width_one_directions(const LatticePolytope& p, int radius);

std::string describe(const LatticePolytope& p);

}  // namespace polydefect
