#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polydefect/polytope.hpp"
#include "polydefect/report.hpp"

namespace polydefect {

enum class FuzzKind { simplex, simple, general };

FuzzKind parse_fuzz_kind(const std::string& name);
std::string to_string(FuzzKind kind);

// Deterministic generator for instance `index` of a seeded run.
class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::uint64_t index);
  // Uniform in [lo, hi], independent of the standard library's distributions.
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// Random instance generators. Simplices have nonzero volume at most
/// `max_volume`; simple instances are products of dilated unimodular
/// simplices, segments, and small random simplices; general instances are
/// hulls of random point sets.
LatticePolytope random_simplex(InstanceRng& rng, int dim, long bound, long max_volume = 500);
LatticePolytope random_simple(InstanceRng& rng, int dim, long bound);
LatticePolytope random_general(InstanceRng& rng, int dim, long bound);

struct FuzzOptions {
  FuzzKind kind = FuzzKind::simplex;
  int dim = 3;
  long bound = 2;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct InstanceOutcome {
  std::size_t index = 0;
  Json vertices;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> findings;  // e.g. a negative c(P) for a non-simplex
};

struct FuzzResult {
  FuzzOptions options;
  std::vector<InstanceOutcome> instances;
  std::size_t checks() const;
  std::size_t failures() const;
  std::size_t findings() const;
};

/// Every applicable invariant on one polytope: profile identities, reciprocity
/// for k = 1..dim+2, Stanley monotonicity over all faces, vanishing of the
/// master expression, the simple-polytope identities, the box-point route for
/// simplices, and the smooth-case equivalence.
InstanceOutcome check_instance(const LatticePolytope& p);

FuzzResult run_fuzz(const FuzzOptions& options);
Json to_json(const FuzzResult& result);

}  // namespace polydefect
