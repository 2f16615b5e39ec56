#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydefect/lattice_algebra.hpp"

namespace polydefect {

struct IdentityFailure {
  std::string parameters;
  std::string lhs;
  std::string rhs;
};

/// Outcome of checking one identity over a parameter range.
struct IdentityReport {
  std::string name;
  std::string ranges;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<IdentityFailure> first_failure;
  std::vector<std::string> notes;

  // Counts one case; the first failing case is kept.
  void check(bool ok, const std::string& parameters, const std::string& lhs, const std::string& rhs);
  void check(const Int& lhs, const Int& rhs, const std::string& parameters) {
    check(lhs == rhs, parameters, to_string(lhs), to_string(rhs));
  }
  void check(const Rat& lhs, const Rat& rhs, const std::string& parameters) {
    check(lhs == rhs, parameters, to_string(lhs), to_string(rhs));
  }
  void merge(const IdentityReport& other);
};

struct SidePair {
  Int lhs;
  Int rhs;
};

// Σ_{q=0}^{c} (-1)^q C(b,q) C(a-q,c-q) against C(a-b,c). Needs 0 <= c <= a, 0 <= b.
SidePair convolution_identity(long a, long b, long c);

// Σ_{i=0}^{n-d} (-1)^{n-d-i} i C(i+j-k, j) C(j+1, n-d-i).
// Needs 0 <= d < n, 0 <= k <= d, k <= j <= n.
Int alternating_binomial_sum(long n, long d, long j, long k);
// j+1 if k < n-d, n-d if k = n-d, 0 otherwise.
Int alternating_binomial_sum_expected(long n, long d, long j, long k);

/// Terms of the Zeilberger pair for f(k) = Σ_i F(k, i) with a = n - d:
///   F(k,i) = (-1)^{a-i} i C(i+j-k, j) C(j+1, a-i)
///   R(k,i) = (a-j-1-i)(i-k)(ka - ikj + aji - ki - aj) / ((i+j-k) i)
///   G(k,i) = F(k,i) R(k,i)
namespace wz {
Int F(long a, long j, long k, long i);
Rat R(long a, long j, long k, long i);
Rat G(long a, long j, long k, long i);
// Σ_{i>=0} F(k, i), truncated at i = a where C(j+1, a-i) vanishes beyond.
Int f(long a, long j, long k);
// Printed closed form of -G(k, 0): (-1)^{a+1} C(j-k, j) C(j+1, a) (a-j-1) k a.
Int minus_G0(long a, long j, long k);
}  // namespace wz

/// (a-k)(a-1-k)(j+1)(F(k,i) - F(k+1,i)) == G(k,i+1) - G(k,i).
/// Domain: a >= 1, 0 <= k <= j, i >= 1. Throws InputError outside it.
bool wz_certificate_check(long a, long j, long k, long i);

struct TelescopeResult {
  Rat lhs;  // (a-k)(a-1-k)(j+1)(f(k) - f(k+1))
  Rat rhs;  // -G(k, 0) from the closed form
  bool shift_invariant_claimed = false;  // k not in {a-1, a}
  bool shift_invariant = false;          // f(k) == f(k+1)
  bool holds() const { return lhs == rhs && (!shift_invariant_claimed || shift_invariant); }
};

TelescopeResult wz_telescoped_check(long a, long j, long k);

// f_1, f_2, f_3: f(0), f(a), f(a+1) viewed as functions of j.
Int recurrence_f1(long a, long j);
Int recurrence_f2(long a, long j);
Int recurrence_f3(long a, long j);
// The printed value of f_2(j) - 2 f_2(j+1) + f_2(j+2); nullopt at a pole.
std::optional<Rat> recurrence_f2_closed_form(long a, long j);

IdentityReport recurrence_checks(long a, long j_max);

IdentityReport convolution_sweep(long a_max, long b_max);
IdentityReport alternating_sum_sweep(long n_max);
IdentityReport certificate_sweep(long a_max, long j_max);
IdentityReport telescoped_sweep(long a_max, long j_max);
IdentityReport recurrence_sweep(long a_max, long j_max);

}  // namespace polydefect
