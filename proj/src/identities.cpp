#include "polydefect/identities.hpp"

#include "polydefect/errors.hpp"

namespace polydefect {
namespace {

Int sign_pow(long e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

std::string params(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ", ";
    s += k;
    s += '=';
    s += std::to_string(v);
  }
  return s;
}

}  // namespace

void IdentityReport::check(bool ok, const std::string& parameters, const std::string& lhs, const std::string& rhs) {
  ++cases;
  if (ok || first_failure) {
    if (!ok) passed = false;
    return;
  }
  passed = false;
  first_failure = IdentityFailure{parameters, lhs, rhs};
}

void IdentityReport::merge(const IdentityReport& other) {
  cases += other.cases;
  if (!other.passed) {
    passed = false;
    if (!first_failure) first_failure = other.first_failure;
  }
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

SidePair convolution_identity(long a, long b, long c) {
  if (c < 0 || c > a || b < 0) throw InputError("convolution identity needs 0 <= c <= a and 0 <= b");
  Int lhs = 0;
  for (long q = 0; q <= c; ++q) lhs += sign_pow(q) * generalized_binomial(b, q) * generalized_binomial(a - q, c - q);
  return {lhs, generalized_binomial(a - b, c)};
}

namespace {

void require_alternating_range(long n, long d, long j, long k) {
  if (!(0 <= d && d < n && 0 <= k && k <= d && k <= j && j <= n))
    throw InputError("alternating sum parameters out of range: " + params({{"n", n}, {"d", d}, {"j", j}, {"k", k}}));
}

}  // namespace

Int alternating_binomial_sum(long n, long d, long j, long k) {
  require_alternating_range(n, d, j, k);
  const long a = n - d;
  Int sum = 0;
  for (long i = 0; i <= a; ++i)
    sum += sign_pow(a - i) * i * generalized_binomial(i + j - k, j) * generalized_binomial(j + 1, a - i);
  return sum;
}

Int alternating_binomial_sum_expected(long n, long d, long j, long k) {
  require_alternating_range(n, d, j, k);
  const long a = n - d;
  if (k < a) return j + 1;
  if (k == a) return a;
  return 0;
}

namespace wz {

Int F(long a, long j, long k, long i) {
  return sign_pow(a - i) * i * generalized_binomial(i + j - k, j) * generalized_binomial(j + 1, a - i);
}

Rat R(long a, long j, long k, long i) {
  const long den = (i + j - k) * i;
  if (den == 0) throw InputError("outside certificate domain: R has a pole at " + params({{"a", a}, {"j", j}, {"k", k}, {"i", i}}));
  const Int num = Int(-j - 1 + a - i) * (i - k) * (Int(k) * a - Int(i) * k * j + Int(a) * j * i - Int(k) * i - Int(a) * j);
  Rat r(num, Int(den));
  r.canonicalize();
  return r;
}

Rat G(long a, long j, long k, long i) {
  const Int fv = F(a, j, k, i);
  if (sgn(fv) == 0 && (i + j - k) * i != 0) return 0;
  return Rat(fv) * R(a, j, k, i);
}

Int f(long a, long j, long k) {
  Int sum = 0;
  for (long i = 0; i <= a; ++i) sum += F(a, j, k, i);
  // C(j+1, a-i) = 0 for i > a, so the tail is empty.
  if (sgn(F(a, j, k, a + 1)) != 0) throw ConsistencyError("truncation of f(k) at i = a is not exact");
  return sum;
}

Int minus_G0(long a, long j, long k) {
  return sign_pow(a + 1) * generalized_binomial(j - k, j) * generalized_binomial(j + 1, a) * (a - j - 1) * k * a;
}

}  // namespace wz

bool wz_certificate_check(long a, long j, long k, long i) {
  if (a < 1 || k < 0 || k > j || i < 1)
    throw InputError("outside certificate domain: " + params({{"a", a}, {"j", j}, {"k", k}, {"i", i}}));
  const Rat lhs = Rat(Int(a - k) * (a - 1 - k) * (j + 1) * (wz::F(a, j, k, i) - wz::F(a, j, k + 1, i)));
  const Rat rhs = wz::G(a, j, k, i + 1) - wz::G(a, j, k, i);
  return lhs == rhs;
}

TelescopeResult wz_telescoped_check(long a, long j, long k) {
  if (a < 1 || k < 0 || k > j) throw InputError("telescoped check needs a >= 1 and 0 <= k <= j");
  TelescopeResult r;
  const Int fk = wz::f(a, j, k);
  const Int fk1 = wz::f(a, j, k + 1);
  r.lhs = Rat(Int(a - k) * (a - 1 - k) * (j + 1) * (fk - fk1));
  r.rhs = Rat(wz::minus_G0(a, j, k));
  r.shift_invariant_claimed = (k != a - 1 && k != a);
  r.shift_invariant = (fk == fk1);
  return r;
}

Int recurrence_f1(long a, long j) {
  Int s = 0;
  for (long i = 0; i <= a; ++i)
    s += sign_pow(a - i) * i * generalized_binomial(i + j, j) * generalized_binomial(j + 1, a - i);
  return s;
}

Int recurrence_f2(long a, long j) {
  Int s = 0;
  for (long i = 0; i <= a; ++i)
    s += sign_pow(a - i) * i * generalized_binomial(i + j - a, j) * generalized_binomial(j + 1, a - i);
  return s;
}

Int recurrence_f3(long a, long j) {
  Int s = 0;
  for (long i = 0; i <= a; ++i)
    s += sign_pow(a - i) * i * generalized_binomial(i + j - a - 1, j) * generalized_binomial(j + 1, a - i);
  return s;
}

std::optional<Rat> recurrence_f2_closed_form(long a, long j) {
  const long den = (j + 1) * (a - j - 2);
  if (den == 0) return std::nullopt;
  const Int num = sign_pow(a + 1) * generalized_binomial(j - a, j) * generalized_binomial(j + 1, a) * a *
                  (Int(-2) * a * j + Int(a) * a - 4 * a + Int(j) * j + 4 * j + 3);
  Rat r(num, Int(den));
  r.canonicalize();
  return r;
}

IdentityReport recurrence_checks(long a, long j_max) {
  if (a < 1 || j_max < a + 2) throw InputError("recurrence checks need a >= 1 and j_max >= a + 2");
  IdentityReport rep;
  rep.name = "recurrences";
  rep.ranges = params({{"a", a}, {"j_max", j_max}});

  rep.check(recurrence_f1(a, 0), Int(1), params({{"a", a}, {"f1(0)", 0}}));
  for (long j = 0; j <= j_max; ++j) {
    rep.check(recurrence_f1(a, j), Int(j + 1), params({{"a", a}, {"f1 value j", j}}));
    if (j < j_max)
      rep.check(Int(-j - 2) * recurrence_f1(a, j) + Int(j + 1) * recurrence_f1(a, j + 1), Int(0),
                params({{"a", a}, {"f1 recurrence j", j}}));
  }
  for (long j = a; j <= j_max; ++j) {
    rep.check(recurrence_f2(a, j), Int(a), params({{"a", a}, {"f2 value j", j}}));
    if (j + 2 <= j_max) {
      const Int second = recurrence_f2(a, j) - 2 * recurrence_f2(a, j + 1) + recurrence_f2(a, j + 2);
      rep.check(second, Int(0), params({{"a", a}, {"f2 second difference j", j}}));
      if (const auto closed = recurrence_f2_closed_form(a, j))
        rep.check(Rat(second), *closed, params({{"a", a}, {"f2 closed form j", j}}));
    }
  }
  for (long j = a + 1; j <= j_max; ++j) {
    rep.check(recurrence_f3(a, j), Int(0), params({{"a", a}, {"f3 value j", j}}));
    if (j < j_max)
      rep.check(Int(-j - 2) * recurrence_f3(a, j) + Int(j + 1) * recurrence_f3(a, j + 1), Int(0),
                params({{"a", a}, {"f3 recurrence j", j}}));
  }
  return rep;
}

IdentityReport convolution_sweep(long a_max, long b_max) {
  IdentityReport rep;
  rep.name = "convolution";
  rep.ranges = "0 <= c <= a <= " + std::to_string(a_max) + ", 0 <= b <= " + std::to_string(b_max);
  for (long a = 0; a <= a_max; ++a)
    for (long c = 0; c <= a; ++c)
      for (long b = 0; b <= b_max; ++b) {
        const auto [lhs, rhs] = convolution_identity(a, b, c);
        rep.check(lhs, rhs, params({{"a", a}, {"b", b}, {"c", c}}));
      }
  return rep;
}

IdentityReport alternating_sum_sweep(long n_max) {
  IdentityReport rep;
  rep.name = "alternating sum";
  rep.ranges = "1 <= n <= " + std::to_string(n_max) + ", 0 <= d < n, 0 <= k <= d, k <= j <= n";
  for (long n = 1; n <= n_max; ++n)
    for (long d = 0; d < n; ++d)
      for (long k = 0; k <= d; ++k)
        for (long j = k; j <= n; ++j)
          rep.check(alternating_binomial_sum(n, d, j, k), alternating_binomial_sum_expected(n, d, j, k),
                    params({{"n", n}, {"d", d}, {"j", j}, {"k", k}}));
  return rep;
}

IdentityReport certificate_sweep(long a_max, long j_max) {
  IdentityReport rep;
  rep.name = "certificate";
  rep.ranges = "1 <= a <= " + std::to_string(a_max) + ", 0 <= k <= j <= " + std::to_string(j_max) + ", 1 <= i <= a+2";
  for (long a = 1; a <= a_max; ++a)
    for (long j = 0; j <= j_max; ++j)
      for (long k = 0; k <= j; ++k)
        for (long i = 1; i <= a + 2; ++i) {
          const bool ok = wz_certificate_check(a, j, k, i);
          rep.check(ok, params({{"a", a}, {"j", j}, {"k", k}, {"i", i}}), ok ? "equal" : "differs", "equal");
        }
  return rep;
}

IdentityReport telescoped_sweep(long a_max, long j_max) {
  IdentityReport rep;
  rep.name = "telescoped";
  rep.ranges = "1 <= a <= " + std::to_string(a_max) + ", 0 <= k <= j <= " + std::to_string(j_max);
  for (long a = 1; a <= a_max; ++a)
    for (long j = 0; j <= j_max; ++j)
      for (long k = 0; k <= j; ++k) {
        const auto r = wz_telescoped_check(a, j, k);
        rep.check(r.holds(), params({{"a", a}, {"j", j}, {"k", k}}), to_string(r.lhs), to_string(r.rhs));
      }
  // C(j-k, j) at j = k = 0 is C(0, 0) = 1; the closed form still vanishes through its factor k.
  rep.notes.push_back("j = k = 0: C(0,0) = 1, -G(0,0) = " + to_string(wz::minus_G0(1, 0, 0)) + " via the factor k");
  return rep;
}

IdentityReport recurrence_sweep(long a_max, long j_max) {
  IdentityReport rep;
  rep.name = "recurrences";
  rep.ranges = "1 <= a <= " + std::to_string(a_max) + ", j <= " + std::to_string(j_max);
  for (long a = 1; a <= a_max; ++a) rep.merge(recurrence_checks(a, j_max));
  return rep;
}

}  // namespace polydefect
