#include "polydefect/ehrhart.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "polydefect/errors.hpp"

namespace polydefect {
namespace {

// Lattice points y with A y >= rhs inside the box [lo, hi], enumerated
// coordinate by coordinate. Each level narrows its range using the box bound
// on the remaining coordinates; the last level is exact and counted in O(1).
template <class T>
struct PointCounter {
  std::size_t dim = 0;
  std::vector<std::vector<T>> a;  // facet x coordinate
  std::vector<T> rhs;
  std::vector<T> lo, hi;
  std::vector<std::vector<T>> rest_max;  // [level][facet]: max of the tail over the box
  Int total = 0;

  static T floor_div(const T& x, const T& y);
  static T ceil_div(const T& x, const T& y);

  void prepare() {
    rest_max.assign(dim, std::vector<T>(a.size(), T(0)));
    for (std::size_t f = 0; f < a.size(); ++f) {
      T acc = 0;
      for (std::size_t t = dim; t-- > 0;) {
        rest_max[t][f] = acc;
        const T x = a[f][t] * lo[t];
        const T y = a[f][t] * hi[t];
        acc += x > y ? x : y;
      }
    }
  }

  void run(std::size_t level, std::vector<T>& partial) {
    T low = lo[level], high = hi[level];
    for (std::size_t f = 0; f < a.size(); ++f) {
      const T& coeff = a[f][level];
      const T gap = rhs[f] - partial[f] - rest_max[level][f];
      if (coeff > 0) {
        const T b = ceil_div(gap, coeff);
        if (b > low) low = b;
      } else if (coeff < 0) {
        const T b = floor_div(gap, coeff);
        if (b < high) high = b;
      } else if (gap > 0) {
        return;
      }
    }
    if (low > high) return;
    if (level + 1 == dim) {
      add(high - low + 1);
      return;
    }
    std::vector<T> next(partial);
    for (std::size_t f = 0; f < a.size(); ++f) next[f] += a[f][level] * low;
    for (T y = low; y <= high; ++y) {
      run(level + 1, next);
      for (std::size_t f = 0; f < a.size(); ++f) next[f] += a[f][level];
    }
  }

  void add(const T& c);
};

template <>
std::int64_t PointCounter<std::int64_t>::floor_div(const std::int64_t& x, const std::int64_t& y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}
template <>
std::int64_t PointCounter<std::int64_t>::ceil_div(const std::int64_t& x, const std::int64_t& y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) == (y < 0))) ++q;
  return q;
}
template <>
void PointCounter<std::int64_t>::add(const std::int64_t& c) {
  total += static_cast<long>(c);
}

template <>
Int PointCounter<Int>::floor_div(const Int& x, const Int& y) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}
template <>
Int PointCounter<Int>::ceil_div(const Int& x, const Int& y) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}
template <>
void PointCounter<Int>::add(const Int& c) {
  total += c;
}

template <class T, class Convert>
Int run_counter(const LatticePolytope& p, const std::vector<Int>& rhs, const std::vector<Int>& lo,
                const std::vector<Int>& hi, Convert convert) {
  PointCounter<T> counter;
  counter.dim = static_cast<std::size_t>(p.dim());
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    std::vector<T> row;
    for (const Int& x : p.facets()[f].normal) row.push_back(convert(x));
    counter.a.push_back(std::move(row));
    counter.rhs.push_back(convert(rhs[f]));
  }
  for (std::size_t t = 0; t < counter.dim; ++t) {
    counter.lo.push_back(convert(lo[t]));
    counter.hi.push_back(convert(hi[t]));
  }
  counter.prepare();
  std::vector<T> partial(counter.a.size(), T(0));
  counter.run(0, partial);
  return counter.total;
}

// Points y of the chart lattice with <u_f, y> >= -k c_f + shift for every facet.
Int count_in_chart(const LatticePolytope& p, long k, long shift) {
  const auto dim = static_cast<std::size_t>(p.dim());
  std::vector<Int> lo(dim), hi(dim);
  for (std::size_t t = 0; t < dim; ++t) {
    lo[t] = hi[t] = p.chart_vertices().front()[t];
    for (const auto& y : p.chart_vertices()) {
      lo[t] = std::min(lo[t], y[t]);
      hi[t] = std::max(hi[t], y[t]);
    }
    lo[t] *= k;
    hi[t] *= k;
  }
  std::vector<Int> rhs;
  Int magnitude = 0;
  for (const auto& f : p.facets()) {
    rhs.push_back(-f.offset * k + shift);
    Int s = abs(rhs.back());
    for (std::size_t t = 0; t < dim; ++t) s += 2 * abs(f.normal[t]) * std::max<Int>(abs(lo[t]), abs(hi[t]));
    magnitude = std::max(magnitude, s);
  }
  for (std::size_t t = 0; t < dim; ++t) magnitude = std::max<Int>(magnitude, abs(hi[t] - lo[t]) + abs(lo[t]) + abs(hi[t]));

  // The int64 kernel is exact whenever every intermediate stays below 2^61.
  const Int limit = Int(1) << 61;
  if (magnitude < limit) {
    return run_counter<std::int64_t>(p, rhs, lo, hi, [](const Int& x) { return static_cast<std::int64_t>(x.get_si()); });
  }
  return run_counter<Int>(p, rhs, lo, hi, [](const Int& x) { return x; });
}

std::vector<Int> count_sequence(const LatticePolytope& p, long kmax) {
  std::vector<Int> counts;
  for (long k = 0; k <= kmax; ++k) counts.push_back(count_points(p, k));
  return counts;
}

// Monomial coefficients of the degree-n interpolant of values at 0..n.
std::vector<Rat> interpolate(const std::vector<Int>& values, std::size_t n) {
  std::vector<Int> diffs(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n + 1));
  std::vector<Int> newton;  // Δ^i f(0)
  for (std::size_t i = 0; i <= n; ++i) {
    newton.push_back(diffs.front());
    for (std::size_t j = 0; j + 1 < diffs.size(); ++j) diffs[j] = diffs[j + 1] - diffs[j];
    diffs.pop_back();
  }
  std::vector<Rat> coeffs(n + 1);
  std::vector<Int> falling{1};  // t(t-1)...(t-i+1) as monomial coefficients
  for (std::size_t i = 0; i <= n; ++i) {
    const Rat scale = Rat(newton[i]) / Rat(factorial(static_cast<long>(i)));
    for (std::size_t c = 0; c < falling.size(); ++c) coeffs[c] += scale * falling[c];
    std::vector<Int> next(falling.size() + 1);
    for (std::size_t c = 0; c < falling.size(); ++c) {
      next[c + 1] += falling[c];
      next[c] -= falling[c] * static_cast<long>(i);
    }
    falling = std::move(next);
  }
  for (auto& c : coeffs) c.canonicalize();
  return coeffs;
}

}  // namespace

Int count_points(const LatticePolytope& p, long k) {
  if (k < 0) throw InputError("dilation factor must be nonnegative");
  if (k == 0 || p.dim() == 0) return 1;
  return count_in_chart(p, k, 0);
}

Int count_interior(const LatticePolytope& p, long k) {
  if (k < 1) throw InputError("interior count needs k >= 1");
  if (p.dim() == 0) return 1;
  return count_in_chart(p, k, 1);
}

Rat evaluate(const std::vector<Rat>& coeffs, const Rat& t) {
  Rat v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * t + coeffs[i];
  return v;
}

std::vector<Rat> ehrhart_polynomial(const LatticePolytope& p) { return ehrhart_profile(p).ehr_coeffs; }
std::vector<Int> h_star(const LatticePolytope& p) { return ehrhart_profile(p).h_star; }
int degree(const LatticePolytope& p) { return ehrhart_profile(p).degree; }
Int normalized_volume(const LatticePolytope& p) { return ehrhart_profile(p).normalized_volume; }

int codegree(const LatticePolytope& p) {
  const int n = p.dim();
  for (long k = 1; k <= n + 1; ++k)
    if (sgn(count_interior(p, k)) > 0) return static_cast<int>(k);
  throw ConsistencyError("no interior lattice point in (dim+1)P: " + describe(p));
}

EhrhartProfile ehrhart_profile(const LatticePolytope& p) {
  EhrhartProfile prof;
  const int n = p.dim();
  const auto nn = static_cast<std::size_t>(n);
  prof.dim = n;
  const auto counts = count_sequence(p, n + 1);

  prof.ehr_coeffs = interpolate(counts, nn);
  if (evaluate(prof.ehr_coeffs, Rat(n + 1)) != Rat(counts[nn + 1]))
    throw ConsistencyError("Ehrhart interpolant misses the validation count at k = dim+1: " + describe(p));

  const Rat vol = prof.ehr_coeffs[nn] * Rat(factorial(n));
  if (vol.get_den() != 1 || sgn(vol) <= 0)
    throw ConsistencyError("normalized volume is not a positive integer: " + describe(p));
  prof.normalized_volume = vol.get_num();

  Int sum = 0;
  for (int k = 0; k <= n; ++k) {
    Int h = 0;
    for (int i = 0; i <= k; ++i) {
      const Int term = generalized_binomial(n + 1, k - i) * counts[static_cast<std::size_t>(i)];
      h += ((k - i) % 2 == 0) ? term : Int(-term);
    }
    if (sgn(h) < 0) throw ConsistencyError("negative h* coefficient: " + describe(p));
    if (sgn(h) != 0) prof.degree = k;
    sum += h;
    prof.h_star.push_back(std::move(h));
  }
  if (prof.h_star.front() != 1) throw ConsistencyError("h*_0 != 1: " + describe(p));
  if (sum != prof.normalized_volume) throw ConsistencyError("sum of h* differs from the normalized volume: " + describe(p));

  prof.codegree = codegree(p);
  if (prof.degree != n + 1 - prof.codegree)
    throw ConsistencyError("degree from h* disagrees with the interior-point codegree: " + describe(p));
  return prof;
}

bool reciprocity_check(const LatticePolytope& p, long k) {
  if (k < 1) throw InputError("reciprocity needs k >= 1");
  const Rat at_minus_k = evaluate(ehrhart_polynomial(p), Rat(-k));
  const Rat lhs = (p.dim() % 2 == 0) ? at_minus_k : Rat(-at_minus_k);
  return lhs == Rat(count_interior(p, k));
}

std::vector<IntVector> lattice_points(const LatticePolytope& p) {
  const std::size_t n = p.ambient_dim();
  IntVector lo = p.vertices().front(), hi = lo;
  for (const auto& v : p.vertices())
    for (std::size_t c = 0; c < n; ++c) {
      if (v[c] < lo[c]) lo[c] = v[c];
      if (v[c] > hi[c]) hi[c] = v[c];
    }
  std::vector<IntVector> out;
  IntVector x = lo;
  for (;;) {
    if (contains(p, x, Membership::closed)) out.push_back(x);
    std::size_t c = 0;
    while (c < n && x[c] == hi[c]) x[c] = lo[c], ++c;
    if (c == n) break;
    ++x[c];
  }
  return out;
}

}  // namespace polydefect
