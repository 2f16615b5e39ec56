#include "polydefect/lattice_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "polydefect/errors.hpp"

namespace polydefect {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return sgn(x) == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

IntVector operator*(const IntMatrix& m, std::span<const Int> v) {
  if (m.cols() != v.size()) throw InputError("matrix-vector dimension mismatch");
  IntVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << polydefect::to_string(std::span<const Int>(data_.data() + r * cols_, cols_));
  }
  os << ']';
  return os.str();
}

Int gcd_of(std::span<const Int> v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive(std::span<const Int> v) {
  const Int g = gcd_of(v);
  if (sgn(g) == 0) throw InputError("zero vector has no primitive form");
  IntVector out(v.begin(), v.end());
  for (Int& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Int v = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclid on column c below row r until a single nonzero entry remains.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == h.rows() || mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool reduced = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (sgn(h(i, c)) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t limit = std::min(s.rows(), s.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    std::size_t bi = s.rows(), bj = s.cols();
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j)
        if (sgn(s(i, j)) != 0 && (bi == s.rows() || mpz_cmpabs(s(i, j).get_mpz_t(), s(bi, bj).get_mpz_t()) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == s.rows()) break;
    s.swap_rows(t, bi);
    u.swap_rows(t, bi);
    s.swap_cols(t, bj);
    v.swap_cols(t, bj);

    while (true) {
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (sgn(s(i, t)) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (sgn(s(t, j)) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
      }

      // A leftover remainder in row/column t is smaller than the pivot: swap it in.
      std::size_t ri = s.rows(), cj = s.cols();
      for (std::size_t i = t + 1; i < s.rows() && ri == s.rows(); ++i)
        if (sgn(s(i, t)) != 0) ri = i;
      for (std::size_t j = t + 1; j < s.cols() && cj == s.cols(); ++j)
        if (sgn(s(t, j)) != 0) cj = j;
      if (ri != s.rows()) {
        s.swap_rows(t, ri);
        u.swap_rows(t, ri);
        continue;
      }
      if (cj != s.cols()) {
        s.swap_cols(t, cj);
        v.swap_cols(t, cj);
        continue;
      }

      // Divisibility: fold an offending row into row t and repeat.
      std::size_t bad = s.rows();
      for (std::size_t i = t + 1; i < s.rows() && bad == s.rows(); ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == s.rows()) break;
      s.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (sgn(s(t, t)) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

std::vector<Int> elementary_divisors(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (sgn(snf.S(i, i)) != 0) d.push_back(snf.S(i, i));
  return d;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw InputError("unimodular_inverse: matrix not square");
  HermiteForm hnf = hermite_normal_form(u);
  if (!(hnf.H == IntMatrix::identity(u.rows())))
    throw InputError("unimodular_inverse: matrix is not unimodular");
  return std::move(hnf.U);
}

std::vector<RatVector> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InputError("rational_inverse: matrix not square");
  std::vector<RatVector> a(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw InputError("rational_inverse: singular matrix");
    std::swap(a[p], a[c]);
    const Rat pivot = a[c][c];
    for (Rat& x : a[c]) x /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

AffineLatticeChart::AffineLatticeChart(IntVector origin, std::vector<IntVector> basis,
                                       IntMatrix coordinate_rows, IntMatrix constraint_rows)
    : origin_(std::move(origin)),
      basis_(std::move(basis)),
      coordinate_rows_(std::move(coordinate_rows)),
      constraint_rows_(std::move(constraint_rows)) {}

bool AffineLatticeChart::is_identity() const {
  if (rank() != ambient_dim()) return false;
  for (const Int& x : origin_)
    if (sgn(x) != 0) return false;
  return coordinate_rows_ == IntMatrix::identity(ambient_dim());
}

std::optional<IntVector> AffineLatticeChart::coordinates(std::span<const Int> x) const {
  if (x.size() != ambient_dim()) throw InputError("chart: point has wrong dimension");
  IntVector d(x.begin(), x.end());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= origin_[i];
  for (const Int& c : constraint_rows_ * std::span<const Int>(d))
    if (sgn(c) != 0) return std::nullopt;
  return coordinate_rows_ * std::span<const Int>(d);
}

std::optional<RatVector> AffineLatticeChart::coordinates(std::span<const Rat> x) const {
  if (x.size() != ambient_dim()) throw InputError("chart: point has wrong dimension");
  RatVector d(x.begin(), x.end());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= origin_[i];
  for (std::size_t r = 0; r < constraint_rows_.rows(); ++r) {
    Rat s = 0;
    for (std::size_t c = 0; c < d.size(); ++c) s += constraint_rows_(r, c) * d[c];
    if (sgn(s) != 0) return std::nullopt;
  }
  RatVector y(rank());
  for (std::size_t r = 0; r < rank(); ++r)
    for (std::size_t c = 0; c < d.size(); ++c) y[r] += coordinate_rows_(r, c) * d[c];
  return y;
}

IntVector AffineLatticeChart::point(std::span<const Int> y) const {
  if (y.size() != rank()) throw InputError("chart: coordinate vector has wrong length");
  IntVector x = origin_;
  for (std::size_t b = 0; b < basis_.size(); ++b)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[b] * basis_[b][i];
  return x;
}

AffineLatticeChart identity_chart(std::size_t n) {
  std::vector<IntVector> basis(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
  return AffineLatticeChart(IntVector(n), std::move(basis), IntMatrix::identity(n), IntMatrix(0, n));
}

AffineLatticeChart saturated_chart(const std::vector<IntVector>& points) {
  if (points.empty()) throw InputError("saturated_chart: empty point set");
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n) throw InputError("saturated_chart: mixed dimensions");

  const IntVector& origin = points.front();
  IntMatrix diffs_t(n, points.size() - 1);  // differences as columns
  for (std::size_t j = 1; j < points.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) diffs_t(i, j - 1) = points[j][i] - origin[i];

  // U * D^T = H. The rows of U under the zero rows of H span the integer
  // annihilator of the differences; the leading columns of U^{-1} then form
  // a basis of the saturated lattice, and (U x)_{<r} are x's coordinates in it.
  const HermiteForm hnf = hermite_normal_form(diffs_t);
  std::size_t r = 0;
  while (r < n) {
    bool zero = true;
    for (std::size_t c = 0; c < hnf.H.cols() && zero; ++c) zero = sgn(hnf.H(r, c)) == 0;
    if (zero) break;
    ++r;
  }
  if (r == n) return identity_chart(n);

  const IntMatrix inverse = unimodular_inverse(hnf.U);
  std::vector<IntVector> basis;
  basis.reserve(r);
  for (std::size_t b = 0; b < r; ++b) basis.push_back(inverse.column(b));
  IntMatrix coords(r, n), constraints(n - r, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      if (i < r)
        coords(i, c) = hnf.U(i, c);
      else
        constraints(i - r, c) = hnf.U(i, c);
    }
  return AffineLatticeChart(origin, std::move(basis), std::move(coords), std::move(constraints));
}

Int lattice_index(const std::vector<IntVector>& points) {
  const AffineLatticeChart chart = saturated_chart(points);
  if (chart.rank() == 0) return 1;
  std::vector<IntVector> rows;
  for (std::size_t j = 1; j < points.size(); ++j) rows.push_back(*chart.coordinates(points[j]));
  Int index = 1;
  for (const Int& d : elementary_divisors(IntMatrix::from_rows(rows, chart.rank()))) index *= d;
  return index;
}

Int factorial(long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(std::max(0L, n)));
  return f;
}

Int generalized_binomial(const Int& t, long k) {
  if (k < 0) return 0;
  if (sgn(t) >= 0 && t.fits_ulong_p()) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), t.get_ui(), static_cast<unsigned long>(k));
    return r;
  }
  // mpz_bin_ui handles negative t via the falling factorial.
  Int r;
  mpz_bin_ui(r.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(std::span<const Int> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace polydefect
