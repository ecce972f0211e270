#include "torat/exact.hpp"

#include <algorithm>
#include <sstream>

namespace torat {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// row(i) += c * row(k), applied to h (and mirrored into u by callers).
void row_axpy(IntMatrix& m, std::size_t i, std::size_t k, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += c * m(k, j);
}

void row_negate(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

void row_swap(IntMatrix& m, std::size_t i, std::size_t k) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(k, j));
}

void col_axpy(IntMatrix& m, std::size_t j, std::size_t k, const Int& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) += c * m(i, k);
}

void col_swap(IntMatrix& m, std::size_t j, std::size_t k) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, j), m(i, k));
}

}  // namespace

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

XGcd xgcd(const Int& a, const Int& b) {
  // Invariant: r0 = s0*a + t0*b and r1 = s1*a + t1*b.
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    s0 -= q * s1;
    t0 -= q * t1;
    std::swap(r0, r1);
    std::swap(s0, s1);
    std::swap(t0, t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw internal_error("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw internal_error("matrix product shape");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator*(const Int& c, const IntMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw internal_error("matrix sum shape");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw internal_error("matrix difference shape");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw internal_error("vstack shape");
  IntMatrix r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw internal_error("hstack shape");
  IntMatrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Int& x = a(i1, j1);
      if (x == 0) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          r(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b(i2, j2);
    }
  return r;
}

std::vector<Int> vec_rowmajor(const IntMatrix& a) {
  std::vector<Int> v;
  v.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

std::string to_string(const IntMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j)
      os << (j ? ", " : "") << a(i, j);
    os << "]" << (i + 1 < a.rows() ? "\n" : "");
  }
  os << "]";
  return os.str();
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HermiteForm f;
  f.h = a;
  f.u = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclidean loop: shrink column c below row r until one entry remains.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (f.h(i, c) != 0 &&
            (best == m || abs_int(f.h(i, c)) < abs_int(f.h(best, c))))
          best = i;
      if (best == m) break;
      if (best != r) {
        row_swap(f.h, r, best);
        row_swap(f.u, r, best);
        f.det_sign = -f.det_sign;
      }
      bool again = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (f.h(i, c) == 0) continue;
        Int q = f.h(i, c) / f.h(r, c);
        row_axpy(f.h, i, r, -q);
        row_axpy(f.u, i, r, -q);
        if (f.h(i, c) != 0) again = true;
      }
      if (!again) break;
    }
    if (r < m && f.h(r, c) != 0) {
      if (f.h(r, c) < 0) {
        row_negate(f.h, r);
        row_negate(f.u, r);
        f.det_sign = -f.det_sign;
      }
      f.pivots.push_back(c);
      ++r;
    }
  }
  // Entries above each pivot into [0, pivot).
  for (std::size_t k = 0; k < f.pivots.size(); ++k) {
    std::size_t c = f.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      Int q = floor_div(f.h(i, c), f.h(k, c));
      row_axpy(f.h, i, k, -q);
      row_axpy(f.u, i, k, -q);
    }
  }
  return f;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm f;
  f.s = a;
  f.u = IntMatrix::identity(m);
  f.v = IntMatrix::identity(n);
  const std::size_t bound = std::min(m, n);
  std::size_t t = 0;
  for (; t < bound; ++t) {
    bool have_pivot = false;
    while (true) {
      // Minimal nonzero entry of the trailing submatrix to (t, t).
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (f.s(i, j) != 0 &&
              (pi == m || abs_int(f.s(i, j)) < abs_int(f.s(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      have_pivot = true;
      if (pi != t) {
        row_swap(f.s, t, pi);
        row_swap(f.u, t, pi);
      }
      if (pj != t) {
        col_swap(f.s, t, pj);
        col_swap(f.v, t, pj);
      }
      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (f.s(i, t) == 0) continue;
        Int q = f.s(i, t) / f.s(t, t);
        row_axpy(f.s, i, t, -q);
        row_axpy(f.u, i, t, -q);
        if (f.s(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (f.s(t, j) == 0) continue;
        Int q = f.s(t, j) / f.s(t, t);
        col_axpy(f.s, j, t, -q);
        col_axpy(f.v, j, t, -q);
        if (f.s(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;
      // Pivot must divide the rest of the submatrix for the chain condition.
      std::size_t oi = m;
      for (std::size_t i = t + 1; i < m && oi == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (f.s(i, j) % f.s(t, t) != 0) {
            oi = i;
            break;
          }
      if (oi == m) break;
      row_axpy(f.s, t, oi, 1);
      row_axpy(f.u, t, oi, 1);
    }
    if (!have_pivot) break;
    if (f.s(t, t) < 0) {
      row_negate(f.s, t);
      row_negate(f.u, t);
    }
  }
  f.rank = t;
  return f;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  HermiteForm f = hermite_normal_form(a);
  const std::size_t rank = f.pivots.size();
  IntMatrix raw(a.rows() - rank, a.rows());
  for (std::size_t i = rank; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) raw(i - rank, j) = f.u(i, j);
  return hermite_normal_form(raw).h;
}

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
  CokernelInvariants q;
  if (a.rows() == 0) {
    q.free_rank = a.cols();
    return q;
  }
  SmithForm f = smith_normal_form(a);
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.s(i, i) > 1) q.factors.push_back(f.s(i, i));
  q.free_rank = a.cols() - f.rank;
  return q;
}

std::string to_string(const CokernelInvariants& q) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < q.factors.size(); ++i)
    os << (i ? ", " : "") << q.factors[i];
  os << "]";
  if (q.free_rank) os << " + Z^" << q.free_rank;
  return os.str();
}

std::optional<LinearSolution> solve(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw internal_error("solve shape");
  IntMatrix at = a.transposed();
  HermiteForm f = hermite_normal_form(at);
  const std::size_t rank = f.pivots.size();
  IntMatrix x(a.cols(), b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    std::vector<Int> rem(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rem[i] = b(i, col);
    std::vector<Int> z(rank);
    for (std::size_t p = 0; p < rank; ++p) {
      std::size_t c = f.pivots[p];
      if (rem[c] % f.h(p, c) != 0) return std::nullopt;
      z[p] = rem[c] / f.h(p, c);
      for (std::size_t j = 0; j < a.rows(); ++j) rem[j] -= z[p] * f.h(p, j);
    }
    if (!std::all_of(rem.begin(), rem.end(),
                     [](const Int& v) { return v == 0; }))
      return std::nullopt;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Int acc = 0;
      for (std::size_t p = 0; p < rank; ++p) acc += z[p] * f.u(p, j);
      x(j, col) = acc;
    }
  }
  LinearSolution sol;
  sol.particular = std::move(x);
  IntMatrix hom(at.rows() - rank, at.rows());
  for (std::size_t i = rank; i < at.rows(); ++i)
    for (std::size_t j = 0; j < at.rows(); ++j) hom(i - rank, j) = f.u(i, j);
  sol.homogeneous = hermite_normal_form(hom).h;
  return sol;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw internal_error("determinant of non-square");
  HermiteForm f = hermite_normal_form(a);
  if (f.pivots.size() < a.rows()) return 0;
  Int d = f.det_sign;
  for (std::size_t i = 0; i < a.rows(); ++i) d *= f.h(i, i);
  return d;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw validation_error("inverse of non-square");
  HermiteForm f = hermite_normal_form(a);
  if (f.h != IntMatrix::identity(a.rows()))
    throw validation_error("matrix is not unimodular");
  return f.u;
}

std::vector<Int> sorted_divisors(const Int& n) {
  if (n <= 0) throw internal_error("divisors of non-positive");
  std::vector<Int> d;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    d.push_back(i);
    if (i * i != n) d.push_back(n / i);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<Int> distinct_prime_factors(const Int& n) {
  std::vector<Int> p;
  Int m = n < 0 ? Int(-n) : n;
  for (Int d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    p.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) p.push_back(m);
  return p;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool RowLattice::add_row(std::vector<Int> v) {
  if (v.size() != dim_) throw internal_error("RowLattice row dimension");
  bool grew = false;
  std::size_t k = 0;
  std::size_t c = 0;
  while (true) {
    while (c < dim_ && v[c] == 0) ++c;
    if (c == dim_) break;
    while (k < rows_.size() && pivots_[k] < c) ++k;
    if (k < rows_.size() && pivots_[k] == c) {
      const Int& p = rows_[k][c];
      if (v[c] % p == 0) {
        Int q = v[c] / p;
        for (std::size_t j = c; j < dim_; ++j) v[j] -= q * rows_[k][j];
      } else {
        XGcd e = xgcd(p, v[c]);
        Int pg = p / e.g, vg = v[c] / e.g;
        std::vector<Int> nr(dim_), nv(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
          nr[j] = e.s * rows_[k][j] + e.t * v[j];
          nv[j] = pg * v[j] - vg * rows_[k][j];
        }
        rows_[k] = std::move(nr);
        v = std::move(nv);
        reduce_above(k);
        grew = true;
      }
    } else {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      rows_.insert(rows_.begin() + k, std::move(v));
      pivots_.insert(pivots_.begin() + k, c);
      reduce_above(k);
      grew = true;
      break;
    }
  }
  return grew;
}

void RowLattice::reduce_above(std::size_t k) {
  // Keeps entries above pivot k small, and the changed row k small against
  // the pivots below it. Growth control only; the echelon shape is unchanged.
  const std::size_t c = pivots_[k];
  for (std::size_t i = 0; i < k; ++i) {
    Int q = floor_div(rows_[i][c], rows_[k][c]);
    if (q == 0) continue;
    for (std::size_t j = c; j < dim_; ++j) rows_[i][j] -= q * rows_[k][j];
  }
  for (std::size_t l = k + 1; l < rows_.size(); ++l) {
    const std::size_t cl = pivots_[l];
    Int q = floor_div(rows_[k][cl], rows_[l][cl]);
    if (q == 0) continue;
    for (std::size_t j = cl; j < dim_; ++j) rows_[k][j] -= q * rows_[l][j];
  }
}

bool RowLattice::contains(std::vector<Int> v) const {
  if (v.size() != dim_) throw internal_error("RowLattice row dimension");
  std::size_t k = 0;
  std::size_t c = 0;
  while (true) {
    while (c < dim_ && v[c] == 0) ++c;
    if (c == dim_) return true;
    while (k < rows_.size() && pivots_[k] < c) ++k;
    if (k == rows_.size() || pivots_[k] != c) return false;
    if (v[c] % rows_[k][c] != 0) return false;
    Int q = v[c] / rows_[k][c];
    for (std::size_t j = c; j < dim_; ++j) v[j] -= q * rows_[k][j];
  }
}

IntMatrix RowLattice::basis() const {
  IntMatrix m(rows_.size(), dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = rows_[i][j];
  return hermite_normal_form(m).h;
}

}  // namespace torat
