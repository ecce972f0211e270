#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torat/errors.hpp"

namespace torat {

using Int = boost::multiprecision::cpp_int;

// Floor division (cpp_int's operator/ truncates toward zero).
Int floor_div(const Int& a, const Int& b);

// g = s*a + t*b with g = gcd(a, b) >= 0.
struct XGcd {
  Int g, s, t;
};
XGcd xgcd(const Int& a, const Int& b);

// Dense integer matrix, row major. All algebra here is exact; there is no
// floating point anywhere in the library.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Int> row(std::size_t i) const;

  IntMatrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Int& c, const IntMatrix& a);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

// Kronecker product, row major: (a kron b)((i1,i2),(j1,j2)) = a(i1,j1)*b(i2,j2).
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Row-major flattening of a into a single vector of length rows*cols.
std::vector<Int> vec_rowmajor(const IntMatrix& a);

std::string to_string(const IntMatrix& a);

// Row-style Hermite normal form: u*a = h with u unimodular, pivot entries
// positive, entries below a pivot zero and entries above it in [0, pivot).
// pivots[k] is the column of the k-th pivot row; rows of h past pivots.size()
// are zero. det_sign is det(u), always +1 or -1.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivots;
  int det_sign = 1;
};
HermiteForm hermite_normal_form(const IntMatrix& a);

// u*a*v = s with u, v unimodular and s diagonal, s(0,0) | s(1,1) | ...,
// all diagonal entries nonnegative. rank = number of nonzero diagonal entries.
struct SmithForm {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;
};
SmithForm smith_normal_form(const IntMatrix& a);

// Basis of {x : x*a = 0} as rows, in canonical (Hermite) form. The basis is
// complete: every integer row kernel vector is an integer combination of it.
IntMatrix kernel_basis(const IntMatrix& a);

// Invariants of the quotient Z^cols / rowspan(a): the invariant factors
// greater than 1 (in divisibility order) plus the free rank cols - rank(a).
struct CokernelInvariants {
  std::vector<Int> factors;
  std::size_t free_rank = 0;

  bool trivial() const { return factors.empty() && free_rank == 0; }
  friend bool operator==(const CokernelInvariants&,
                         const CokernelInvariants&) = default;
};
CokernelInvariants cokernel_invariants(const IntMatrix& a);
std::string to_string(const CokernelInvariants& q);

// Integer solutions of a*x = b. particular is one solution; the full set is
// particular + transposed combinations of homogeneous, whose rows span
// {y : a*transpose(y) = 0}. nullopt when no integer solution exists.
struct LinearSolution {
  IntMatrix particular;
  IntMatrix homogeneous;
};
std::optional<LinearSolution> solve(const IntMatrix& a, const IntMatrix& b);

Int determinant(const IntMatrix& a);

// Inverse of a matrix with determinant +1 or -1; validation_error otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

// Positive divisors of n in ascending order, and the distinct primes dividing
// n. Trial division; callers only pass group orders.
std::vector<Int> sorted_divisors(const Int& n);
std::vector<Int> distinct_prime_factors(const Int& n);
bool is_prime(const Int& n);

// Incrementally accumulated sublattice of Z^dim, kept as an echelonized row
// basis. Supports fast membership tests while rows stream in; used for the
// divisibility searches where re-running a full Hermite reduction per row
// would be wasteful.
class RowLattice {
 public:
  explicit RowLattice(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Adds the row span of v. Returns true if the lattice grew.
  bool add_row(std::vector<Int> v);

  bool contains(std::vector<Int> v) const;

  // Canonical Hermite basis of the accumulated lattice.
  IntMatrix basis() const;

 private:
  void reduce_above(std::size_t k);

  std::size_t dim_;
  // rows_ sorted by strictly increasing pivot column; pivot entries positive.
  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace torat
