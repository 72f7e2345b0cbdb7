#pragma once

// Exact integer and rational linear algebra on small lattices: dense integer
// matrices, column Hermite normal form, integer kernels and integer solving.

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace boost {
// Boost 1.74 rational == int recurses under C++20 rewritten comparisons.
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace tamehecke {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using Rational = boost::rational<Int>;
using RatVec = std::vector<Rational>;

/// Least nonnegative residue of a modulo m (m > 0).
Int mod(Int a, Int m);
/// Floor division for m > 0.
Int floor_div(Int a, Int m);
Int gcd(Int a, Int b);

Int dot(const IntVec& a, const IntVec& b);
Rational dot(const IntVec& a, const RatVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec neg(const IntVec& a);
IntVec scale(Int c, const IntVec& a);
RatVec to_rational(const IntVec& a);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
/// Integer vector if every entry has denominator one.
std::optional<IntVec> to_integer(const RatVec& a);
bool is_zero(const IntVec& a);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, Int fill = 0);
  explicit IntMatrix(const std::vector<IntVec>& rows);

  static IntMatrix identity(int n);
  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<IntVec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Int at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntVec column(int j) const;
  std::vector<IntVec> columns() const;
  IntMatrix transpose() const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntVec operator*(const IntVec& v) const;
  RatVec operator*(const RatVec& v) const;
  IntMatrix operator+(const IntMatrix& other) const;

  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::string to_string(const IntVec& v);
std::string to_string(const Rational& r);
std::string to_string(const RatVec& v);

/// Column-style Hermite reduction: A * U = H where U is unimodular, the first
/// `rank` columns of H are in echelon form (pivot rows strictly increasing,
/// positive pivots, entries left of a pivot reduced into [0, pivot)), and the
/// remaining columns of H are zero.
struct HermiteResult {
  IntMatrix H;
  IntMatrix U;
  int rank = 0;
  std::vector<int> pivot_rows;
};
HermiteResult hermite_column(const IntMatrix& A);

/// Basis (as columns, in Hermite form) of the lattice spanned by the columns.
IntMatrix lattice_basis(const IntMatrix& generators);

/// Basis of {x in Z^n : A x = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& A);

/// Some x in Z^n with A x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMatrix& A, const IntVec& b);

/// Some x in Q^n with A x = b (free variables set to zero), if one exists.
std::optional<RatVec> solve_rational(const std::vector<RatVec>& A, const RatVec& b);

/// Inverse of an invertible integer matrix over Q.
std::vector<RatVec> rational_inverse(const IntMatrix& A);

/// Integer inverse of a unimodular matrix; throws if the inverse is not integral.
IntMatrix integer_inverse(const IntMatrix& A);

/// Full-rank sublattice L of Z^r given by a square lower-triangular Hermite
/// basis; reduces vectors to canonical coset representatives of Z^r / L.
class QuotientLattice {
 public:
  QuotientLattice() = default;
  explicit QuotientLattice(IntMatrix hermite_basis);

  const IntMatrix& basis() const { return basis_; }
  int rank() const { return basis_.rows(); }
  Int index() const;
  IntVec reduce(const IntVec& y) const;
  bool contains(const IntVec& y) const { return is_zero(reduce(y)); }
  /// All canonical representatives, 0 <= y_i < H_ii, in lexicographic order.
  std::vector<IntVec> representatives() const;
  /// Coordinates of a lattice vector in the basis.
  IntVec coordinates(const IntVec& y) const;

 private:
  IntMatrix basis_;
};

}  // namespace tamehecke
