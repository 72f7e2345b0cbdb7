#include "tamehecke/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tamehecke {

namespace {

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

// x*a + y*b = g with g = gcd(a, b) >= 0.
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

// col_c <- x*col_c + y*col_k ; col_k <- u*col_c + v*col_k (old values).
void column_combine(IntMatrix& M, int c, int k, Int x, Int y, Int u, Int v) {
  for (int i = 0; i < M.rows(); ++i) {
    Int a = M.at(i, c), b = M.at(i, k);
    M.at(i, c) = checked_add(checked_mul(x, a), checked_mul(y, b));
    M.at(i, k) = checked_add(checked_mul(u, a), checked_mul(v, b));
  }
}

// col_j -= f * col_c
void column_subtract(IntMatrix& M, int j, int c, Int f) {
  if (f == 0) return;
  for (int i = 0; i < M.rows(); ++i) M.at(i, j) = checked_add(M.at(i, j), -checked_mul(f, M.at(i, c)));
}

void column_negate(IntMatrix& M, int c) {
  for (int i = 0; i < M.rows(); ++i) M.at(i, c) = -M.at(i, c);
}

}  // namespace

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int floor_div(Int a, Int m) {
  Int q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Rational dot(const IntVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], -b[i]);
  return r;
}

IntVec neg(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVec scale(Int c, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
  return r;
}

RatVec to_rational(const IntVec& a) { return RatVec(a.begin(), a.end()); }

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::optional<IntVec> to_integer(const RatVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].denominator() != 1) return std::nullopt;
    r[i] = a[i].numerator();
  }
  return r;
}

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

IntMatrix::IntMatrix(int rows, int cols, Int fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

IntMatrix::IntMatrix(const std::vector<IntVec>& rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols, int rows) {
  IntMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMatrix::row(int i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

IntVec IntMatrix::column(int j) const {
  IntVec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<IntVec> IntMatrix::columns() const {
  std::vector<IntVec> out;
  for (int j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Int a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) = checked_add(r.at(i, j), checked_mul(a, o.at(k, j)));
    }
  return r;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  IntVec r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] = checked_add(r[i], checked_mul(at(i, j), v[j]));
  return r;
}

RatVec IntMatrix::operator*(const RatVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  RatVec r(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += Rational(at(i, j)) * v[j];
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = checked_add(data_[i], o.data_[i]);
  return r;
}

bool IntMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return a.data_ <=> b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << to_string(m.row(i));
  }
  return os << ']';
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const RatVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "]";
}

HermiteResult hermite_column(const IntMatrix& A) {
  HermiteResult res{A, IntMatrix::identity(A.cols()), 0, {}};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  int col = 0;
  for (int i = 0; i < H.rows() && col < H.cols(); ++i) {
    for (int k = col + 1; k < H.cols(); ++k) {
      Int b = H.at(i, k);
      if (b == 0) continue;
      Int a = H.at(i, col);
      Int x, y;
      Int g = ext_gcd(a, b, x, y);
      Int u = -b / g, v = a / g;
      column_combine(H, col, k, x, y, u, v);
      column_combine(U, col, k, x, y, u, v);
    }
    Int piv = H.at(i, col);
    if (piv == 0) continue;
    if (piv < 0) {
      column_negate(H, col);
      column_negate(U, col);
      piv = -piv;
    }
    for (int j = 0; j < col; ++j) {
      Int f = floor_div(H.at(i, j), piv);
      column_subtract(H, j, col, f);
      column_subtract(U, j, col, f);
    }
    res.pivot_rows.push_back(i);
    ++col;
  }
  res.rank = col;
  return res;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  HermiteResult h = hermite_column(generators);
  IntMatrix out(generators.rows(), h.rank);
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < h.rank; ++j) out.at(i, j) = h.H.at(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& A) {
  HermiteResult h = hermite_column(A);
  IntMatrix out(A.cols(), A.cols() - h.rank);
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out.at(i, j) = h.U.at(i, h.rank + j);
  return out;
}

std::optional<IntVec> solve_integer(const IntMatrix& A, const IntVec& b) {
  if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  HermiteResult h = hermite_column(A);
  IntVec z(A.cols(), 0);
  int k = 0;
  for (int i = 0; i < A.rows(); ++i) {
    Int s = b[i];
    for (int j = 0; j < k; ++j) s = checked_add(s, -checked_mul(h.H.at(i, j), z[j]));
    if (k < h.rank && h.pivot_rows[k] == i) {
      if (s % h.H.at(i, k) != 0) return std::nullopt;
      z[k] = s / h.H.at(i, k);
      ++k;
    } else if (s != 0) {
      return std::nullopt;
    }
  }
  return h.U * z;
}

std::optional<RatVec> solve_rational(const std::vector<RatVec>& A, const RatVec& b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  std::vector<RatVec> M(m);
  for (std::size_t i = 0; i < m; ++i) {
    M[i] = A[i];
    M[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    Rational inv = Rational(1) / M[r][c];
    for (auto& x : M[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (std::size_t j = c; j <= n; ++j) M[i][j] -= f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (M[i][n] != 0) return std::nullopt;
  RatVec x(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = M[i][n];
  return x;
}

std::vector<RatVec> rational_inverse(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("rational_inverse: matrix not square");
  const int n = A.rows();
  std::vector<RatVec> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = to_rational(A.row(i));
  std::vector<RatVec> cols(n, RatVec(n));
  for (int j = 0; j < n; ++j) {
    RatVec e(n, Rational(0));
    e[j] = 1;
    auto x = solve_rational(rows, e);
    if (!x) throw std::domain_error("rational_inverse: singular matrix");
    cols[j] = *x;
  }
  // Verify the solution is unique (full rank).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int k = 0; k < n; ++k) s += cols[k][i] * Rational(A.at(k, j));
      if (s != (i == j ? 1 : 0)) throw std::domain_error("rational_inverse: singular matrix");
    }
  std::vector<RatVec> inv(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = cols[j][i];
  return inv;
}

IntMatrix integer_inverse(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("integer_inverse: matrix not square");
  // For unimodular A the column Hermite form is the identity and U = A^{-1}.
  HermiteResult h = hermite_column(A);
  if (h.rank != A.rows() || !h.H.is_identity()) throw std::domain_error("integer_inverse: matrix is not unimodular");
  return h.U;
}

QuotientLattice::QuotientLattice(IntMatrix hermite_basis) : basis_(std::move(hermite_basis)) {
  if (basis_.rows() != basis_.cols()) throw std::invalid_argument("quotient lattice basis must be square");
  for (int i = 0; i < basis_.rows(); ++i) {
    if (basis_.at(i, i) <= 0) throw std::invalid_argument("quotient lattice basis must have positive diagonal");
    for (int j = i + 1; j < basis_.cols(); ++j)
      if (basis_.at(i, j) != 0) throw std::invalid_argument("quotient lattice basis must be lower triangular");
  }
}

Int QuotientLattice::index() const {
  Int d = 1;
  for (int i = 0; i < basis_.rows(); ++i) d = checked_mul(d, basis_.at(i, i));
  return d;
}

IntVec QuotientLattice::reduce(const IntVec& y) const {
  IntVec r = y;
  for (int j = 0; j < basis_.cols(); ++j) {
    Int f = floor_div(r[j], basis_.at(j, j));
    if (f == 0) continue;
    for (int i = j; i < basis_.rows(); ++i) r[i] = checked_add(r[i], -checked_mul(f, basis_.at(i, j)));
  }
  return r;
}

std::vector<IntVec> QuotientLattice::representatives() const {
  std::vector<IntVec> out;
  const int r = rank();
  IntVec cur(r, 0);
  if (r == 0) return {cur};
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0) {
      if (++cur[i] < basis_.at(i, i)) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

IntVec QuotientLattice::coordinates(const IntVec& y) const {
  IntVec r = y;
  IntVec c(basis_.cols(), 0);
  for (int j = 0; j < basis_.cols(); ++j) {
    if (r[j] % basis_.at(j, j) != 0) throw std::domain_error("vector is not in the sublattice");
    c[j] = r[j] / basis_.at(j, j);
    for (int i = j; i < basis_.rows(); ++i) r[i] = checked_add(r[i], -checked_mul(c[j], basis_.at(i, j)));
  }
  if (!is_zero(r)) throw std::domain_error("vector is not in the sublattice");
  return c;
}

}  // namespace tamehecke
