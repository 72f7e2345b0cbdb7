#include "tamehecke/quad_cover.hpp"

#include <stdexcept>

namespace tamehecke {

QuadraticCover::QuadraticCover(RootDatum datum, IntMatrix D, Int n)
    : datum_(std::move(datum)), D_(std::move(D)), n_(n) {
  const int r = datum_.rank();
  if (n_ < 1) throw std::invalid_argument("cover degree n must be positive");
  if (D_.rows() != r || D_.cols() != r) throw std::invalid_argument("D must be a rank x rank matrix");
  B_ = D_ + D_.transpose();
  for (int s : datum_.simple_indices()) {
    WeylElement w = reflection(datum_, s);
    if (w.transpose() * B_ * w != B_) throw std::invalid_argument("Q is not Weyl invariant");
  }
  for (int i = 0; i < datum_.num_roots(); ++i) {
    Int q = Q_coroot(i);
    for (int j = 0; j < r; ++j) {
      IntVec e(r, 0);
      e[j] = 1;
      if (B(e, datum_.coroot(i)) != datum_.pair_root(i, e) * q)
        throw std::invalid_argument("B_Q(y, alpha^vee) != <alpha, y> Q(alpha^vee) for root " + datum_.label(i));
    }
  }
  yqn_ = QuotientLattice(lattice_YQn(B_, n_));
}

Int QuadraticCover::Q(const IntVec& y) const { return dot(y, D_ * y); }

Int QuadraticCover::B(const IntVec& y, const IntVec& z) const { return dot(y, B_ * z); }

Int QuadraticCover::D(const IntVec& y, const IntVec& z) const { return dot(y, D_ * z); }

Int QuadraticCover::n_alpha(int root) const { return n_ / gcd(n_, Q_coroot(root)); }

IntMatrix lattice_YQn(const IntMatrix& B, Int n) {
  const int r = B.rows();
  // Kernel of [B | nI] projected to the first r coordinates.
  IntMatrix M(r, 2 * r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) M.at(i, j) = B.at(i, j);
    M.at(i, r + i) = n;
  }
  IntMatrix K = integer_kernel(M);
  IntMatrix P(r, K.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < K.cols(); ++j) P.at(i, j) = K.at(i, j);
  IntMatrix basis = lattice_basis(P);
  if (basis.cols() != r) throw std::logic_error("Y_{Q,n} is not of full rank");
  return basis;
}

EndoscopicDatum QuadraticCover::endoscopic_datum() const {
  const int r = rank();
  const IntMatrix& Bq = yqn_basis();
  std::vector<IntVec> roots, coroots;
  for (int i = 0; i < datum_.num_roots(); ++i) {
    Int na = n_alpha(i);
    coroots.push_back(yqn_.coordinates(scale(na, datum_.coroot(i))));
    IntVec f(r);
    for (int j = 0; j < r; ++j) {
      Int v = datum_.pair_root(i, Bq.column(j));
      if (v % na != 0) throw std::logic_error("alpha / n_alpha is not integral on Y_{Q,n}");
      f[j] = v / na;
    }
    roots.push_back(f);
  }
  return {Bq, RootDatum(r, roots, coroots, datum_.simple_indices(), IntMatrix::identity(r))};
}

IntMatrix standard_form(const RootDatum& d, Int multiplier) {
  const int r = d.rank();
  IntMatrix B0(r, r);
  for (int i : d.positive_roots()) {
    const IntVec& f = d.root_functional(i);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) B0.at(a, b) += 2 * f[a] * f[b];
  }
  Int g = 0;
  for (int a = 0; a < r; ++a) {
    g = gcd(g, B0.at(a, a) / 2);
    for (int b = a + 1; b < r; ++b) g = gcd(g, B0.at(a, b));
  }
  IntMatrix D(r, r);
  if (g == 0) return D;
  for (int a = 0; a < r; ++a) {
    D.at(a, a) = multiplier * (B0.at(a, a) / 2) / g;
    for (int b = a + 1; b < r; ++b) D.at(a, b) = multiplier * B0.at(a, b) / g;
  }
  return D;
}

}  // namespace tamehecke
