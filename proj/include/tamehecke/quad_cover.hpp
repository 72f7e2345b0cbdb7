#pragma once

// Weyl-invariant quadratic data (D, Q, B_Q, n) of a covering torus and the
// root datum of the principal endoscopy group built on Y_{Q,n}.

#include "tamehecke/root_datum.hpp"

namespace tamehecke {

struct EndoscopicDatum {
  /// Columns span Y_{Q,n} inside Y (lower-triangular Hermite form).
  IntMatrix lattice_basis;
  /// Root datum on Y_{Q,n} with coroots n_alpha alpha^vee and roots alpha / n_alpha,
  /// coordinates taken in lattice_basis (X_{Q,n} uses the dual basis).
  /// Root indices agree with the ambient datum.
  RootDatum datum_Qn;
};

class QuadraticCover {
 public:
  QuadraticCover() = default;
  /// Throws std::invalid_argument if Q is not Weyl invariant or B_Q(y, a^vee) != <a, y> Q(a^vee).
  QuadraticCover(RootDatum datum, IntMatrix D, Int n);

  const RootDatum& datum() const { return datum_; }
  const IntMatrix& D() const { return D_; }
  Int n() const { return n_; }
  int rank() const { return datum_.rank(); }

  Int Q(const IntVec& y) const;
  Int B(const IntVec& y, const IntVec& z) const;
  Int D(const IntVec& y, const IntVec& z) const;
  /// Matrix of B_Q = D + D^T.
  const IntMatrix& B_matrix() const { return B_; }

  Int Q_coroot(int root) const { return Q(datum_.coroot(root)); }
  /// n / gcd(n, Q(alpha^vee)).
  Int n_alpha(int root) const;

  /// Y_{Q,n} = {y : B_Q(y, z) in nZ for all z}.
  const QuotientLattice& yqn() const { return yqn_; }
  const IntMatrix& yqn_basis() const { return yqn_.basis(); }

  EndoscopicDatum endoscopic_datum() const;

 private:
  RootDatum datum_;
  IntMatrix D_;
  IntMatrix B_;
  Int n_ = 1;
  QuotientLattice yqn_;
};

/// The smallest positive integral multiple of sum over positive roots of <alpha, y>^2,
/// scaled by `multiplier`, written as an upper-triangular D.
IntMatrix standard_form(const RootDatum& d, Int multiplier);

/// Basis of {y : B y in nZ^r} in column Hermite form.
IntMatrix lattice_YQn(const IntMatrix& B, Int n);

}  // namespace tamehecke
