#pragma once

// Residue-field arithmetic in exponent form. F^x is modelled modulo 1 + p_F:
// an element is (valuation, exponent of a fixed generator g of the residue
// field units). Roots of unity and character values are exponents mod q-1.

#include "tamehecke/lattice.hpp"

namespace tamehecke {

struct FieldElt {
  Int valuation = 0;
  Int unit_exp = 0;
  friend bool operator==(const FieldElt&, const FieldElt&) = default;
};

/// Exponent of g, read mod q-1. Members of mu_n have exp * n = 0 mod q-1.
struct RootOfUnity {
  Int exp = 0;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

class TameField {
 public:
  /// eps_power selects the embedding zeta -> zeta^eps_power (1 is the standard one).
  TameField(Int p, Int f, Int n, Int eps_power = 1);

  Int p() const { return p_; }
  Int f() const { return f_; }
  Int q() const { return q_; }
  Int n() const { return n_; }
  Int unit_order() const { return q_ - 1; }
  /// (q-1)/n, the g-exponent of a generator of mu_n.
  Int mu_step() const { return (q_ - 1) / n_; }

  FieldElt uniformizer() const { return {1, 0}; }
  FieldElt generator() const { return {0, 1}; }
  FieldElt minus_one() const;
  FieldElt one() const { return {0, 0}; }
  FieldElt mul(const FieldElt& a, const FieldElt& b) const;
  FieldElt inv(const FieldElt& a) const;
  FieldElt normalize(const FieldElt& a) const;

  /// Tame n-th Hilbert symbol [(-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)}]^{(q-1)/n} (reduced).
  RootOfUnity hilbert(const FieldElt& a, const FieldElt& b) const;
  /// The fixed embedding mu_n -> C^x in exponent form.
  RootOfUnity eps(const RootOfUnity& z) const;
  bool in_mu_n(const RootOfUnity& z) const;
  RootOfUnity reduce(const RootOfUnity& z) const { return {mod(z.exp, q_ - 1)}; }

 private:
  Int p_, f_, q_, n_, eps_power_;
};

/// m * unit_exp(x) mod q-1; x must be a unit.
RootOfUnity unit_char_eval(const TameField& field, Int m, const FieldElt& x);

bool is_prime(Int p);

}  // namespace tamehecke
