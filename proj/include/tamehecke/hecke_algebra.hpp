#pragma once

// The Hecke algebra of W_chi in the normalized e_w basis: e_a^2 = 1 + c e_a
// with c = q^{1/2} - q^{-1/2} for a in Delta_chi, e_a e_w = e_{s_a w} when
// w^{-1} a > 0, and e_omega e_w = e_{omega w} for omega in Omega_chi.

#include "tamehecke/chi_geometry.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tamehecke {

/// Integer Laurent polynomial in s = q^{1/2}: exponent -> coefficient.
class Laurent {
 public:
  Laurent() = default;
  Laurent(Int c);  // NOLINT(google-explicit-constructor)
  static Laurent monomial(Int exp, Int coeff = 1);
  /// q^{1/2} - q^{-1/2}.
  static Laurent quadratic_parameter();

  const std::map<Int, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);

  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  void set(Int exp, Int coeff);
  std::map<Int, Int> terms_;
};

std::string to_string(const Laurent& l);

/// a + b sqrt(q) with rational a, b.
struct QuadraticNumber {
  Rational rational = 0;
  Rational sqrt_part = 0;
  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;
};

/// Evaluates at q (q > 0); exact, with sqrt(q) folded in when q is a rational square.
QuadraticNumber specialize(const Laurent& l, const Rational& q);

class HeckeElement {
 public:
  using Terms = std::map<ExtendedAffineElement, Laurent>;
  HeckeElement() = default;
  static HeckeElement basis(const ExtendedAffineElement& w, Laurent coeff = Laurent(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coefficient(const ExtendedAffineElement& w) const;

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement scaled(const Laurent& c) const;
  void add_term(const ExtendedAffineElement& w, const Laurent& c);

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  Terms terms_;
};

std::string to_string(const HeckeElement& x);

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const ChiGeometry& geometry) : geo_(&geometry) {}

  const ChiGeometry& geometry() const { return *geo_; }

  HeckeElement identity() const;
  /// e_w; throws std::domain_error if w is not in W_chi.
  HeckeElement e(const ExtendedAffineElement& w) const;
  HeckeElement e_simple(const AffineRoot& a) const;

  HeckeElement mul(const HeckeElement& x, const HeckeElement& y) const;
  /// e_a^{-1} = e_a - c for a in Delta_chi.
  HeckeElement invert_simple(const AffineRoot& a) const;
  /// e_omega^{-1} = e_{omega^{-1}} for omega in Omega_chi.
  HeckeElement invert_omega(const ExtendedAffineElement& omega) const;

  /// Support lies in W_{chi,ex}.
  bool in_subalgebra_ex(const HeckeElement& x) const;
  /// Terms of x supported on W_{chi,ex}.
  HeckeElement restrict_to_ex(const HeckeElement& x) const;

  /// Coefficient-wise evaluation at a rational value of q; vanishing terms are dropped.
  std::map<ExtendedAffineElement, QuadraticNumber> specialize_q(const HeckeElement& x, const Rational& q) const;

 private:
  void check_key(const ExtendedAffineElement& w) const;
  /// e_a * x for a in Delta_chi.
  HeckeElement left_simple(const AffineRoot& a, const HeckeElement& x) const;
  const ChiGeometry* geo_;
};

struct RelationOptions {
  std::uint64_t seed = 1;
  int word_length = 5;
  int associativity_samples = 300;
  int one_sided_samples = 50;
};

/// Outcome of one relation family: number of instances checked and the first failure.
struct RelationCheck {
  std::string name;
  int checked = 0;
  bool ok = true;
  std::string witness;
};

/// Quadratic, one-sided, braid, associativity and invertibility checks.
std::vector<RelationCheck> verify_relations(const HeckeAlgebra& h, const RelationOptions& opts = {});

}  // namespace tamehecke
