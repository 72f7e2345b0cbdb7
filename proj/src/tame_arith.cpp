#include "tamehecke/tame_arith.hpp"

#include <stdexcept>
#include <string>

namespace tamehecke {

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

TameField::TameField(Int p, Int f, Int n, Int eps_power) : p_(p), f_(f), q_(1), n_(n), eps_power_(eps_power) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (f < 1) throw std::invalid_argument("f must be positive");
  if (n < 1) throw std::invalid_argument("n must be positive");
  for (Int i = 0; i < f; ++i) {
    if (q_ > (Int{1} << 40) / p) throw std::invalid_argument("q = p^f is too large");
    q_ *= p;
  }
  if (n % p == 0) throw std::invalid_argument("p | n: p = " + std::to_string(p) + " divides n = " + std::to_string(n));
  if ((q_ - 1) % n != 0)
    throw std::invalid_argument("n does not divide q-1: n = " + std::to_string(n) + ", q = " + std::to_string(q_));
  if (gcd(mod(eps_power, n), n) != 1) throw std::invalid_argument("embedding power must be a unit mod n");
}

FieldElt TameField::minus_one() const { return {0, q_ % 2 == 1 ? (q_ - 1) / 2 : 0}; }

FieldElt TameField::mul(const FieldElt& a, const FieldElt& b) const {
  return {a.valuation + b.valuation, mod(a.unit_exp + b.unit_exp, q_ - 1)};
}

FieldElt TameField::inv(const FieldElt& a) const { return {-a.valuation, mod(-a.unit_exp, q_ - 1)}; }

FieldElt TameField::normalize(const FieldElt& a) const { return {a.valuation, mod(a.unit_exp, q_ - 1)}; }

RootOfUnity TameField::hilbert(const FieldElt& a, const FieldElt& b) const {
  const Int qm1 = q_ - 1;
  Int e = mod(a.valuation * b.valuation, qm1) * minus_one().unit_exp;
  e += mod(a.unit_exp, qm1) * mod(b.valuation, qm1);
  e -= mod(b.unit_exp, qm1) * mod(a.valuation, qm1);
  return {mod(mod(e, qm1) * mu_step(), qm1)};
}

bool TameField::in_mu_n(const RootOfUnity& z) const { return mod(z.exp * n_, q_ - 1) == 0; }

RootOfUnity TameField::eps(const RootOfUnity& z) const {
  if (!in_mu_n(z)) throw std::domain_error("value is not an n-th root of unity");
  return {mod(z.exp * eps_power_, q_ - 1)};
}

RootOfUnity unit_char_eval(const TameField& field, Int m, const FieldElt& x) {
  if (x.valuation != 0) throw std::domain_error("unit_char_eval needs a unit argument");
  return {mod(mod(m, field.unit_order()) * mod(x.unit_exp, field.unit_order()), field.unit_order())};
}

}  // namespace tamehecke
