#include "tamehecke/hecke_algebra.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace tamehecke {

namespace {

// Exact square root of a nonnegative rational, if it exists.
std::optional<Rational> rational_sqrt(const Rational& q) {
  auto isqrt = [](Int n) -> std::optional<Int> {
    if (n < 0) return std::nullopt;
    Int r = static_cast<Int>(std::llround(std::sqrt(static_cast<long double>(n))));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) return std::nullopt;
    return r;
  };
  auto a = isqrt(q.numerator());
  auto b = isqrt(q.denominator());
  if (!a || !b) return std::nullopt;
  return Rational(*a, *b);
}

Rational rpow(const Rational& x, Int e) {
  Rational r = 1;
  Rational b = e < 0 ? Rational(1) / x : x;
  for (Int i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
  return r;
}

}  // namespace

Laurent::Laurent(Int c) {
  if (c != 0) terms_[0] = c;
}

Laurent Laurent::monomial(Int exp, Int coeff) {
  Laurent l;
  l.set(exp, coeff);
  return l;
}

Laurent Laurent::quadratic_parameter() { return monomial(1) - monomial(-1); }

void Laurent::set(Int exp, Int coeff) {
  if (coeff == 0)
    terms_.erase(exp);
  else
    terms_[exp] = coeff;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    set(e, (it == terms_.end() ? 0 : it->second) + c);
  }
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r += monomial(e1 + e2, c1 * c2);
  return r;
}

std::string to_string(const Laurent& l) {
  if (l.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : l.terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Int a = c < 0 ? -c : c;
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += e == 1 ? "s" : "s^" + std::to_string(e);
  }
  return s;
}

QuadraticNumber specialize(const Laurent& l, const Rational& q) {
  if (q <= 0) throw std::domain_error("q must be positive");
  QuadraticNumber out;
  auto root = rational_sqrt(q);
  for (const auto& [e, c] : l.terms()) {
    if (root) {
      out.rational += Rational(c) * rpow(*root, e);
    } else if (e % 2 == 0) {
      out.rational += Rational(c) * rpow(q, e / 2);
    } else {
      // s^e = q^{(e-1)/2} sqrt(q)
      out.sqrt_part += Rational(c) * rpow(q, floor_div(e - 1, 2));
    }
  }
  return out;
}

HeckeElement HeckeElement::basis(const ExtendedAffineElement& w, Laurent coeff) {
  HeckeElement x;
  x.add_term(w, coeff);
  return x;
}

Laurent HeckeElement::coefficient(const ExtendedAffineElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent() : it->second;
}

void HeckeElement::add_term(const ExtendedAffineElement& w, const Laurent& c) {
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const { return *this + o.scaled(Laurent(-1)); }

HeckeElement HeckeElement::scaled(const Laurent& c) const {
  HeckeElement r;
  for (const auto& [w, x] : terms_) r.add_term(w, x * c);
  return r;
}

std::string to_string(const HeckeElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")e" + to_string(w);
  }
  return s;
}

void HeckeAlgebra::check_key(const ExtendedAffineElement& w) const {
  if (!geo_->in_wchi(w)) throw std::domain_error("basis key " + to_string(w) + " lies outside W_chi");
}

HeckeElement HeckeAlgebra::identity() const {
  return HeckeElement::basis(ExtendedAffineElement::identity(geo_->datum().rank()));
}

HeckeElement HeckeAlgebra::e(const ExtendedAffineElement& w) const {
  check_key(w);
  return HeckeElement::basis(w);
}

HeckeElement HeckeAlgebra::e_simple(const AffineRoot& a) const {
  return e(affine_reflection(geo_->datum(), a));
}

HeckeElement HeckeAlgebra::left_simple(const AffineRoot& a, const HeckeElement& x) const {
  const auto& d = geo_->datum();
  const ExtendedAffineElement s = affine_reflection(d, a);
  const Laurent c = Laurent::quadratic_parameter();
  HeckeElement out;
  for (const auto& [z, coeff] : x.terms()) {
    AffineRoot pre = affine_action(d, z.inverse(), a);
    out.add_term(s * z, coeff);
    if (!is_positive(d, pre)) out.add_term(z, coeff * c);
  }
  return out;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& x, const HeckeElement& y) const {
  for (const auto& [w, c] : y.terms()) check_key(w);
  HeckeElement out;
  for (const auto& [w, coeff] : x.terms()) {
    Decomposition dec = geo_->decompose(w);
    HeckeElement acc;
    for (const auto& [z, cz] : y.terms()) acc.add_term(dec.omega * z, cz);
    for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it) acc = left_simple(*it, acc);
    out = out + acc.scaled(coeff);
  }
  return out;
}

HeckeElement HeckeAlgebra::invert_simple(const AffineRoot& a) const {
  bool simple = false;
  for (const auto& b : geo_->delta_chi()) simple = simple || b == a;
  if (!simple) throw std::domain_error("invert_simple needs a root in Delta_chi");
  return e_simple(a) - identity().scaled(Laurent::quadratic_parameter());
}

HeckeElement HeckeAlgebra::invert_omega(const ExtendedAffineElement& omega) const {
  if (!geo_->in_omega(omega)) throw std::domain_error("invert_omega needs an element of Omega_chi");
  return e(omega.inverse());
}

bool HeckeAlgebra::in_subalgebra_ex(const HeckeElement& x) const {
  for (const auto& [w, c] : x.terms())
    if (!geo_->in_wchi_ex(w)) return false;
  return true;
}

HeckeElement HeckeAlgebra::restrict_to_ex(const HeckeElement& x) const {
  HeckeElement out;
  for (const auto& [w, c] : x.terms())
    if (geo_->in_wchi_ex(w)) out.add_term(w, c);
  return out;
}

std::map<ExtendedAffineElement, QuadraticNumber> HeckeAlgebra::specialize_q(const HeckeElement& x,
                                                                           const Rational& q) const {
  std::map<ExtendedAffineElement, QuadraticNumber> out;
  for (const auto& [w, c] : x.terms()) {
    QuadraticNumber v = specialize(c, q);
    if (v != QuadraticNumber{0, 0}) out[w] = v;
  }
  return out;
}

std::vector<RelationCheck> verify_relations(const HeckeAlgebra& h, const RelationOptions& opts) {
  const ChiGeometry& g = h.geometry();
  const RootDatum& d = g.datum();
  const Laurent c = Laurent::quadratic_parameter();
  const HeckeElement one = h.identity();
  std::mt19937_64 rng(opts.seed);
  std::vector<RelationCheck> out;
  auto record = [](RelationCheck& r, bool pass, const std::string& witness) {
    ++r.checked;
    if (!pass && r.ok) {
      r.ok = false;
      r.witness = witness;
    }
  };

  RelationCheck quad;
  quad.name = "quadratic";
  for (const auto& a : g.delta_chi()) {
    HeckeElement ea = h.e_simple(a);
    record(quad, h.mul(ea, ea) == one + ea.scaled(c), to_string(d, a));
  }
  out.push_back(quad);

  RelationCheck left;
  left.name = "simple_left";
  RelationCheck omega_left;
  omega_left.name = "omega_left";
  for (int i = 0; i < opts.one_sided_samples; ++i) {
    ExtendedAffineElement w = random_word_element(g, rng, opts.word_length);
    for (const auto& a : g.delta_chi()) {
      if (!is_positive(d, affine_action(d, w.inverse(), a))) continue;
      record(left, h.mul(h.e_simple(a), h.e(w)) == h.e(affine_reflection(d, a) * w),
             to_string(d, a) + " * " + to_string(w));
    }
    for (const auto& om : g.omega_generators())
      record(omega_left, h.mul(h.e(om), h.e(w)) == h.e(om * w), to_string(om) + " * " + to_string(w));
  }
  out.push_back(left);
  out.push_back(omega_left);

  RelationCheck braid;
  braid.name = "braid";
  const auto& delta = g.delta_chi();
  for (std::size_t i = 0; i < delta.size(); ++i)
    for (std::size_t j = i + 1; j < delta.size(); ++j) {
      int m = g.coxeter_matrix()[i][j];
      if (m == 0) continue;
      HeckeElement x = one, y = one;
      for (int k = 0; k < m; ++k) {
        x = h.mul(x, h.e_simple(delta[(k % 2) ? j : i]));
        y = h.mul(y, h.e_simple(delta[(k % 2) ? i : j]));
      }
      record(braid, x == y, to_string(d, delta[i]) + ", " + to_string(d, delta[j]));
    }
  out.push_back(braid);

  RelationCheck assoc;
  assoc.name = "associativity";
  for (int i = 0; i < opts.associativity_samples; ++i) {
    HeckeElement x = h.e(random_word_element(g, rng, opts.word_length));
    HeckeElement y = h.e(random_word_element(g, rng, opts.word_length));
    HeckeElement z = h.e(random_word_element(g, rng, opts.word_length));
    record(assoc, h.mul(h.mul(x, y), z) == h.mul(x, h.mul(y, z)),
           to_string(x) + " | " + to_string(y) + " | " + to_string(z));
  }
  out.push_back(assoc);

  RelationCheck inv;
  inv.name = "invertibility";
  for (const auto& a : delta) {
    HeckeElement ea = h.e_simple(a), ia = h.invert_simple(a);
    record(inv, h.mul(ea, ia) == one && h.mul(ia, ea) == one, to_string(d, a));
  }
  for (const auto& om : g.omega_generators()) {
    HeckeElement eo = h.e(om), io = h.invert_omega(om);
    record(inv, h.mul(eo, io) == one && h.mul(io, eo) == one, to_string(om));
  }
  out.push_back(inv);
  return out;
}

}  // namespace tamehecke
