#include "tamehecke/affine.hpp"

#include <sstream>
#include <stdexcept>

namespace tamehecke {

namespace {

Int rat_floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }
Int rat_ceil(const Rational& r) { return -floor_div(-r.numerator(), r.denominator()); }

}  // namespace

ExtendedAffineElement ExtendedAffineElement::identity(int rank) {
  return {IntMatrix::identity(rank), IntVec(rank, 0)};
}

ExtendedAffineElement ExtendedAffineElement::translation_by(const IntVec& y) {
  return {IntMatrix::identity(static_cast<int>(y.size())), y};
}

ExtendedAffineElement ExtendedAffineElement::weyl(const WeylElement& w) { return {w, IntVec(w.rows(), 0)}; }

ExtendedAffineElement ExtendedAffineElement::operator*(const ExtendedAffineElement& o) const {
  // w0 t_y0 w0' t_y0' = w0 w0' t_{w0'^{-1} y0 + y0'}
  IntMatrix oinv = integer_inverse(o.linear);
  return {linear * o.linear, add(oinv * translation, o.translation)};
}

ExtendedAffineElement ExtendedAffineElement::inverse() const {
  return {integer_inverse(linear), neg(linear * translation)};
}

bool ExtendedAffineElement::is_identity() const { return linear.is_identity() && is_zero(translation); }

RatVec ExtendedAffineElement::act(const RatVec& x) const {
  return linear * add(x, to_rational(translation));
}

std::strong_ordering operator<=>(const ExtendedAffineElement& a, const ExtendedAffineElement& b) {
  if (auto c = a.linear <=> b.linear; c != 0) return c;
  return a.translation <=> b.translation;
}

AffineMap AffineMap::from(const ExtendedAffineElement& w) { return {w.linear, to_rational(w.translation)}; }

AffineMap AffineMap::translation_by(const RatVec& v) {
  return {IntMatrix::identity(static_cast<int>(v.size())), v};
}

AffineMap AffineMap::operator*(const AffineMap& o) const {
  IntMatrix oinv = integer_inverse(o.linear);
  return {linear * o.linear, add(oinv * translation, o.translation)};
}

AffineMap AffineMap::inverse() const {
  RatVec t = linear * translation;
  for (auto& v : t) v = -v;
  return {integer_inverse(linear), t};
}

RatVec AffineMap::act(const RatVec& x) const { return linear * add(x, translation); }

ExtendedAffineElement AffineMap::to_element() const {
  auto t = to_integer(translation);
  if (!t) throw std::domain_error("affine map has a non-integral translation");
  return {linear, *t};
}

AffineRoot affine_action(const RootDatum& d, const ExtendedAffineElement& w, const AffineRoot& a) {
  return {weyl_root_image(d, w.linear, a.root), a.offset - d.pair_root(a.root, w.translation)};
}

AffineRoot affine_action(const RootDatum& d, const AffineMap& w, const AffineRoot& a) {
  Rational k = Rational(a.offset) - d.pair_root(a.root, w.translation);
  if (k.denominator() != 1) throw std::domain_error("affine map does not preserve integral affine roots");
  return {weyl_root_image(d, w.linear, a.root), k.numerator()};
}

Rational evaluate(const RootDatum& d, const AffineRoot& a, const RatVec& x) {
  return d.pair_root(a.root, x) + Rational(a.offset);
}

bool is_positive(const RootDatum& d, const AffineRoot& a) {
  return a.offset > 0 || (a.offset == 0 && d.is_positive(a.root));
}

AffineRoot negate(const RootDatum& d, const AffineRoot& a) { return {d.negative_of(a.root), -a.offset}; }

ExtendedAffineElement affine_reflection(const RootDatum& d, const AffineRoot& a) {
  return {reflection(d, a.root), scale(a.offset, d.coroot(a.root))};
}

OffsetRange inversion_range(const RootDatum& d, const ExtendedAffineElement& w, int root) {
  // alpha+k > 0 iff k >= lo; w(alpha+k) = w0 alpha + k - <alpha,y0> < 0 iff k <= hi.
  OffsetRange r;
  r.lo = d.is_positive(root) ? 0 : 1;
  int img = weyl_root_image(d, w.linear, root);
  r.hi = d.pair_root(root, w.translation) + (d.is_positive(img) ? -1 : 0);
  return r;
}

std::vector<AffineRoot> n_set(const RootDatum& d, const ExtendedAffineElement& w) {
  std::vector<AffineRoot> out;
  for (int i = 0; i < d.num_roots(); ++i) {
    OffsetRange r = inversion_range(d, w, i);
    for (Int k = r.lo; k <= r.hi; ++k) out.push_back({i, k});
  }
  return out;
}

Int length(const RootDatum& d, const ExtendedAffineElement& w) {
  Int l = 0;
  for (int i = 0; i < d.num_roots(); ++i) l += inversion_range(d, w, i).size();
  return l;
}

RatVec alcove_point(const RootDatum& d) {
  const int r = d.num_simple();
  if (r == 0) return RatVec(d.rank(), Rational(0));
  Rational eps(1, d.max_height() + 1);
  std::vector<RatVec> A(r, RatVec(d.rank()));
  for (int k = 0; k < r; ++k) A[k] = to_rational(d.root_functional(d.simple(k)));
  auto x = solve_rational(A, RatVec(r, eps));
  if (!x) throw std::domain_error("simple roots are not independent");
  return *x;
}

Int separating_walls(const RootDatum& d, const RatVec& x, const RatVec& y) {
  Int count = 0;
  for (int i : d.positive_roots()) {
    Rational a = d.pair_root(i, x), b = d.pair_root(i, y);
    if (a == b) continue;
    Rational lo = a < b ? a : b, hi = a < b ? b : a;
    count += rat_ceil(hi) - rat_floor(lo) - 1;
  }
  return count;
}

Int length_by_walls(const RootDatum& d, const ExtendedAffineElement& w) {
  RatVec x0 = alcove_point(d);
  return separating_walls(d, x0, w.act(x0));
}

std::vector<AffineRoot> simple_affine_roots(const RootDatum& d) {
  std::vector<AffineRoot> out;
  for (int s : d.simple_indices()) out.push_back({s, 0});
  for (int t : d.highest_roots()) out.push_back({d.negative_of(t), 1});
  return out;
}

std::string to_string(const RootDatum& d, const AffineRoot& a) {
  std::string s = d.label(a.root);
  if (a.offset > 0) s += "+" + std::to_string(a.offset);
  if (a.offset < 0) s += std::to_string(a.offset);
  return s;
}

std::string to_string(const ExtendedAffineElement& w) {
  std::ostringstream os;
  os << "(" << w.linear << "," << to_string(w.translation) << ")";
  return os.str();
}

}  // namespace tamehecke
