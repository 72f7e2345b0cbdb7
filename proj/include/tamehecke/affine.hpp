#pragma once

// Extended affine Weyl group W_ex = Y x| W acting on V = Y (x) R, affine roots,
// inversion sets, lengths and the fundamental alcove.

#include "tamehecke/root_datum.hpp"

#include <compare>
#include <string>
#include <vector>

namespace tamehecke {

/// The affine function x -> <alpha, x> + offset.
struct AffineRoot {
  int root = 0;
  Int offset = 0;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

/// w = w0 t_{y0}, acting on V by x -> w0 (x + y0).
struct ExtendedAffineElement {
  WeylElement linear;
  IntVec translation;

  static ExtendedAffineElement identity(int rank);
  static ExtendedAffineElement translation_by(const IntVec& y);
  static ExtendedAffineElement weyl(const WeylElement& w);

  ExtendedAffineElement operator*(const ExtendedAffineElement& o) const;
  ExtendedAffineElement inverse() const;
  bool is_identity() const;
  RatVec act(const RatVec& x) const;

  friend bool operator==(const ExtendedAffineElement&, const ExtendedAffineElement&) = default;
  friend std::strong_ordering operator<=>(const ExtendedAffineElement& a, const ExtendedAffineElement& b);
};

/// Affine map x -> A (x + c) with rational translation c (e.g. t_v for v in V).
struct AffineMap {
  WeylElement linear;
  RatVec translation;

  static AffineMap from(const ExtendedAffineElement& w);
  static AffineMap translation_by(const RatVec& v);
  AffineMap operator*(const AffineMap& o) const;
  AffineMap inverse() const;
  RatVec act(const RatVec& x) const;
  /// Throws std::domain_error if the translation part is not integral.
  ExtendedAffineElement to_element() const;
};

AffineRoot affine_action(const RootDatum& d, const ExtendedAffineElement& w, const AffineRoot& a);
/// Action of an affine map with rational translation; the offset must stay integral.
AffineRoot affine_action(const RootDatum& d, const AffineMap& w, const AffineRoot& a);

/// Value of a = alpha + k at a point of V.
Rational evaluate(const RootDatum& d, const AffineRoot& a, const RatVec& x);

bool is_positive(const RootDatum& d, const AffineRoot& a);
AffineRoot negate(const RootDatum& d, const AffineRoot& a);

/// Orthogonal reflection s_{alpha+k} = s_alpha t_{k alpha^vee}.
ExtendedAffineElement affine_reflection(const RootDatum& d, const AffineRoot& a);

/// For root alpha, the offsets k with alpha+k in N(w) form the range [lo, hi].
struct OffsetRange {
  Int lo = 0;
  Int hi = -1;
  Int size() const { return hi >= lo ? hi - lo + 1 : 0; }
};
OffsetRange inversion_range(const RootDatum& d, const ExtendedAffineElement& w, int root);

/// N(w) = {a > 0 : w a < 0}.
std::vector<AffineRoot> n_set(const RootDatum& d, const ExtendedAffineElement& w);

/// l(w) = |N(w)|.
Int length(const RootDatum& d, const ExtendedAffineElement& w);

/// Interior point of A0 with alpha_i(x) = 1/(h+1) for simple roots, h the
/// maximal height, and no component along the center.
RatVec alcove_point(const RootDatum& d);

/// Number of affine hyperplanes separating x and y (both off every wall).
Int separating_walls(const RootDatum& d, const RatVec& x, const RatVec& y);

/// Length as a count of walls separating A0 and w A0.
Int length_by_walls(const RootDatum& d, const ExtendedAffineElement& w);

/// Delta_af = Delta together with -theta+1 for each highest root theta.
std::vector<AffineRoot> simple_affine_roots(const RootDatum& d);

/// Text form "a1+a2+1", "-a1", etc.
std::string to_string(const RootDatum& d, const AffineRoot& a);
/// Text form "w=[[..]] t=[..]".
std::string to_string(const ExtendedAffineElement& w);

}  // namespace tamehecke
