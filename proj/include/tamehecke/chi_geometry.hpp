#pragma once

// Combinatorics attached to a depth-zero genuine character chi: the affine
// root system Phi_{chi,af}, its diamond counterpart, the shift vector v, the
// alcove A_{chi,0} with simple system Delta_chi, and the groups W_chi^0,
// Omega_chi, W_chi and W_{chi,ex}.

#include "tamehecke/affine.hpp"
#include "tamehecke/cover_torus.hpp"

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace tamehecke {

/// A set of affine roots {alpha + residue_alpha + k modulus_alpha : alpha in roots}.
class AffineSystem {
 public:
  struct Class {
    Int residue = 0;
    Int modulus = 1;
    friend bool operator==(const Class&, const Class&) = default;
  };

  void add(int root, Int residue, Int modulus);
  bool contains(const AffineRoot& a) const;
  bool empty() const { return classes_.empty(); }
  std::vector<int> roots() const;
  const std::map<int, Class>& classes() const { return classes_; }
  /// Number of members alpha + k with k in the range.
  Int count(int root, const OffsetRange& r) const;

  friend bool operator==(const AffineSystem&, const AffineSystem&) = default;

 private:
  std::map<int, Class> classes_;
};

/// |N(w) cap S|.
Int inversion_count(const RootDatum& d, const AffineSystem& s, const ExtendedAffineElement& w);
/// Simple roots of S with respect to the connected component containing A0,
/// by the criterion N(s_a) cap S = {a}. Ordered by (root index, offset).
std::vector<AffineRoot> simple_system(const RootDatum& d, const AffineSystem& s);
/// Same set computed by counting S-walls between x0 and s_a x0 (cross-check).
std::vector<AffineRoot> simple_system_by_walls(const RootDatum& d, const AffineSystem& s);
/// Number of walls of S strictly separating x and y.
Int separating_walls(const RootDatum& d, const AffineSystem& s, const RatVec& x, const RatVec& y);

/// Order of s_a s_b, or 0 when it exceeds the cap (infinite order).
int reflection_order(const RootDatum& d, const AffineRoot& a, const AffineRoot& b, int cap = 12);

/// Simple roots of a reflection-closed set of roots with its induced positive system.
std::vector<int> subsystem_simple_roots(const RootDatum& d, const std::vector<int>& roots);

struct TwistedAffineSystem {
  std::vector<int> diamond_roots;
  /// Phi_{chi,af}: residue c_alpha mod n_alpha per diamond root.
  AffineSystem affine;
  /// Phi^diamond_{chi,af}: residue 0 mod n_alpha per diamond root.
  AffineSystem diamond_affine;
  Int residue(int root) const { return affine.classes().at(root).residue; }
};

TwistedAffineSystem twisted_system(const GenuineCharacter& chi);

/// A right coset w t_y Y_{Q,n} of the translation subgroup Y_{Q,n}.
struct WCoset {
  WeylElement w;
  IntVec rep;
  friend auto operator<=>(const WCoset&, const WCoset&) = default;
  friend bool operator==(const WCoset&, const WCoset&) = default;
};

struct Decomposition {
  std::vector<AffineRoot> word;  // w = s_{word[0]} ... s_{word[k-1]} omega
  ExtendedAffineElement omega;
};

class ChiGeometry {
 public:
  explicit ChiGeometry(GenuineCharacter chi, int coxeter_cap = 12);

  const GenuineCharacter& chi() const { return chi_; }
  const RootDatum& datum() const { return chi_.datum(); }
  const QuadraticCover& cover() const { return chi_.cover(); }

  const TwistedAffineSystem& system() const { return system_; }
  const std::vector<int>& diamond_simple() const { return diamond_simple_; }
  const RatVec& shift_v() const { return v_; }
  const ExtendedAffineElement& mover_w0() const { return w0_; }
  /// w0 t_v as an affine map.
  const AffineMap& normalizer() const { return norm_; }
  const std::vector<AffineRoot>& delta_diamond() const { return delta_diamond_; }
  const std::vector<AffineRoot>& delta_chi() const { return delta_chi_; }
  /// Entry (i, j) is the order of s_i s_j for Delta_chi, 0 meaning infinite.
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_; }
  const std::vector<WCoset>& wchi_cosets() const { return wchi_cosets_; }
  const std::vector<WCoset>& wchi_ex_cosets() const { return wchi_ex_cosets_; }
  const std::vector<ExtendedAffineElement>& omega_generators() const { return omega_gens_; }
  const std::vector<WeylElement>& weyl() const { return weyl_; }
  const RatVec& base_point() const { return x0_; }

  WCoset coset_of(const ExtendedAffineElement& g) const;
  bool fixes_chi(const ExtendedAffineElement& g) const;
  bool in_wchi(const ExtendedAffineElement& g) const;
  bool in_wchi_ex(const ExtendedAffineElement& g) const;
  /// g in W_chi and g A_{chi,0} = A_{chi,0}.
  bool in_omega(const ExtendedAffineElement& g) const;
  /// x lies in the open alcove A_{chi,0}.
  bool in_alcove(const RatVec& x) const;
  /// l_chi(g) = |N(g) cap Phi_{chi,af}|.
  Int chi_length(const ExtendedAffineElement& g) const;
  /// g = s_{a_1} ... s_{a_k} omega with a_i in Delta_chi, reduced, omega in Omega_chi.
  Decomposition decompose(const ExtendedAffineElement& g) const;
  /// [W_chi : W_{chi,ex}].
  Int wchi_ex_index() const;

  /// Generators of W_{chi,ex}: conjugated diamond simple reflections and Y_{Q,n} basis translations.
  std::vector<ExtendedAffineElement> wchi_ex_generators() const;
  /// Generators of W_chi: coset representatives and Y_{Q,n} basis translations.
  std::vector<ExtendedAffineElement> wchi_generators() const;
  /// Image of g in Omega_chi = W_chi / W_chi^0.
  ExtendedAffineElement omega_part(const ExtendedAffineElement& g) const { return decompose(g).omega; }
  /// Generators of W_{chi,ex} cap Omega_chi (images of wchi_ex_generators).
  std::vector<ExtendedAffineElement> omega_ex_generators() const;

 private:
  GenuineCharacter chi_;
  TwistedAffineSystem system_;
  std::vector<int> diamond_simple_;
  RatVec v_;
  ExtendedAffineElement w0_;
  AffineMap norm_;
  std::vector<AffineRoot> delta_diamond_;
  std::vector<AffineRoot> delta_chi_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<WeylElement> weyl_;
  std::vector<WCoset> wchi_cosets_;
  std::vector<WCoset> wchi_ex_cosets_;
  std::vector<ExtendedAffineElement> omega_gens_;
  RatVec x0_;
};

/// Random element of W_chi (or of W_{chi,ex} when ex_only) written as a word of
/// length at most max_length in the reflections s_a, a in Delta_chi, and the
/// Omega generators and their inverses.
ExtendedAffineElement random_word_element(const ChiGeometry& g, std::mt19937_64& rng, int max_length,
                                          bool ex_only = false);

/// Shift vector v with <alpha, v> = c_alpha mod n_alpha on the diamond roots.
RatVec shift_vector(const RootDatum& d, const TwistedAffineSystem& sys, const std::vector<int>& diamond_simple);

/// Walks p into the open alcove cut out by `walls`, returning the product of
/// the reflections used (applied on the left) and the reflection sequence.
std::pair<ExtendedAffineElement, std::vector<AffineRoot>> walk_to_alcove(const RootDatum& d,
                                                                          const std::vector<AffineRoot>& walls,
                                                                          RatVec p);

}  // namespace tamehecke
