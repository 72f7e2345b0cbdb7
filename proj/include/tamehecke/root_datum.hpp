#pragma once

// Root data (X, Phi, Delta; Y, Phi^vee, Delta^vee) with an explicit pairing
// matrix, preset constructors, and the finite Weyl group acting on Y.

#include "tamehecke/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tamehecke {

/// Weyl group elements are integer matrices acting on Y (column vectors).
using WeylElement = IntMatrix;

/// One irreducible factor of the root system.
struct RootComponent {
  std::vector<int> simple;  // positions in simple_indices()
  char type = 'A';          // 'A'..'G'
  int rank = 0;
  std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

class RootDatum {
 public:
  RootDatum() = default;
  /// Validates the root datum axioms; throws std::invalid_argument on failure.
  RootDatum(int rank, std::vector<IntVec> roots, std::vector<IntVec> coroots, std::vector<int> simple_indices,
            IntMatrix pairing);

  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_simple() const { return static_cast<int>(simple_.size()); }
  const IntVec& root(int i) const { return roots_.at(i); }
  const IntVec& coroot(int i) const { return coroots_.at(i); }
  const std::vector<IntVec>& roots() const { return roots_; }
  const std::vector<IntVec>& coroots() const { return coroots_; }
  const std::vector<int>& simple_indices() const { return simple_; }
  int simple(int k) const { return simple_.at(k); }
  const IntMatrix& pairing() const { return pairing_; }

  /// <x, y> for x in X, y in Y.
  Int pair(const IntVec& x, const IntVec& y) const;
  /// <alpha_i, y>.
  Int pair_root(int i, const IntVec& y) const { return dot(functional_[i], y); }
  Rational pair_root(int i, const RatVec& y) const { return dot(functional_[i], y); }
  /// Row vector f with <alpha_i, y> = f . y.
  const IntVec& root_functional(int i) const { return functional_[i]; }

  /// Coefficients of alpha_i in the simple roots.
  const IntVec& simple_coefficients(int i) const { return coeffs_[i]; }
  Int height(int i) const;
  bool is_positive(int i) const { return positive_[i]; }
  int negative_of(int i) const { return negation_[i]; }
  std::vector<int> positive_roots() const;
  /// Positive roots theta with theta + alpha not a root for every simple alpha.
  std::vector<int> highest_roots() const;
  Int max_height() const;

  std::optional<int> root_index(const IntVec& x) const;
  std::optional<int> coroot_index(const IntVec& y) const;

  std::vector<RootComponent> components() const;
  /// Index of the component containing root i.
  int component_of(int i) const;

  /// Label such as "a1+a2" or "-a1-2a2" built from simple coefficients.
  std::string label(int i) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank_ == b.rank_ && a.roots_ == b.roots_ && a.coroots_ == b.coroots_ && a.simple_ == b.simple_ &&
           a.pairing_ == b.pairing_;
  }

 private:
  int rank_ = 0;
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroots_;
  std::vector<int> simple_;
  IntMatrix pairing_;

  std::vector<IntVec> functional_;
  std::vector<IntVec> coeffs_;
  std::vector<bool> positive_;
  std::vector<int> negation_;
  std::map<IntVec, int> root_lookup_;
  std::map<IntVec, int> coroot_lookup_;
  std::vector<int> component_of_;
  std::vector<RootComponent> components_;
};

/// Builds a root datum from simple roots (X coordinates), simple coroots
/// (Y coordinates) and the pairing, closing under simple reflections.
/// Roots are ordered: positive by height (simple first), then negatives.
RootDatum datum_from_simple(int rank, const std::vector<IntVec>& simple_roots,
                            const std::vector<IntVec>& simple_coroots, const IntMatrix& pairing);

/// Preset groups. Names: SL, PGL, GL (param n), Sp (param 2r), SO (param n >= 3),
/// G2, F4, E6, E7, E8, and Cartan-type tags A_sc, A_ad, B_sc, B_ad, C_sc, C_ad,
/// D_sc, D_ad (param = rank). Throws std::invalid_argument on unknown tag or bad rank.
RootDatum build_preset(const std::string& name, const std::vector<Int>& params);

/// Reflection s_alpha on Y for root index i.
WeylElement reflection(const RootDatum& d, int i);

/// Image of root i under w (w alpha)(y) = alpha(w^{-1} y).
int weyl_root_image(const RootDatum& d, const WeylElement& w, int i);

/// All Weyl group elements, in breadth-first order by word length (identity first).
std::vector<WeylElement> weyl_group(const RootDatum& d);

/// Simple-reflection word length of w (number of positive roots sent negative).
int weyl_length(const RootDatum& d, const WeylElement& w);

/// Reduced word w = s_{i_1} ... s_{i_k} as positions into simple_indices().
std::vector<int> reduced_word(const RootDatum& d, const WeylElement& w);
/// "s1s2" style rendering of reduced_word; "1" for the identity.
std::string word_string(const RootDatum& d, const WeylElement& w);

/// Checks that w permutes the coroots compatibly with the roots.
bool is_weyl_automorphism(const RootDatum& d, const WeylElement& w);

}  // namespace tamehecke
