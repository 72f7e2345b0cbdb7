#pragma once

// Comparison between the cover and its principal endoscopy group G_{Q,n}:
// the transferred character chi_{Q,n}, the group isomorphism
// Psi(w) = (w0 t_v)^{-1} Psi_1(w) (w0 t_v), verification of the algebra map
// e^{Q,n}_w -> e_{Psi(w)}, and the fullness / 2-torsion comparison.

#include "tamehecke/hecke_algebra.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tamehecke {

/// Linear (degree one, D = 0) context on a root datum with the same residue field.
std::shared_ptr<const CoverContext> linear_context(const RootDatum& d, const TameField& field);

/// chi_{Q,n}: restriction of chi's exponent functional to Y_{Q,n}, in basis coordinates.
GenuineCharacter transfer_char(const GenuineCharacter& chi, const EndoscopicDatum& endo);

/// Maps between the endoscopic side (coordinates in the Y_{Q,n} basis) and the cover side.
class ShimuraMap {
 public:
  ShimuraMap(const ChiGeometry& cover_side, const ChiGeometry& endo_side, IntMatrix lattice_basis);

  const ChiGeometry& cover_side() const { return *cover_; }
  const ChiGeometry& endo_side() const { return *endo_; }

  /// Psi_1: endoscopic coordinates to Y coordinates.
  ExtendedAffineElement psi1(const ExtendedAffineElement& w) const;
  ExtendedAffineElement psi1_inverse(const ExtendedAffineElement& g) const;
  ExtendedAffineElement psi(const ExtendedAffineElement& w) const;
  /// Throws std::domain_error if g does not come from the endoscopic side.
  ExtendedAffineElement psi_inverse(const ExtendedAffineElement& g) const;
  /// alpha_{Q,n} + k -> alpha + k n_alpha.
  AffineRoot transport_root(const AffineRoot& a) const;

 private:
  const ChiGeometry* cover_;
  const ChiGeometry* endo_;
  IntMatrix basis_;
  std::vector<RatVec> basis_inv_;
};

struct GeneratorImage {
  std::string kind;  // "reflection" or "omega"
  ExtendedAffineElement source;
  ExtendedAffineElement image;
};

struct UpsilonVerdict {
  bool diamond_match = false;
  bool walls_match = false;
  bool delta_match = false;
  bool reflection_bijection = false;
  bool coxeter_match = false;
  bool omega_match = false;
  bool products_match = false;
  bool homomorphism = false;
  std::vector<GeneratorImage> generator_images;
  std::vector<std::string> failures;
  int sampled_products = 0;
  bool ok() const {
    return diamond_match && walls_match && delta_match && reflection_bijection && coxeter_match && omega_match &&
           products_match && homomorphism;
  }
};

struct UpsilonOptions {
  std::uint64_t seed = 1;
  int word_length = 4;
  int product_samples = 40;
  int homomorphism_samples = 100;
};

UpsilonVerdict upsilon_check(const ShimuraMap& psi, const UpsilonOptions& opts = {});

struct TorsionResult {
  bool found = false;
  /// True when absence of torsion is proved rather than searched.
  bool exact = true;
  ExtendedAffineElement witness;
};

/// Searches Omega_chi for an element of order 2, coset by coset.
TorsionResult omega_two_torsion(const ChiGeometry& g, int search_bound = 4);

enum class FullVerdict { isomorphic, not_isomorphic, undetermined };
std::string to_string(FullVerdict v);

struct FullnessReport {
  Int index_cover = 1;
  Int index_endo = 1;
  TorsionResult torsion_cover;
  TorsionResult torsion_endo;
  FullVerdict verdict = FullVerdict::undetermined;
  std::string reason;
};

FullnessReport fullness_and_torsion(const ChiGeometry& cover_side, const ChiGeometry& endo_side);

/// Everything needed to compare one character with its endoscopic transfer.
struct ShimuraSetup {
  EndoscopicDatum endo;
  std::unique_ptr<ChiGeometry> cover_geometry;
  std::unique_ptr<ChiGeometry> endo_geometry;
  std::unique_ptr<ShimuraMap> map;
};
ShimuraSetup make_shimura_setup(const GenuineCharacter& chi);

}  // namespace tamehecke
