#pragma once

// The covering torus modulo depth, genuine depth-zero characters in exponent
// form, the affine characters chi_{alpha+k}, the W_ex action on characters,
// and the depth data c_alpha / f_chi.

#include "tamehecke/affine.hpp"
#include "tamehecke/quad_cover.hpp"
#include "tamehecke/tame_arith.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace tamehecke {

/// zeta * s(prod_i e_i(varpi^{trans_i} g^{unit_i})) with e_i the basis of Y.
struct CoverTorusElt {
  RootOfUnity zeta;
  IntVec unit;
  IntVec trans;
  friend bool operator==(const CoverTorusElt&, const CoverTorusElt&) = default;
};

/// The cover together with its residue field; shared by characters.
struct CoverContext {
  QuadraticCover cover;
  TameField field;
};

CoverTorusElt torus_identity(int rank);
/// s(y(x)) for a cocharacter y.
CoverTorusElt torus_section(const TameField& field, const IntVec& y, const FieldElt& x);
CoverTorusElt torus_central(const TameField& field, int rank, const RootOfUnity& z);
CoverTorusElt torus_mul(const QuadraticCover& cover, const TameField& field, const CoverTorusElt& a,
                        const CoverTorusElt& b);
CoverTorusElt torus_inv(const QuadraticCover& cover, const TameField& field, const CoverTorusElt& a);
CoverTorusElt torus_commutator(const QuadraticCover& cover, const TameField& field, const CoverTorusElt& a,
                               const CoverTorusElt& b);
/// (x, y)_n^{B_Q(y1, y2)} for the translation/unit coordinates of two section elements.
RootOfUnity commutator_symbol(const QuadraticCover& cover, const TameField& field, const IntVec& y1,
                              const FieldElt& a, const IntVec& y2, const FieldElt& b);

/// h_alpha(x) = s(alpha^vee(x)).
CoverTorusElt h_alpha(const QuadraticCover& cover, const TameField& field, int root, const FieldElt& x);
/// w_alpha(x)^2 = (-x, -x)_n^{Q(alpha^vee)} h_alpha(-1).
CoverTorusElt w_alpha_square(const QuadraticCover& cover, const TameField& field, int root, const FieldElt& x);

class GenuineCharacter {
 public:
  GenuineCharacter(std::shared_ptr<const CoverContext> ctx, IntVec m, std::map<int, Int> depth = {});

  const CoverContext& context() const { return *ctx_; }
  std::shared_ptr<const CoverContext> context_ptr() const { return ctx_; }
  const QuadraticCover& cover() const { return ctx_->cover; }
  const TameField& field() const { return ctx_->field; }
  const RootDatum& datum() const { return ctx_->cover.datum(); }
  /// Exponents of chi on the unit parts of the Y basis, reduced mod q-1.
  const IntVec& m() const { return m_; }
  const std::map<int, Int>& depth() const { return depth_; }
  bool is_depth_zero() const;

  /// m(y) mod q-1.
  Int value(const IntVec& y) const;

  friend bool operator==(const GenuineCharacter& a, const GenuineCharacter& b) {
    return a.m_ == b.m_ && a.depth_ == b.depth_;
  }

 private:
  std::shared_ptr<const CoverContext> ctx_;
  IntVec m_;
  std::map<int, Int> depth_;
};

/// eps(zeta) + m . u; t must lie over T(O_F).
RootOfUnity char_eval(const GenuineCharacter& chi, const CoverTorusElt& t);

/// Exponent of chi_{alpha+k}: m(alpha^vee) - k Q(alpha^vee) (q-1)/n mod q-1.
Int chi_affine(const GenuineCharacter& chi, const AffineRoot& a);

/// w . chi for w in W_ex.
GenuineCharacter weyl_act_char(const ExtendedAffineElement& w, const GenuineCharacter& chi);

Int c_alpha(const GenuineCharacter& chi, int root);
Int f_chi(const GenuineCharacter& chi, int root);

struct DepthDescriptor {
  std::map<int, Int> f_values;
  bool torus_marker = true;
};
DepthDescriptor j_chi_descriptor(const GenuineCharacter& chi);

/// One warning per irreducible factor for which p is a bad prime.
std::vector<std::string> bad_prime_check(const RootDatum& d, Int p);

}  // namespace tamehecke
