#include "tamehecke/cover_torus.hpp"

#include <stdexcept>

namespace tamehecke {

namespace {

FieldElt coordinate(const CoverTorusElt& t, int i) { return {t.trans[i], t.unit[i]}; }

// prod_{i,j} (x_i, x'_j)^{M_ij}
Int cocycle(const IntMatrix& M, const TameField& field, const CoverTorusElt& a, const CoverTorusElt& b) {
  Int e = 0;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      if (M.at(i, j) == 0) continue;
      e += M.at(i, j) * field.hilbert(coordinate(a, i), coordinate(b, j)).exp;
      e = mod(e, field.unit_order());
    }
  return e;
}

}  // namespace

CoverTorusElt torus_identity(int rank) { return {{0}, IntVec(rank, 0), IntVec(rank, 0)}; }

CoverTorusElt torus_section(const TameField& field, const IntVec& y, const FieldElt& x) {
  CoverTorusElt t{{0}, IntVec(y.size()), IntVec(y.size())};
  for (std::size_t i = 0; i < y.size(); ++i) {
    t.unit[i] = mod(y[i] * x.unit_exp, field.unit_order());
    t.trans[i] = y[i] * x.valuation;
  }
  return t;
}

CoverTorusElt torus_central(const TameField& field, int rank, const RootOfUnity& z) {
  if (!field.in_mu_n(z)) throw std::domain_error("central element must lie in mu_n");
  CoverTorusElt t = torus_identity(rank);
  t.zeta = field.reduce(z);
  return t;
}

CoverTorusElt torus_mul(const QuadraticCover& cover, const TameField& field, const CoverTorusElt& a,
                        const CoverTorusElt& b) {
  const Int qm1 = field.unit_order();
  CoverTorusElt r;
  r.zeta = {mod(a.zeta.exp + b.zeta.exp + cocycle(cover.D(), field, a, b), qm1)};
  r.unit.resize(a.unit.size());
  for (std::size_t i = 0; i < a.unit.size(); ++i) r.unit[i] = mod(a.unit[i] + b.unit[i], qm1);
  r.trans = add(a.trans, b.trans);
  return r;
}

CoverTorusElt torus_inv(const QuadraticCover& cover, const TameField& field, const CoverTorusElt& a) {
  const Int qm1 = field.unit_order();
  CoverTorusElt r;
  r.unit.resize(a.unit.size());
  for (std::size_t i = 0; i < a.unit.size(); ++i) r.unit[i] = mod(-a.unit[i], qm1);
  r.trans = neg(a.trans);
  r.zeta = {0};
  r.zeta = {mod(-a.zeta.exp - cocycle(cover.D(), field, a, r), qm1)};
  return r;
}

CoverTorusElt torus_commutator(const QuadraticCover& cover, const TameField& field, const CoverTorusElt& a,
                               const CoverTorusElt& b) {
  auto ab = torus_mul(cover, field, a, b);
  auto ai = torus_inv(cover, field, a);
  auto bi = torus_inv(cover, field, b);
  return torus_mul(cover, field, torus_mul(cover, field, ab, ai), bi);
}

RootOfUnity commutator_symbol(const QuadraticCover& cover, const TameField& field, const IntVec& y1,
                              const FieldElt& a, const IntVec& y2, const FieldElt& b) {
  Int e = mod(cover.B(y1, y2), field.unit_order()) * field.hilbert(a, b).exp;
  return {mod(e, field.unit_order())};
}

CoverTorusElt h_alpha(const QuadraticCover& cover, const TameField& field, int root, const FieldElt& x) {
  return torus_section(field, cover.datum().coroot(root), x);
}

CoverTorusElt w_alpha_square(const QuadraticCover& cover, const TameField& field, int root, const FieldElt& x) {
  FieldElt mx = field.mul(field.minus_one(), x);
  Int e = mod(cover.Q_coroot(root), field.unit_order()) * field.hilbert(mx, mx).exp;
  CoverTorusElt z = torus_central(field, cover.rank(), {mod(e, field.unit_order())});
  return torus_mul(cover, field, z, h_alpha(cover, field, root, field.minus_one()));
}

GenuineCharacter::GenuineCharacter(std::shared_ptr<const CoverContext> ctx, IntVec m, std::map<int, Int> depth)
    : ctx_(std::move(ctx)), m_(std::move(m)), depth_(std::move(depth)) {
  if (!ctx_) throw std::invalid_argument("character needs a cover context");
  if (static_cast<int>(m_.size()) != ctx_->cover.rank())
    throw std::invalid_argument("character vector m must have length rank");
  for (auto& v : m_) v = mod(v, ctx_->field.unit_order());
  for (auto it = depth_.begin(); it != depth_.end();) {
    if (it->first < 0 || it->first >= datum().num_roots()) throw std::invalid_argument("depth map root index out of range");
    if (it->second < 1) throw std::invalid_argument("depth c_alpha must be at least 1");
    if (it->second == 1)
      it = depth_.erase(it);
    else
      ++it;
  }
}

bool GenuineCharacter::is_depth_zero() const { return depth_.empty(); }

Int GenuineCharacter::value(const IntVec& y) const { return mod(dot(m_, y), field().unit_order()); }

RootOfUnity char_eval(const GenuineCharacter& chi, const CoverTorusElt& t) {
  if (!is_zero(t.trans)) throw std::domain_error("char_eval needs an element over T(O_F)");
  const TameField& F = chi.field();
  Int e = F.eps(t.zeta).exp + chi.value(t.unit);
  return {mod(e, F.unit_order())};
}

Int chi_affine(const GenuineCharacter& chi, const AffineRoot& a) {
  if (!chi.is_depth_zero()) throw std::domain_error("affine characters are only defined for depth-zero characters");
  const auto& cov = chi.cover();
  const Int qm1 = chi.field().unit_order();
  Int e = chi.value(cov.datum().coroot(a.root));
  Int shift = mod(mod(a.offset, qm1) * mod(cov.Q_coroot(a.root), qm1), qm1) * chi.field().mu_step();
  return mod(e - mod(shift, qm1), qm1);
}

GenuineCharacter weyl_act_char(const ExtendedAffineElement& w, const GenuineCharacter& chi) {
  if (!chi.is_depth_zero()) throw std::domain_error("the W_ex action is only implemented in depth zero");
  const auto& cov = chi.cover();
  const int r = cov.rank();
  const Int qm1 = chi.field().unit_order();
  IntMatrix winv = integer_inverse(w.linear);
  IntVec m(r);
  for (int j = 0; j < r; ++j) {
    IntVec z = winv.column(j);  // w0^{-1} e_j
    Int b = mod(cov.B(w.translation, z), qm1);
    m[j] = mod(chi.value(z) - b * chi.field().mu_step(), qm1);
  }
  return GenuineCharacter(chi.context_ptr(), m, {});
}

Int c_alpha(const GenuineCharacter& chi, int root) {
  auto it = chi.depth().find(root);
  return it == chi.depth().end() ? 1 : it->second;
}

Int f_chi(const GenuineCharacter& chi, int root) {
  Int c = c_alpha(chi, root);
  return chi.datum().is_positive(root) ? c / 2 : (c + 1) / 2;
}

DepthDescriptor j_chi_descriptor(const GenuineCharacter& chi) {
  DepthDescriptor d;
  for (int i = 0; i < chi.datum().num_roots(); ++i) d.f_values[i] = f_chi(chi, i);
  return d;
}

std::vector<std::string> bad_prime_check(const RootDatum& d, Int p) {
  std::vector<std::string> out;
  for (const auto& c : d.components()) {
    bool bad = false;
    switch (c.type) {
      case 'A':
        bad = p <= c.rank + 1;
        break;
      case 'B':
      case 'C':
      case 'D':
        bad = p == 2;
        break;
      case 'F':
        bad = p == 2 || p == 3;
        break;
      case 'G':
        bad = p == 2 || p == 3 || p == 5;
        break;
      case 'E':
        bad = p == 2 || p == 3 || p == 5 || (c.rank >= 7 && p == 7);
        break;
      default:
        break;
    }
    if (bad) out.push_back("p = " + std::to_string(p) + " is a bad prime for the factor of type " + c.name());
  }
  return out;
}

}  // namespace tamehecke
