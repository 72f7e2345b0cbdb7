#include "tamehecke/shimura.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace tamehecke {

namespace {

// A * M * B with A rational, M and B integral; the result must be integral.
IntMatrix conjugate_integral(const std::vector<RatVec>& A, const IntMatrix& M, const IntMatrix& B) {
  const int n = M.rows();
  IntMatrix MB = M * B;
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int k = 0; k < n; ++k) s += A[i][k] * Rational(MB.at(k, j));
      if (s.denominator() != 1) throw std::domain_error("matrix does not preserve Y_{Q,n}");
      out.at(i, j) = s.numerator();
    }
  return out;
}

RatVec apply(const std::vector<RatVec>& A, const IntVec& v) {
  RatVec out(A.size(), Rational(0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) out[i] += A[i][k] * Rational(v[k]);
  return out;
}

}  // namespace

std::shared_ptr<const CoverContext> linear_context(const RootDatum& d, const TameField& field) {
  return std::make_shared<CoverContext>(
      CoverContext{QuadraticCover(d, IntMatrix(d.rank(), d.rank()), 1), TameField(field.p(), field.f(), 1)});
}

GenuineCharacter transfer_char(const GenuineCharacter& chi, const EndoscopicDatum& endo) {
  if (!chi.is_depth_zero()) throw std::domain_error("transfer is defined for depth-zero characters");
  IntVec m;
  for (const auto& b : endo.lattice_basis.columns()) m.push_back(chi.value(b));
  return GenuineCharacter(linear_context(endo.datum_Qn, chi.field()), m);
}

ShimuraMap::ShimuraMap(const ChiGeometry& cover_side, const ChiGeometry& endo_side, IntMatrix lattice_basis)
    : cover_(&cover_side), endo_(&endo_side), basis_(std::move(lattice_basis)) {
  basis_inv_ = rational_inverse(basis_);
}

ExtendedAffineElement ShimuraMap::psi1(const ExtendedAffineElement& w) const {
  // B M B^{-1} = (B^{-T} M^T B^T)^T
  std::vector<RatVec> inv_t(basis_inv_.size(), RatVec(basis_inv_.size()));
  for (std::size_t i = 0; i < basis_inv_.size(); ++i)
    for (std::size_t j = 0; j < basis_inv_.size(); ++j) inv_t[i][j] = basis_inv_[j][i];
  IntMatrix lin = conjugate_integral(inv_t, w.linear.transpose(), basis_.transpose()).transpose();
  return {lin, basis_ * w.translation};
}

ExtendedAffineElement ShimuraMap::psi1_inverse(const ExtendedAffineElement& g) const {
  IntMatrix lin = conjugate_integral(basis_inv_, g.linear, basis_);
  auto t = to_integer(apply(basis_inv_, g.translation));
  if (!t) throw std::domain_error("translation does not lie in Y_{Q,n}");
  return {lin, *t};
}

ExtendedAffineElement ShimuraMap::psi(const ExtendedAffineElement& w) const {
  const AffineMap& n = cover_->normalizer();
  return (n.inverse() * AffineMap::from(psi1(w)) * n).to_element();
}

ExtendedAffineElement ShimuraMap::psi_inverse(const ExtendedAffineElement& g) const {
  const AffineMap& n = cover_->normalizer();
  return psi1_inverse((n * AffineMap::from(g) * n.inverse()).to_element());
}

AffineRoot ShimuraMap::transport_root(const AffineRoot& a) const {
  return {a.root, a.offset * cover_->cover().n_alpha(a.root)};
}

UpsilonVerdict upsilon_check(const ShimuraMap& psi, const UpsilonOptions& opts) {
  const ChiGeometry& G = psi.cover_side();
  const ChiGeometry& E = psi.endo_side();
  const RootDatum& d = G.datum();
  const RootDatum& de = E.datum();
  UpsilonVerdict v;
  auto fail = [&](const std::string& msg) { v.failures.push_back(msg); };

  v.diamond_match = E.system().diamond_roots == G.system().diamond_roots;
  if (!v.diamond_match) fail("Phi_{chi_Qn} differs from the diamond roots");

  v.walls_match = v.diamond_match;
  const IntMatrix& Bq = G.cover().yqn_basis();
  for (int a : G.system().diamond_roots) {
    if (!v.walls_match) break;
    Int na = G.cover().n_alpha(a);
    for (int j = 0; j < Bq.cols(); ++j)
      if (na * de.root_functional(a)[j] != d.pair_root(a, Bq.column(j))) {
        v.walls_match = false;
        fail("alpha_Qn is not alpha / n_alpha for root " + d.label(a));
        break;
      }
    const auto& ce = E.system().affine.classes().at(a);
    const auto& cd = G.system().diamond_affine.classes().at(a);
    if (ce.residue != 0 || ce.modulus != 1 || cd.residue != 0 || cd.modulus != na) {
      v.walls_match = false;
      fail("wall families differ for root " + d.label(a));
    }
  }

  std::set<AffineRoot> transported, diamond(G.delta_diamond().begin(), G.delta_diamond().end());
  for (const auto& a : E.delta_chi()) transported.insert(psi.transport_root(a));
  v.delta_match = transported == diamond;
  if (!v.delta_match) fail("Delta_{chi_Qn} does not map onto the diamond simple roots");

  // S^0 bijection through Psi.
  std::map<AffineRoot, std::size_t> delta_index;
  for (std::size_t i = 0; i < G.delta_chi().size(); ++i) delta_index[G.delta_chi()[i]] = i;
  std::map<ExtendedAffineElement, std::size_t> reflection_index;
  for (std::size_t i = 0; i < G.delta_chi().size(); ++i)
    reflection_index[affine_reflection(d, G.delta_chi()[i])] = i;
  std::vector<std::size_t> perm;
  v.reflection_bijection = E.delta_chi().size() == G.delta_chi().size();
  for (const auto& a : E.delta_chi()) {
    ExtendedAffineElement s = affine_reflection(de, a);
    ExtendedAffineElement img = psi.psi(s);
    v.generator_images.push_back({"reflection", s, img});
    auto it = reflection_index.find(img);
    if (it == reflection_index.end()) {
      v.reflection_bijection = false;
      fail("Psi(s_a) is not a simple reflection of W_chi^0 for a = " + to_string(de, a));
      continue;
    }
    perm.push_back(it->second);
  }
  {
    std::set<std::size_t> uniq(perm.begin(), perm.end());
    if (uniq.size() != G.delta_chi().size()) v.reflection_bijection = false;
  }

  v.coxeter_match = v.reflection_bijection;
  if (v.coxeter_match) {
    const auto& ce = E.coxeter_matrix();
    const auto& cg = G.coxeter_matrix();
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = 0; j < perm.size(); ++j)
        if (ce[i][j] != cg[perm[i]][perm[j]]) {
          v.coxeter_match = false;
          fail("Coxeter entries differ at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
  }

  v.omega_match = true;
  for (const auto& om : E.omega_ex_generators()) {
    ExtendedAffineElement img = psi.psi(om);
    v.generator_images.push_back({"omega", om, img});
    if (!G.in_omega(img) || !G.in_wchi_ex(img)) {
      v.omega_match = false;
      fail("Psi(omega) leaves W_{chi,ex} cap Omega_chi for omega = " + to_string(om));
    }
  }
  for (const auto& om : G.omega_ex_generators()) {
    ExtendedAffineElement pre;
    try {
      pre = psi.psi_inverse(om);
    } catch (const std::domain_error&) {
      v.omega_match = false;
      fail("omega = " + to_string(om) + " has no preimage under Psi");
      continue;
    }
    if (!E.in_omega(pre) || !E.in_wchi_ex(pre)) {
      v.omega_match = false;
      fail("Psi^{-1}(omega) leaves W_{chi_Qn,ex} cap Omega_{chi_Qn} for omega = " + to_string(om));
    }
  }

  std::mt19937_64 rng(opts.seed);
  HeckeAlgebra HG(G), HE(E);
  v.products_match = true;
  for (int i = 0; i < opts.product_samples; ++i) {
    ExtendedAffineElement x = random_word_element(E, rng, opts.word_length, true);
    ExtendedAffineElement y = random_word_element(E, rng, opts.word_length, true);
    HeckeElement pe = HE.mul(HE.e(x), HE.e(y));
    HeckeElement mapped;
    for (const auto& [w, c] : pe.terms()) mapped.add_term(psi.psi(w), c);
    HeckeElement pg = HG.mul(HG.e(psi.psi(x)), HG.e(psi.psi(y)));
    ++v.sampled_products;
    if (!(mapped == pg)) {
      v.products_match = false;
      fail("product transport fails for x = " + to_string(x) + ", y = " + to_string(y));
      break;
    }
  }

  v.homomorphism = true;
  for (int i = 0; i < opts.homomorphism_samples; ++i) {
    ExtendedAffineElement x = random_word_element(E, rng, opts.word_length, true);
    ExtendedAffineElement y = random_word_element(E, rng, opts.word_length, true);
    if (!(psi.psi(x * y) == psi.psi(x) * psi.psi(y))) {
      v.homomorphism = false;
      fail("Psi is not multiplicative on x = " + to_string(x) + ", y = " + to_string(y));
      break;
    }
  }
  return v;
}

TorsionResult omega_two_torsion(const ChiGeometry& g, int search_bound) {
  const int r = g.datum().rank();
  const IntMatrix& Bq = g.cover().yqn_basis();
  const IntMatrix I = IntMatrix::identity(r);
  TorsionResult res;
  for (const auto& c : g.wchi_cosets()) {
    if (c.w.is_identity() || !(c.w * c.w).is_identity()) continue;
    // (w t_z)^2 = t_{(1+w) z}; need z = rep + Bq k with (1+w) z = 0.
    IntMatrix onew = I + c.w;
    IntMatrix A = onew * Bq;
    auto k0 = solve_integer(A, neg(onew * c.rep));
    if (!k0) continue;
    IntMatrix K = integer_kernel(A);
    IntVec z0 = add(c.rep, Bq * *k0);
    if (g.delta_chi().empty() || K.cols() == 0) {
      ExtendedAffineElement cand{c.w, z0};
      if (g.in_omega(cand)) {
        res.found = true;
        res.exact = true;
        res.witness = cand;
        return res;
      }
      continue;
    }
    // Bounded search over the solution lattice z0 + Bq K t.
    res.exact = false;
    const int dim = K.cols();
    IntVec t(dim, -search_bound);
    while (true) {
      IntVec z = add(z0, Bq * (K * t));
      ExtendedAffineElement cand{c.w, z};
      if (g.in_omega(cand)) {
        res.found = true;
        res.exact = true;
        res.witness = cand;
        return res;
      }
      int i = dim - 1;
      while (i >= 0 && ++t[i] > search_bound) t[i--] = -search_bound;
      if (i < 0) break;
    }
  }
  return res;
}

std::string to_string(FullVerdict v) {
  switch (v) {
    case FullVerdict::isomorphic:
      return "isomorphic";
    case FullVerdict::not_isomorphic:
      return "not isomorphic";
    default:
      return "undetermined";
  }
}

FullnessReport fullness_and_torsion(const ChiGeometry& cover_side, const ChiGeometry& endo_side) {
  FullnessReport rep;
  rep.index_cover = cover_side.wchi_ex_index();
  rep.index_endo = endo_side.wchi_ex_index();
  rep.torsion_cover = omega_two_torsion(cover_side);
  rep.torsion_endo = omega_two_torsion(endo_side);
  if (cover_side.cover().n() == 1) {
    rep.verdict = FullVerdict::isomorphic;
    rep.reason = "degree one: W_chi and W_{chi_Qn} are the same group";
    return rep;
  }
  if (rep.index_endo == 1 && rep.index_cover == 1) {
    rep.verdict = FullVerdict::isomorphic;
    rep.reason = "W_chi = W_{chi,ex} and W_{chi_Qn} = W_{chi_Qn,ex}; the full algebras are the ex-subalgebras";
    return rep;
  }
  if (rep.index_endo == 1) {
    rep.verdict = FullVerdict::undetermined;
    rep.reason = "inconsistent: W_{chi_Qn} = W_{chi_Qn,ex} but W_chi != W_{chi,ex}";
    return rep;
  }
  const auto& tc = rep.torsion_cover;
  const auto& te = rep.torsion_endo;
  if (te.found && !tc.found && tc.exact) {
    rep.verdict = FullVerdict::not_isomorphic;
    rep.reason = "Omega_{chi_Qn} contains an element of order 2 and Omega_chi contains none";
  } else if (tc.found && !te.found && te.exact) {
    rep.verdict = FullVerdict::not_isomorphic;
    rep.reason = "Omega_chi contains an element of order 2 and Omega_{chi_Qn} contains none";
  } else {
    rep.verdict = FullVerdict::undetermined;
    rep.reason = "W_chi != W_{chi,ex} and the 2-torsion test does not separate the two sides";
  }
  return rep;
}

ShimuraSetup make_shimura_setup(const GenuineCharacter& chi) {
  ShimuraSetup s;
  s.endo = chi.cover().endoscopic_datum();
  s.cover_geometry = std::make_unique<ChiGeometry>(chi);
  s.endo_geometry = std::make_unique<ChiGeometry>(transfer_char(chi, s.endo));
  s.map = std::make_unique<ShimuraMap>(*s.cover_geometry, *s.endo_geometry, s.endo.lattice_basis);
  return s;
}

}  // namespace tamehecke
