#include "tamehecke/chi_geometry.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace tamehecke {

namespace {

Int rat_floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }
Int rat_ceil(const Rational& r) { return -floor_div(-r.numerator(), r.denominator()); }

// Adjustment vectors in [0, bound)^m ordered by total then lexicographically.
std::vector<IntVec> adjustment_vectors(int m, Int bound) {
  std::vector<IntVec> out;
  IntVec cur(m, 0);
  while (true) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && ++cur[i] == bound) cur[i--] = 0;
    if (i < 0) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) {
    Int sa = 0, sb = 0;
    for (Int x : a) sa += x;
    for (Int x : b) sb += x;
    return sa < sb;
  });
  return out;
}

std::vector<WeylElement> generated_group(const std::vector<WeylElement>& gens, int rank) {
  std::vector<WeylElement> out{IntMatrix::identity(rank)};
  std::set<WeylElement> seen{out[0]};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      WeylElement w = g * out[k];
      if (seen.insert(w).second) out.push_back(w);
    }
  return out;
}

}  // namespace

void AffineSystem::add(int root, Int residue, Int modulus) {
  if (modulus < 1) throw std::invalid_argument("affine system modulus must be positive");
  classes_[root] = {mod(residue, modulus), modulus};
}

bool AffineSystem::contains(const AffineRoot& a) const {
  auto it = classes_.find(a.root);
  if (it == classes_.end()) return false;
  return mod(a.offset - it->second.residue, it->second.modulus) == 0;
}

std::vector<int> AffineSystem::roots() const {
  std::vector<int> out;
  for (const auto& [r, c] : classes_) out.push_back(r);
  return out;
}

Int AffineSystem::count(int root, const OffsetRange& r) const {
  auto it = classes_.find(root);
  if (it == classes_.end() || r.hi < r.lo) return 0;
  const auto& c = it->second;
  return floor_div(r.hi - c.residue, c.modulus) - floor_div(r.lo - 1 - c.residue, c.modulus);
}

Int inversion_count(const RootDatum& d, const AffineSystem& s, const ExtendedAffineElement& w) {
  Int total = 0;
  for (const auto& [root, c] : s.classes()) total += s.count(root, inversion_range(d, w, root));
  return total;
}

std::vector<AffineRoot> simple_system(const RootDatum& d, const AffineSystem& s) {
  // A simple root alpha+k of the alcove containing A0 has 0 <= k <= modulus.
  std::vector<AffineRoot> out;
  for (const auto& [root, c] : s.classes()) {
    for (Int k = c.residue; k <= c.modulus; k += c.modulus) {
      AffineRoot a{root, k};
      if (!is_positive(d, a)) continue;
      if (inversion_count(d, s, affine_reflection(d, a)) == 1) out.push_back(a);
    }
  }
  return out;
}

Int separating_walls(const RootDatum& d, const AffineSystem& s, const RatVec& x, const RatVec& y) {
  Int total = 0;
  for (const auto& [root, c] : s.classes()) {
    if (!d.is_positive(root)) continue;
    Rational a = d.pair_root(root, x), b = d.pair_root(root, y);
    if (a == b) continue;
    Rational lo = a < b ? a : b, hi = a < b ? b : a;
    // Walls alpha(x) = -residue - k modulus, i.e. values t = -residue mod modulus.
    Int r = mod(-c.residue, c.modulus);
    total += floor_div(rat_ceil(hi) - 1 - r, c.modulus) - floor_div(rat_floor(lo) - r, c.modulus);
  }
  return total;
}

std::vector<AffineRoot> simple_system_by_walls(const RootDatum& d, const AffineSystem& s) {
  RatVec x0 = alcove_point(d);
  std::vector<AffineRoot> out;
  for (const auto& [root, c] : s.classes()) {
    Int span = 2 * c.modulus + 2;
    for (Int k = -span; k <= span; ++k) {
      AffineRoot a{root, k};
      if (!s.contains(a) || !is_positive(d, a)) continue;
      if (separating_walls(d, s, x0, affine_reflection(d, a).act(x0)) == 1) out.push_back(a);
    }
  }
  return out;
}

int reflection_order(const RootDatum& d, const AffineRoot& a, const AffineRoot& b, int cap) {
  ExtendedAffineElement g = affine_reflection(d, a) * affine_reflection(d, b);
  ExtendedAffineElement p = g;
  for (int k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * g;
  }
  return 0;
}

std::vector<int> subsystem_simple_roots(const RootDatum& d, const std::vector<int>& roots) {
  std::vector<int> pos;
  for (int r : roots)
    if (d.is_positive(r)) pos.push_back(r);
  std::set<IntVec> sums;
  for (int a : pos)
    for (int b : pos) sums.insert(add(d.root(a), d.root(b)));
  std::vector<int> out;
  for (int r : pos)
    if (!sums.count(d.root(r))) out.push_back(r);
  return out;
}

TwistedAffineSystem twisted_system(const GenuineCharacter& chi) {
  if (!chi.is_depth_zero()) throw std::domain_error("twisted systems are computed for depth-zero characters");
  const auto& d = chi.datum();
  const auto& cov = chi.cover();
  const Int qm1 = chi.field().unit_order();
  TwistedAffineSystem sys;
  for (int i = 0; i < d.num_roots(); ++i) {
    Int na = cov.n_alpha(i);
    if (mod(na * chi.value(d.coroot(i)), qm1) != 0) continue;
    sys.diamond_roots.push_back(i);
    Int res = -1;
    for (Int k = 0; k < na; ++k)
      if (chi_affine(chi, {i, k}) == 0) {
        res = k;
        break;
      }
    if (res < 0) throw std::logic_error("diamond root without affine residue");
    sys.affine.add(i, res, na);
    sys.diamond_affine.add(i, 0, na);
  }
  return sys;
}

RatVec shift_vector(const RootDatum& d, const TwistedAffineSystem& sys, const std::vector<int>& simple) {
  const int r = d.rank();
  const int m = static_cast<int>(simple.size());
  if (m == 0) return RatVec(r, Rational(0));
  std::vector<RatVec> A(m, RatVec(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) A[i][j] = d.pair_root(simple[i], d.coroot(simple[j]));
  IntVec base(m), mods(m);
  for (int i = 0; i < m; ++i) {
    const auto& c = sys.affine.classes().at(simple[i]);
    mods[i] = c.modulus;
    base[i] = c.residue == 0 ? 0 : c.residue - c.modulus;
  }
  for (const IntVec& j : adjustment_vectors(m, 4)) {
    RatVec target(m);
    for (int i = 0; i < m; ++i) target[i] = Rational(base[i] - mods[i] * j[i]);
    auto x = solve_rational(A, target);
    if (!x) continue;
    RatVec v(r, Rational(0));
    for (int k = 0; k < m; ++k)
      for (int t = 0; t < r; ++t) v[t] += (*x)[k] * Rational(d.coroot(simple[k])[t]);
    bool ok = true;
    for (int a : sys.diamond_roots) {
      Rational p = d.pair_root(a, v);
      const auto& c = sys.affine.classes().at(a);
      if (p.denominator() != 1 || mod(p.numerator() - c.residue, c.modulus) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return v;
  }
  throw std::logic_error("no shift vector matches the residues of the twisted system");
}

std::pair<ExtendedAffineElement, std::vector<AffineRoot>> walk_to_alcove(const RootDatum& d,
                                                                          const std::vector<AffineRoot>& walls,
                                                                          RatVec p) {
  ExtendedAffineElement h = ExtendedAffineElement::identity(d.rank());
  std::vector<AffineRoot> used;
  while (true) {
    const AffineRoot* hit = nullptr;
    for (const auto& a : walls)
      if (evaluate(d, a, p) < 0) {
        hit = &a;
        break;
      }
    if (!hit) break;
    ExtendedAffineElement s = affine_reflection(d, *hit);
    p = s.act(p);
    h = s * h;
    used.push_back(*hit);
    if (used.size() > 100000) throw std::logic_error("alcove walk does not terminate");
  }
  return {h, used};
}

ChiGeometry::ChiGeometry(GenuineCharacter chi, int coxeter_cap) : chi_(std::move(chi)) {
  const auto& d = datum();
  const int r = d.rank();
  system_ = twisted_system(chi_);
  diamond_simple_ = subsystem_simple_roots(d, system_.diamond_roots);
  v_ = shift_vector(d, system_, diamond_simple_);
  delta_diamond_ = simple_system(d, system_.diamond_affine);
  x0_ = alcove_point(d);
  w0_ = walk_to_alcove(d, delta_diamond_, add(x0_, v_)).first;
  norm_ = AffineMap::from(w0_) * AffineMap::translation_by(v_);
  delta_chi_ = simple_system(d, system_.affine);

  const std::size_t k = delta_chi_.size();
  coxeter_.assign(k, std::vector<int>(k, 1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) coxeter_[i][j] = reflection_order(d, delta_chi_[i], delta_chi_[j], coxeter_cap);

  weyl_ = weyl_group(d);
  const auto reps = cover().yqn().representatives();
  for (const auto& w : weyl_)
    for (const auto& y : reps) {
      ExtendedAffineElement g{w, y};
      if (fixes_chi(g)) wchi_cosets_.push_back({w, y});
    }
  std::sort(wchi_cosets_.begin(), wchi_cosets_.end());

  std::vector<WeylElement> gens;
  for (int a : diamond_simple_) gens.push_back(reflection(d, a));
  for (const auto& w : generated_group(gens, r)) {
    // t_{-v} w t_v = w t_{v - w^{-1} v}
    RatVec t = sub(v_, integer_inverse(w) * v_);
    auto ti = to_integer(t);
    if (!ti) throw std::logic_error("conjugated diamond Weyl element has non-integral translation");
    wchi_ex_cosets_.push_back({w, cover().yqn().reduce(*ti)});
  }
  std::sort(wchi_ex_cosets_.begin(), wchi_ex_cosets_.end());
  wchi_ex_cosets_.erase(std::unique(wchi_ex_cosets_.begin(), wchi_ex_cosets_.end()), wchi_ex_cosets_.end());
  for (const auto& c : wchi_ex_cosets_)
    if (!std::binary_search(wchi_cosets_.begin(), wchi_cosets_.end(), c))
      throw std::logic_error("W_{chi,ex} is not contained in W_chi");

  std::set<ExtendedAffineElement> seen;
  for (const auto& g : wchi_generators()) {
    ExtendedAffineElement om = omega_part(g);
    if (om.is_identity()) continue;
    if (seen.insert(om).second) omega_gens_.push_back(om);
  }
  std::sort(omega_gens_.begin(), omega_gens_.end());
}

WCoset ChiGeometry::coset_of(const ExtendedAffineElement& g) const {
  return {g.linear, cover().yqn().reduce(g.translation)};
}

bool ChiGeometry::fixes_chi(const ExtendedAffineElement& g) const { return weyl_act_char(g, chi_) == chi_; }

bool ChiGeometry::in_wchi(const ExtendedAffineElement& g) const {
  return std::binary_search(wchi_cosets_.begin(), wchi_cosets_.end(), coset_of(g));
}

bool ChiGeometry::in_wchi_ex(const ExtendedAffineElement& g) const {
  return std::binary_search(wchi_ex_cosets_.begin(), wchi_ex_cosets_.end(), coset_of(g));
}

bool ChiGeometry::in_alcove(const RatVec& x) const {
  for (const auto& a : delta_chi_)
    if (evaluate(datum(), a, x) <= 0) return false;
  return true;
}

bool ChiGeometry::in_omega(const ExtendedAffineElement& g) const { return in_wchi(g) && in_alcove(g.act(x0_)); }

Int ChiGeometry::chi_length(const ExtendedAffineElement& g) const {
  return inversion_count(datum(), system_.affine, g);
}

Decomposition ChiGeometry::decompose(const ExtendedAffineElement& g) const {
  if (!in_wchi(g)) throw std::domain_error("element " + to_string(g) + " does not stabilize chi");
  auto [h, used] = walk_to_alcove(datum(), delta_chi_, g.act(x0_));
  return {used, h * g};
}

Int ChiGeometry::wchi_ex_index() const {
  return static_cast<Int>(wchi_cosets_.size() / wchi_ex_cosets_.size());
}

std::vector<ExtendedAffineElement> ChiGeometry::wchi_ex_generators() const {
  const auto& d = datum();
  std::vector<ExtendedAffineElement> out;
  for (int a : diamond_simple_) {
    Rational p = d.pair_root(a, v_);
    out.push_back({reflection(d, a), scale(p.numerator(), d.coroot(a))});
  }
  for (const auto& b : cover().yqn_basis().columns()) out.push_back(ExtendedAffineElement::translation_by(b));
  return out;
}

std::vector<ExtendedAffineElement> ChiGeometry::wchi_generators() const {
  std::vector<ExtendedAffineElement> out;
  for (const auto& c : wchi_cosets_) out.push_back({c.w, c.rep});
  for (const auto& b : cover().yqn_basis().columns()) out.push_back(ExtendedAffineElement::translation_by(b));
  return out;
}

std::vector<ExtendedAffineElement> ChiGeometry::omega_ex_generators() const {
  std::set<ExtendedAffineElement> seen;
  std::vector<ExtendedAffineElement> out;
  for (const auto& g : wchi_ex_generators()) {
    ExtendedAffineElement om = omega_part(g);
    if (!om.is_identity() && seen.insert(om).second) out.push_back(om);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExtendedAffineElement random_word_element(const ChiGeometry& g, std::mt19937_64& rng, int max_length,
                                          bool ex_only) {
  const auto& d = g.datum();
  std::vector<ExtendedAffineElement> letters;
  for (const auto& a : g.delta_chi()) letters.push_back(affine_reflection(d, a));
  for (const auto& om : ex_only ? g.omega_ex_generators() : g.omega_generators()) {
    letters.push_back(om);
    letters.push_back(om.inverse());
  }
  ExtendedAffineElement w = ExtendedAffineElement::identity(d.rank());
  if (letters.empty()) return w;
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  const int l = len(rng);
  for (int i = 0; i < l; ++i) w = w * letters[pick(rng)];
  return w;
}

}  // namespace tamehecke
