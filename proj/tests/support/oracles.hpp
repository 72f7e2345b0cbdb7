#pragma once

// Independent reference computations used by the unit and acceptance tests.
// They work with plain affine maps x -> A x + b and brute-force enumeration
// rather than the library's semidirect-product formulas.

#include "tamehecke/shimura.hpp"

#include <map>
#include <memory>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using namespace tamehecke;

/// x -> A x + b.
struct Aff {
  IntMatrix A;
  IntVec b;
  friend bool operator<(const Aff& x, const Aff& y) {
    if (x.A != y.A) return x.A < y.A;
    return x.b < y.b;
  }
  friend bool operator==(const Aff&, const Aff&) = default;
};

inline Aff compose(const Aff& f, const Aff& g) { return {f.A * g.A, add(f.A * g.b, f.b)}; }

inline IntMatrix finite_order_inverse(const IntMatrix& A) {
  IntMatrix p = A, prev = IntMatrix::identity(A.rows());
  for (int k = 0; k < 1000; ++k) {
    if (p.is_identity()) return prev;
    prev = p;
    p = p * A;
  }
  throw std::logic_error("matrix has no finite order");
}

/// Reflection in the hyperplane <alpha, x> + k = 0.
inline Aff reflection(const RootDatum& d, int alpha, Int k) {
  const int r = d.rank();
  const IntVec& f = d.root_functional(alpha);
  const IntVec& c = d.coroot(alpha);
  IntMatrix A = IntMatrix::identity(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) A.at(i, j) -= c[i] * f[j];
  return {A, scale(-k, c)};
}

inline Aff translation(const IntVec& y) { return {IntMatrix::identity(static_cast<int>(y.size())), y}; }

inline ExtendedAffineElement to_element(const Aff& f) { return {f.A, finite_order_inverse(f.A) * f.b}; }
inline Aff from_element(const ExtendedAffineElement& w) { return {w.linear, w.linear * w.translation}; }

/// Highest roots: positive roots theta with theta + alpha_i never a root.
inline std::vector<int> highest_roots(const RootDatum& d) {
  std::vector<int> out;
  for (int i = 0; i < d.num_roots(); ++i) {
    if (!d.is_positive(i)) continue;
    bool top = true;
    for (int s : d.simple_indices())
      if (d.root_index(add(d.root(i), d.root(s)))) top = false;
    if (top) out.push_back(i);
  }
  return out;
}

/// Simple affine reflections: simple roots and -theta + 1.
inline std::vector<std::pair<int, Int>> simple_affine(const RootDatum& d) {
  std::vector<std::pair<int, Int>> out;
  for (int s : d.simple_indices()) out.emplace_back(s, 0);
  for (int t : highest_roots(d)) out.emplace_back(d.negative_of(t), 1);
  return out;
}

/// Word length in the simple affine reflections, by breadth-first search.
inline std::map<Aff, int> bfs_lengths(const RootDatum& d, int max_len) {
  std::vector<Aff> gens;
  for (auto [a, k] : simple_affine(d)) gens.push_back(reflection(d, a, k));
  const int r = d.rank();
  Aff id{IntMatrix::identity(r), IntVec(r, 0)};
  std::map<Aff, int> dist{{id, 0}};
  std::queue<Aff> q;
  q.push(id);
  while (!q.empty()) {
    Aff x = q.front();
    q.pop();
    int dx = dist[x];
    if (dx == max_len) continue;
    for (const auto& g : gens) {
      Aff y = compose(g, x);
      if (dist.emplace(y, dx + 1).second) q.push(y);
    }
  }
  return dist;
}

/// Point of the open fundamental alcove with distinct simple-root values.
inline RatVec generic_alcove_point(const RootDatum& d) {
  const int r = d.rank();
  const auto& simple = d.simple_indices();
  Int h = 0;
  for (int i = 0; i < d.num_roots(); ++i) h = std::max(h, d.height(i));
  std::vector<RatVec> rows;
  RatVec rhs;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    rows.push_back(to_rational(d.root_functional(simple[i])));
    rhs.push_back(Rational(20 * r + static_cast<Int>(i), 20 * r) / Rational(h + 2));
  }
  // Pin the central directions at small generic values.
  IntMatrix F(static_cast<int>(simple.size()), r);
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (int j = 0; j < r; ++j) F.at(static_cast<int>(i), j) = d.root_functional(simple[i])[j];
  IntMatrix K = integer_kernel(F);
  for (int c = 0; c < K.cols(); ++c) {
    rows.push_back(to_rational(K.column(c)));
    rhs.push_back(Rational(1, 11 + c));
  }
  auto x = solve_rational(rows, rhs);
  if (!x) throw std::logic_error("no alcove point");
  return *x;
}

/// Number of affine hyperplanes <alpha, .> + k = 0 strictly separating x and y (|k| <= K).
inline Int separating(const RootDatum& d, const RatVec& x, const RatVec& y, Int K) {
  Int count = 0;
  for (int a = 0; a < d.num_roots(); ++a) {
    if (!d.is_positive(a)) continue;
    for (Int k = -K; k <= K; ++k) {
      Rational fx = d.pair_root(a, x) + k, fy = d.pair_root(a, y) + k;
      if ((fx > 0 && fy < 0) || (fx < 0 && fy > 0)) ++count;
    }
  }
  return count;
}

inline RatVec apply(const Aff& f, const RatVec& x) { return add(f.A * x, to_rational(f.b)); }

/// Y_{Q,n} membership straight from the definition: B y = 0 mod n.
inline bool in_yqn(const QuadraticCover& c, const IntVec& y) {
  IntVec By = c.B_matrix() * y;
  for (Int v : By)
    if (mod(v, c.n()) != 0) return false;
  return true;
}

/// Finite Weyl group by closure of the simple reflections.
inline std::set<IntMatrix> weyl_closure(const RootDatum& d) {
  std::set<IntMatrix> out{IntMatrix::identity(d.rank())};
  std::vector<IntMatrix> frontier{IntMatrix::identity(d.rank())};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& w : frontier)
      for (int s : d.simple_indices()) {
        IntMatrix x = reflection(d, s, 0).A * w;
        if (out.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  return out;
}

/// Exponent of chi_{alpha+k} at the generator g, built from the Hilbert symbol directly.
inline Int affine_char_exponent(const GenuineCharacter& chi, int alpha, Int k) {
  const TameField& F = chi.field();
  Int Qa = chi.cover().Q_coroot(alpha);
  Int sym = F.hilbert(F.uniformizer(), F.generator()).exp;
  Int e = k * Qa * F.eps({sym}).exp + chi.value(chi.datum().coroot(alpha));
  return mod(e, F.unit_order());
}

}  // namespace oracle

namespace fixture {

using namespace tamehecke;

struct Setup {
  std::string name;
  std::shared_ptr<const CoverContext> ctx;
};

inline std::shared_ptr<const CoverContext> context(const RootDatum& d, const IntMatrix& D, Int n, Int p, Int f = 1) {
  return std::make_shared<CoverContext>(CoverContext{QuadraticCover(d, D, n), TameField(p, f, n)});
}

inline std::shared_ptr<const CoverContext> standard(const std::string& group, Int param, Int n, Int p) {
  RootDatum d = build_preset(group, {param});
  return context(d, standard_form(d, 1), n, p);
}

/// SL3 double cover, q = 5.
inline std::shared_ptr<const CoverContext> sl3_example() { return standard("SL", 3, 2, 5); }

/// GL2, n = 4, q = 5, D = [[1, -2], [0, 1]].
inline std::shared_ptr<const CoverContext> gl2_example() {
  return context(build_preset("GL", {2}), IntMatrix(std::vector<IntVec>{{1, -2}, {0, 1}}), 4, 5);
}

/// One cover per preset used in the property sweeps.
inline std::vector<Setup> sweep_presets() {
  return {
      {"SL2 n=2 q=5", standard("SL", 2, 2, 5)},
      {"SL2 n=4 q=5", standard("SL", 2, 4, 5)},
      {"SL3 n=2 q=5", sl3_example()},
      {"SL3 n=3 q=7", standard("SL", 3, 3, 7)},
      {"GL2 n=4 q=5", gl2_example()},
      {"GL2 n=2 q=5", standard("GL", 2, 2, 5)},
      {"Sp4 n=2 q=5", standard("Sp", 4, 2, 5)},
      {"Sp4 n=4 q=5", standard("Sp", 4, 4, 5)},
  };
}

inline GenuineCharacter random_character(const std::shared_ptr<const CoverContext>& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> dist(0, ctx->field.unit_order() - 1);
  IntVec m(ctx->cover.rank());
  for (auto& x : m) x = dist(rng);
  return GenuineCharacter(ctx, m);
}

/// Random word of length <= max_len in simple affine reflections and unit translations.
inline ExtendedAffineElement random_element(const RootDatum& d, std::mt19937_64& rng, int max_len) {
  std::vector<ExtendedAffineElement> gens;
  for (const auto& a : simple_affine_roots(d)) gens.push_back(affine_reflection(d, a));
  for (int j = 0; j < d.rank(); ++j) {
    IntVec e(d.rank(), 0);
    e[j] = 1;
    gens.push_back(ExtendedAffineElement::translation_by(e));
    e[j] = -1;
    gens.push_back(ExtendedAffineElement::translation_by(e));
  }
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  ExtendedAffineElement w = ExtendedAffineElement::identity(d.rank());
  for (int i = len(rng); i > 0; --i) w = w * gens[pick(rng)];
  return w;
}

}  // namespace fixture
