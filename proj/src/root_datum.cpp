#include "tamehecke/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace tamehecke {

namespace {

std::vector<IntVec> cartan_matrix(char type, int r) {
  std::vector<IntVec> a(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      if (r >= 2) a[r - 1][r - 2] = -2;  // alpha_r short
      break;
    case 'C':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      if (r >= 2) a[r - 2][r - 1] = -2;  // alpha_r long
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      if (r >= 3) link(r - 3, r - 1);
      break;
    case 'G':
      link(0, 1);
      a[1][0] = -3;  // alpha_1 long, alpha_2 short
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case 'E':
      // Bourbaki labelling: 1-3-4-5-6(-7-8), 2 attached to 4.
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < r; ++i) link(i, i + 1);
      break;
    default:
      throw std::invalid_argument("unknown Cartan type");
  }
  return a;
}

// a[i][j] = <alpha_j, alpha_i^vee>.
RootDatum from_cartan(char type, int r, bool simply_connected) {
  auto a = cartan_matrix(type, r);
  std::vector<IntVec> sr(r), sc(r);
  for (int i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    if (simply_connected) {
      sc[i] = e;
      IntVec col(r);
      for (int k = 0; k < r; ++k) col[k] = a[k][i];
      sr[i] = col;
    } else {
      sr[i] = e;
      sc[i] = a[i];
    }
  }
  return datum_from_simple(r, sr, sc, IntMatrix::identity(r));
}

IntVec unit(int n, int i) {
  IntVec e(n, 0);
  e[i] = 1;
  return e;
}

IntVec diff(int n, int i, int j) {
  IntVec e(n, 0);
  e[i] = 1;
  e[j] = -1;
  return e;
}

}  // namespace

RootDatum::RootDatum(int rank, std::vector<IntVec> roots, std::vector<IntVec> coroots,
                     std::vector<int> simple_indices, IntMatrix pairing)
    : rank_(rank),
      roots_(std::move(roots)),
      coroots_(std::move(coroots)),
      simple_(std::move(simple_indices)),
      pairing_(std::move(pairing)) {
  if (rank_ < 1) throw std::invalid_argument("root datum rank must be at least 1");
  if (pairing_.rows() != rank_ || pairing_.cols() != rank_)
    throw std::invalid_argument("pairing matrix must be rank x rank");
  if (roots_.size() != coroots_.size()) throw std::invalid_argument("roots and coroots must have equal length");
  const int N = num_roots();
  for (int i = 0; i < N; ++i) {
    if (static_cast<int>(roots_[i].size()) != rank_ || static_cast<int>(coroots_[i].size()) != rank_)
      throw std::invalid_argument("root or coroot has wrong dimension");
    if (!root_lookup_.emplace(roots_[i], i).second) throw std::invalid_argument("duplicate root");
    if (!coroot_lookup_.emplace(coroots_[i], i).second) throw std::invalid_argument("duplicate coroot");
  }
  functional_.resize(N);
  IntMatrix Pt = pairing_.transpose();
  for (int i = 0; i < N; ++i) functional_[i] = Pt * roots_[i];
  for (int i = 0; i < N; ++i) {
    if (dot(functional_[i], coroots_[i]) != 2) throw std::invalid_argument("<alpha, alpha^vee> != 2 for root " + std::to_string(i));
    for (int j = 0; j < N; ++j) {
      Int c = dot(functional_[j], coroots_[i]);
      IntVec refl = sub(roots_[j], scale(c, roots_[i]));
      auto it = root_lookup_.find(refl);
      if (it == root_lookup_.end()) throw std::invalid_argument("root system is not closed under reflections");
      Int cc = dot(functional_[i], coroots_[j]);
      IntVec crefl = sub(coroots_[j], scale(cc, coroots_[i]));
      if (coroots_[it->second] != crefl) throw std::invalid_argument("coroots are not closed under reflections");
    }
  }
  // Simple roots: independent, every root an integral same-sign combination.
  std::set<int> seen;
  for (int s : simple_) {
    if (s < 0 || s >= N) throw std::invalid_argument("simple index out of range");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate simple index");
  }
  const int r = num_simple();
  std::vector<RatVec> A(rank_, RatVec(r));
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < rank_; ++i) A[i][k] = roots_[simple_[k]][i];
  if (N > 0 && r == 0) throw std::invalid_argument("nonempty root system needs simple roots");
  if (r > 0) {
    IntMatrix S(rank_, r);
    for (int k = 0; k < r; ++k)
      for (int i = 0; i < rank_; ++i) S.at(i, k) = roots_[simple_[k]][i];
    if (hermite_column(S).rank != r) throw std::invalid_argument("simple roots are linearly dependent");
  }
  coeffs_.resize(N);
  positive_.resize(N);
  for (int i = 0; i < N; ++i) {
    auto sol = solve_rational(A, to_rational(roots_[i]));
    auto isol = sol ? to_integer(*sol) : std::nullopt;
    if (!isol) throw std::invalid_argument("root " + std::to_string(i) + " is not an integral combination of simple roots");
    bool pos = std::all_of(isol->begin(), isol->end(), [](Int c) { return c >= 0; });
    bool negv = std::all_of(isol->begin(), isol->end(), [](Int c) { return c <= 0; });
    if (!pos && !negv) throw std::invalid_argument("root " + std::to_string(i) + " has mixed-sign simple coefficients");
    coeffs_[i] = *isol;
    positive_[i] = pos;
  }
  negation_.resize(N);
  for (int i = 0; i < N; ++i) {
    auto it = root_lookup_.find(neg(roots_[i]));
    if (it == root_lookup_.end()) throw std::invalid_argument("root system is not symmetric");
    negation_[i] = it->second;
  }
  // Irreducible components from the Dynkin graph.
  component_of_.assign(N, -1);
  std::vector<int> comp_simple(r, -1);
  for (int k = 0; k < r; ++k) {
    if (comp_simple[k] >= 0) continue;
    RootComponent c;
    std::deque<int> queue{k};
    comp_simple[k] = static_cast<int>(components_.size());
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      c.simple.push_back(u);
      for (int v = 0; v < r; ++v)
        if (comp_simple[v] < 0 && dot(functional_[simple_[v]], coroots_[simple_[u]]) != 0) {
          comp_simple[v] = comp_simple[k];
          queue.push_back(v);
        }
    }
    std::sort(c.simple.begin(), c.simple.end());
    c.rank = static_cast<int>(c.simple.size());
    components_.push_back(c);
  }
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < r; ++k)
      if (coeffs_[i][k] != 0) component_of_[i] = comp_simple[k];
  for (auto& c : components_) {
    int npos = 0;
    for (int i = 0; i < N; ++i)
      if (positive_[i] && component_of_[i] == comp_simple[c.simple[0]]) ++npos;
    bool simply_laced = true;
    int short_end = -1;
    for (int u : c.simple)
      for (int v : c.simple) {
        if (u == v) continue;
        Int a = dot(functional_[simple_[v]], coroots_[simple_[u]]);
        if (a < -1) {
          simply_laced = false;
          short_end = u;
        }
      }
    const int m = c.rank;
    if (m == 1 || (simply_laced && npos == m * (m + 1) / 2)) {
      c.type = 'A';
    } else if (simply_laced && npos == m * (m - 1)) {
      c.type = 'D';
    } else if (simply_laced) {
      c.type = 'E';
    } else if (m == 2 && npos == 6) {
      c.type = 'G';
    } else if (m == 4 && npos == 24) {
      c.type = 'F';
    } else if (m == 2) {
      c.type = 'C';
    } else {
      // Short simple roots form a simply-laced connected block containing short_end.
      std::set<int> block{short_end};
      bool grown = true;
      while (grown) {
        grown = false;
        for (int u : c.simple)
          for (int v : c.simple)
            if (block.count(u) && !block.count(v) && dot(functional_[simple_[v]], coroots_[simple_[u]]) == -1 &&
                dot(functional_[simple_[u]], coroots_[simple_[v]]) == -1) {
              block.insert(v);
              grown = true;
            }
      }
      c.type = block.size() == 1 ? 'B' : 'C';
    }
  }
}

Int RootDatum::pair(const IntVec& x, const IntVec& y) const { return dot(x, pairing_ * y); }

Int RootDatum::height(int i) const {
  Int h = 0;
  for (Int c : coeffs_[i]) h += c;
  return h;
}

std::vector<int> RootDatum::positive_roots() const {
  std::vector<int> out;
  for (int i = 0; i < num_roots(); ++i)
    if (positive_[i]) out.push_back(i);
  return out;
}

std::vector<int> RootDatum::highest_roots() const {
  std::vector<int> out;
  for (int i = 0; i < num_roots(); ++i) {
    if (!positive_[i]) continue;
    bool top = true;
    for (int s : simple_)
      if (root_lookup_.count(add(roots_[i], roots_[s]))) top = false;
    if (top) out.push_back(i);
  }
  return out;
}

Int RootDatum::max_height() const {
  Int h = 0;
  for (int i = 0; i < num_roots(); ++i) h = std::max(h, height(i));
  return h;
}

std::optional<int> RootDatum::root_index(const IntVec& x) const {
  auto it = root_lookup_.find(x);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootDatum::coroot_index(const IntVec& y) const {
  auto it = coroot_lookup_.find(y);
  if (it == coroot_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<RootComponent> RootDatum::components() const { return components_; }

int RootDatum::component_of(int i) const { return component_of_.at(i); }

std::string RootDatum::label(int i) const {
  std::string s;
  const auto& c = coeffs_[i];
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (c[k] < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    Int a = c[k] < 0 ? -c[k] : c[k];
    if (a != 1) s += std::to_string(a);
    s += "a" + std::to_string(k + 1);
  }
  return s;
}

RootDatum datum_from_simple(int rank, const std::vector<IntVec>& simple_roots,
                            const std::vector<IntVec>& simple_coroots, const IntMatrix& pairing) {
  const int r = static_cast<int>(simple_roots.size());
  IntMatrix Pt = pairing.transpose();
  std::vector<IntVec> sfun(r);
  for (int k = 0; k < r; ++k) sfun[k] = Pt * simple_roots[k];
  std::map<IntVec, IntVec> found;  // root -> coroot
  std::deque<std::pair<IntVec, IntVec>> queue;
  for (int k = 0; k < r; ++k) {
    found.emplace(simple_roots[k], simple_coroots[k]);
    queue.emplace_back(simple_roots[k], simple_coroots[k]);
  }
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (int k = 0; k < r; ++k) {
      IntVec nx = sub(x, scale(dot(Pt * x, simple_coroots[k]), simple_roots[k]));
      IntVec ny = sub(y, scale(dot(sfun[k], y), simple_coroots[k]));
      if (found.emplace(nx, ny).second) {
        queue.emplace_back(nx, ny);
        if (found.size() > 100000) throw std::invalid_argument("root system generation does not terminate");
      }
    }
  }
  // Simple coefficients to order the roots.
  std::vector<RatVec> A(rank, RatVec(r));
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < rank; ++i) A[i][k] = simple_roots[k][i];
  struct Entry {
    IntVec coeff;
    IntVec root;
    IntVec coroot;
  };
  std::vector<Entry> pos, negs;
  for (const auto& [x, y] : found) {
    auto sol = solve_rational(A, to_rational(x));
    if (!sol) throw std::invalid_argument("generated root outside the span of the simple roots");
    auto c = to_integer(*sol);
    if (!c) throw std::invalid_argument("generated root has non-integral simple coefficients");
    bool p = std::all_of(c->begin(), c->end(), [](Int v) { return v >= 0; });
    (p ? pos : negs).push_back({*c, x, y});
  }
  auto height = [](const IntVec& c) {
    Int h = 0;
    for (Int v : c) h += v;
    return h;
  };
  auto cmp = [&](const Entry& a, const Entry& b) {
    Int ha = height(a.coeff), hb = height(b.coeff);
    if (ha != hb) return ha < hb;
    return a.coeff > b.coeff;
  };
  std::sort(pos.begin(), pos.end(), cmp);
  std::vector<IntVec> roots, coroots;
  for (const auto& e : pos) {
    roots.push_back(e.root);
    coroots.push_back(e.coroot);
  }
  for (const auto& e : pos) {
    roots.push_back(neg(e.root));
    coroots.push_back(neg(e.coroot));
  }
  if (negs.size() != pos.size()) throw std::invalid_argument("generated root system is not symmetric");
  std::vector<int> simple(r);
  for (int k = 0; k < r; ++k) {
    auto it = std::find(roots.begin(), roots.end(), simple_roots[k]);
    simple[k] = static_cast<int>(it - roots.begin());
  }
  return RootDatum(rank, roots, coroots, simple, pairing);
}

RootDatum build_preset(const std::string& name, const std::vector<Int>& params) {
  auto param = [&](Int lo) {
    if (params.size() != 1) throw std::invalid_argument("preset " + name + " expects one integer parameter");
    if (params[0] < lo) throw std::invalid_argument("preset " + name + ": rank below 1");
    return static_cast<int>(params[0]);
  };
  if (name == "SL") return from_cartan('A', param(2) - 1, true);
  if (name == "PGL") return from_cartan('A', param(2) - 1, false);
  if (name == "GL") {
    int n = param(1);
    std::vector<IntVec> s;
    for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
    if (n == 1) return RootDatum(1, {}, {}, {}, IntMatrix::identity(1));
    return datum_from_simple(n, s, s, IntMatrix::identity(n));
  }
  if (name == "Sp") {
    int m = param(2);
    if (m % 2 != 0) throw std::invalid_argument("preset Sp expects an even parameter");
    int r = m / 2;
    std::vector<IntVec> sr, sc;
    for (int i = 0; i + 1 < r; ++i) {
      sr.push_back(diff(r, i, i + 1));
      sc.push_back(diff(r, i, i + 1));
    }
    sr.push_back(scale(2, unit(r, r - 1)));
    sc.push_back(unit(r, r - 1));
    return datum_from_simple(r, sr, sc, IntMatrix::identity(r));
  }
  if (name == "SO") {
    int m = param(3);
    int r = m / 2;
    std::vector<IntVec> sr, sc;
    for (int i = 0; i + 1 < r; ++i) {
      sr.push_back(diff(r, i, i + 1));
      sc.push_back(diff(r, i, i + 1));
    }
    if (m % 2 == 1) {
      sr.push_back(unit(r, r - 1));
      sc.push_back(scale(2, unit(r, r - 1)));
    } else if (r == 2) {
      IntVec v{1, 1};
      sr.push_back(v);
      sc.push_back(v);
    } else {
      IntVec v(r, 0);
      v[r - 2] = v[r - 1] = 1;
      sr.push_back(v);
      sc.push_back(v);
    }
    return datum_from_simple(r, sr, sc, IntMatrix::identity(r));
  }
  if (name == "G2") return from_cartan('G', 2, true);
  if (name == "F4") return from_cartan('F', 4, true);
  if (name == "E6") return from_cartan('E', 6, true);
  if (name == "E7") return from_cartan('E', 7, true);
  if (name == "E8") return from_cartan('E', 8, true);
  if (name.size() == 4 && name[1] == '_' && (name.substr(2) == "sc" || name.substr(2) == "ad")) {
    char t = name[0];
    bool sc = name.substr(2) == "sc";
    int r = param(1);
    if (t == 'A') return from_cartan('A', r, sc);
    if ((t == 'B' || t == 'C') && r >= 2) return from_cartan(t, r, sc);
    if (t == 'D' && r >= 3) return from_cartan('D', r, sc);
    throw std::invalid_argument("preset " + name + ": unsupported rank");
  }
  throw std::invalid_argument("unknown preset tag: " + name);
}

WeylElement reflection(const RootDatum& d, int i) {
  const int r = d.rank();
  WeylElement m = IntMatrix::identity(r);
  const IntVec& c = d.coroot(i);
  const IntVec& f = d.root_functional(i);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) m.at(a, b) -= c[a] * f[b];
  return m;
}

int weyl_root_image(const RootDatum& d, const WeylElement& w, int i) {
  auto j = d.coroot_index(w * d.coroot(i));
  if (!j) throw std::domain_error("matrix does not permute the coroots");
  return *j;
}

std::vector<int> reduced_word(const RootDatum& d, const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  const auto& simple = d.simple_indices();
  while (!cur.is_identity()) {
    bool found = false;
    for (std::size_t k = 0; k < simple.size() && !found; ++k) {
      if (d.is_positive(weyl_root_image(d, cur, simple[k]))) continue;
      // Right descent: cur = (cur s_k) s_k.
      word.push_back(static_cast<int>(k));
      cur = cur * reflection(d, simple[k]);
      found = true;
    }
    if (!found) throw std::domain_error("matrix is not a Weyl group element");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string word_string(const RootDatum& d, const WeylElement& w) {
  auto word = reduced_word(d, w);
  if (word.empty()) return "1";
  std::string s;
  for (int k : word) s += "s" + std::to_string(k + 1);
  return s;
}

std::vector<WeylElement> weyl_group(const RootDatum& d) {
  std::vector<WeylElement> gens;
  for (int s : d.simple_indices()) gens.push_back(reflection(d, s));
  std::vector<WeylElement> out{IntMatrix::identity(d.rank())};
  std::set<WeylElement> seen{out[0]};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      WeylElement w = g * out[k];
      if (seen.insert(w).second) out.push_back(w);
    }
  return out;
}

int weyl_length(const RootDatum& d, const WeylElement& w) {
  int l = 0;
  for (int i : d.positive_roots())
    if (!d.is_positive(weyl_root_image(d, w, i))) ++l;
  return l;
}

bool is_weyl_automorphism(const RootDatum& d, const WeylElement& w) {
  if (w.rows() != d.rank() || w.cols() != d.rank()) return false;
  std::set<int> image;
  for (int i = 0; i < d.num_roots(); ++i) {
    auto j = d.coroot_index(w * d.coroot(i));
    if (!j) return false;
    image.insert(*j);
  }
  return static_cast<int>(image.size()) == d.num_roots();
}

}  // namespace tamehecke
