#include "oracles.hpp"

#include <doctest.h>

using namespace tamehecke;

namespace {

AffineRoot root_plus(int root, Int k) { return AffineRoot{root, k}; }

std::set<AffineRoot> as_set(const std::vector<AffineRoot>& v) { return {v.begin(), v.end()}; }

/// All elements reached by words of length <= len in the Delta_af reflections.
std::vector<ExtendedAffineElement> small_elements(const RootDatum& d, int len) {
  std::vector<ExtendedAffineElement> out;
  for (const auto& [aff, l] : oracle::bfs_lengths(d, len)) out.push_back(oracle::to_element(aff));
  return out;
}

}  // namespace

TEST_CASE("composition law agrees with the action on V") {
  std::mt19937_64 rng(3);
  for (const char* g : {"SL", "GL", "Sp"}) {
    RootDatum d = build_preset(g, {g[0] == 'S' && g[1] == 'p' ? Int(4) : Int(3)});
    RatVec x = oracle::generic_alcove_point(d);
    for (int t = 0; t < 100; ++t) {
      auto a = fixture::random_element(d, rng, 5), b = fixture::random_element(d, rng, 5);
      CHECK((a * b).act(x) == a.act(b.act(x)));
      CHECK(oracle::from_element(a * b) == oracle::compose(oracle::from_element(a), oracle::from_element(b)));
      CHECK((a * a.inverse()).is_identity());
      CHECK(oracle::apply(oracle::from_element(a), x) == a.act(x));
    }
  }
}

TEST_CASE("affine reflections match the orthogonal reflection formula") {
  RootDatum d = build_preset("Sp", {4});
  for (int i = 0; i < d.num_roots(); ++i)
    for (Int k = -3; k <= 3; ++k) {
      auto s = affine_reflection(d, root_plus(i, k));
      CHECK(oracle::from_element(s) == oracle::reflection(d, i, k));
      CHECK((s * s).is_identity());
    }
}

TEST_CASE("affine action formula and group action property") {
  RootDatum sl2 = build_preset("SL", {2});
  int a = sl2.simple(0);
  auto t = ExtendedAffineElement::translation_by({1});
  CHECK(affine_action(sl2, t, root_plus(a, 0)) == root_plus(a, -2));
  CHECK(affine_action(sl2, ExtendedAffineElement::identity(1), root_plus(a, 5)) == root_plus(a, 5));

  std::mt19937_64 rng(4);
  for (const auto& s : fixture::sweep_presets()) {
    const RootDatum& d = s.ctx->cover.datum();
    RatVec x = oracle::generic_alcove_point(d);
    for (int trial = 0; trial < 60; ++trial) {
      auto w1 = fixture::random_element(d, rng, 4), w2 = fixture::random_element(d, rng, 4);
      AffineRoot b{static_cast<int>(rng() % d.num_roots()), static_cast<Int>(rng() % 7) - 3};
      CHECK(affine_action(d, w1 * w2, b) == affine_action(d, w1, affine_action(d, w2, b)));
      // (w a)(w x) = a(x)
      CHECK(evaluate(d, affine_action(d, w1, b), w1.act(x)) == evaluate(d, b, x));
    }
  }
}

TEST_CASE("inversion sets of small elements") {
  RootDatum sl2 = build_preset("SL", {2});
  int a = sl2.simple(0);
  CHECK(n_set(sl2, ExtendedAffineElement::identity(1)).empty());
  CHECK(as_set(n_set(sl2, affine_reflection(sl2, root_plus(a, 0)))) == std::set<AffineRoot>{root_plus(a, 0)});
  auto t = ExtendedAffineElement::translation_by({1});
  CHECK(as_set(n_set(sl2, t)) == std::set<AffineRoot>{root_plus(a, 0), root_plus(a, 1)});
  CHECK(length(sl2, t) == 2);
}

TEST_CASE("simple affine roots") {
  RootDatum sl2 = build_preset("SL", {2});
  CHECK(simple_affine_roots(sl2).size() == 2);
  RootDatum sl3 = build_preset("SL", {3});
  auto s3 = simple_affine_roots(sl3);
  REQUIRE(s3.size() == 3);
  CHECK(sl3.label(s3[2].root) == "-a1-a2");
  CHECK(s3[2].offset == 1);
  CHECK(simple_affine_roots(build_preset("Sp", {4})).size() == 3);
  for (const auto& s : fixture::sweep_presets()) {
    const RootDatum& d = s.ctx->cover.datum();
    for (const auto& b : simple_affine_roots(d)) {
      CHECK(length(d, affine_reflection(d, b)) == 1);
      CHECK(is_positive(d, b));
    }
  }
}

TEST_CASE("alcove point lies inside the fundamental alcove") {
  for (const auto& s : fixture::sweep_presets()) {
    const RootDatum& d = s.ctx->cover.datum();
    RatVec x = alcove_point(d);
    for (const auto& b : simple_affine_roots(d)) CHECK(evaluate(d, b, x) > 0);
  }
}

TEST_CASE("length equals wall count equals inversion set size") {
  for (const char* g : {"SL", "GL", "Sp"}) {
    RootDatum d = build_preset(g, {g[1] == 'p' ? Int(4) : Int(3)});
    RatVec x = oracle::generic_alcove_point(d);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
      auto w = fixture::random_element(d, rng, 6);
      Int l = length(d, w);
      CHECK(static_cast<Int>(n_set(d, w).size()) == l);
      CHECK(length_by_walls(d, w) == l);
      CHECK(oracle::separating(d, x, w.act(x), 30) == l);
      CHECK(length(d, w.inverse()) == l);
    }
  }
}

TEST_CASE("length agrees with breadth-first word length") {
  for (auto [group, param, depth] : std::vector<std::tuple<std::string, Int, int>>{{"SL", 2, 8}, {"SL", 3, 5}}) {
    RootDatum d = build_preset(group, {param});
    for (const auto& [aff, l] : oracle::bfs_lengths(d, depth)) CHECK(length(d, oracle::to_element(aff)) == l);
  }
}

TEST_CASE("length additivity holds iff inversion sets nest") {
  for (const char* g : {"SL2", "SL3", "GL2", "Sp4"}) {
    std::string name(g);
    RootDatum d = build_preset(name.substr(0, name.size() - 1), {Int(name.back() - '0')});
    auto elems = small_elements(d, 4);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        const auto& w1 = elems[i];
        const auto& w2 = elems[j];
        bool additive = length(d, w1 * w2) == length(d, w1) + length(d, w2);
        auto n2 = as_set(n_set(d, w2)), n12 = as_set(n_set(d, w1 * w2));
        bool nested = std::includes(n12.begin(), n12.end(), n2.begin(), n2.end());
        CHECK(additive == nested);
      }
  }
}

TEST_CASE("left multiplication by a simple reflection changes length by one") {
  for (const auto& s : fixture::sweep_presets()) {
    const RootDatum& d = s.ctx->cover.datum();
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
      auto w = fixture::random_element(d, rng, 5);
      for (const auto& b : simple_affine_roots(d)) {
        Int lw = length(d, w);
        Int lsw = length(d, affine_reflection(d, b) * w);
        bool up = is_positive(d, affine_action(d, w.inverse(), b));
        CHECK(lsw == (up ? lw + 1 : lw - 1));
      }
    }
  }
}
