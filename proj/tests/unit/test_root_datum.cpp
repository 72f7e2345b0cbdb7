#include "oracles.hpp"

#include <doctest.h>

using namespace tamehecke;

namespace {

void check_axioms(const RootDatum& d) {
  for (int i = 0; i < d.num_roots(); ++i) {
    CHECK(d.pair(d.root(i), d.coroot(i)) == 2);
    for (int j = 0; j < d.num_roots(); ++j) {
      IntVec img = sub(d.root(j), scale(d.pair(d.root(j), d.coroot(i)), d.root(i)));
      CHECK(d.root_index(img).has_value());
    }
    const IntVec& c = d.simple_coefficients(i);
    bool nonneg = std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](Int x) { return x <= 0; });
    CHECK((nonneg || nonpos));
  }
}

}  // namespace

TEST_CASE("presets satisfy the root datum axioms") {
  for (auto [name, param] : std::vector<std::pair<std::string, Int>>{
           {"SL", 2}, {"SL", 3}, {"SL", 4}, {"GL", 2}, {"GL", 3}, {"PGL", 3}, {"Sp", 4}, {"Sp", 6}, {"SO", 5}, {"SO", 8}}) {
    CAPTURE(name);
    CAPTURE(param);
    check_axioms(build_preset(name, {param}));
  }
  check_axioms(build_preset("G2", {}));
  check_axioms(build_preset("F4", {}));
}

TEST_CASE("preset shapes") {
  RootDatum sl2 = build_preset("SL", {2});
  CHECK(sl2.rank() == 1);
  CHECK(sl2.positive_roots().size() == 1);
  RootDatum gl2 = build_preset("GL", {2});
  CHECK(gl2.rank() == 2);
  CHECK(gl2.coroot(gl2.simple(0)) == IntVec{1, -1});
  RootDatum sl3 = build_preset("SL", {3});
  CHECK(sl3.num_roots() == 6);
  CHECK(sl3.num_simple() == 2);
  CHECK(build_preset("E8", {}).num_roots() == 240);
}

TEST_CASE("unknown presets and bad ranks are rejected") {
  CHECK_THROWS_AS(build_preset("XY", {2}), std::invalid_argument);
  CHECK_THROWS_AS(build_preset("SL", {0}), std::invalid_argument);
  CHECK_THROWS_AS(build_preset("Sp", {3}), std::invalid_argument);
}

TEST_CASE("explicit data violating the axioms are rejected") {
  CHECK_THROWS_AS(RootDatum(1, {{1}, {-1}}, {{1}, {-1}}, {0}, IntMatrix::identity(1)), std::invalid_argument);
  CHECK_NOTHROW(RootDatum(1, {{2}, {-2}}, {{1}, {-1}}, {0}, IntMatrix::identity(1)));
}

TEST_CASE("Weyl group orders agree with brute-force closure") {
  for (auto [name, param, order] : std::vector<std::tuple<std::string, Int, std::size_t>>{
           {"SL", 2, 2}, {"SL", 3, 6}, {"GL", 2, 2}, {"Sp", 4, 8}, {"SL", 4, 24}, {"SO", 7, 48}}) {
    RootDatum d = build_preset(name, {param});
    auto W = weyl_group(d);
    CHECK(W.size() == order);
    auto closure = oracle::weyl_closure(d);
    CHECK(closure.size() == order);
    for (const auto& w : W) {
      CHECK(closure.count(w) == 1);
      CHECK(is_weyl_automorphism(d, w));
    }
    CHECK(W.front().is_identity());
  }
}

TEST_CASE("Weyl elements permute coroots and preserve the pairing") {
  RootDatum d = build_preset("Sp", {4});
  for (const auto& w : weyl_group(d))
    for (int i = 0; i < d.num_roots(); ++i) {
      auto c = d.coroot_index(w * d.coroot(i));
      REQUIRE(c);
      int j = weyl_root_image(d, w, i);
      CHECK(*c == j);
      for (int k = 0; k < d.num_roots(); ++k)
        CHECK(d.pair(d.root(weyl_root_image(d, w, k)), w * d.coroot(i)) == d.pair(d.root(k), d.coroot(i)));
    }
}

TEST_CASE("reduced words multiply back and have Weyl length") {
  for (auto name : {"SL", "Sp"}) {
    RootDatum d = build_preset(name, {4});
    for (const auto& w : weyl_group(d)) {
      auto word = reduced_word(d, w);
      CHECK(static_cast<int>(word.size()) == weyl_length(d, w));
      IntMatrix x = IntMatrix::identity(d.rank());
      for (int k : word) x = x * reflection(d, d.simple(k));
      CHECK(x == w);
    }
  }
  RootDatum sl3 = build_preset("SL", {3});
  int ab = *sl3.root_index(add(sl3.root(sl3.simple(0)), sl3.root(sl3.simple(1))));
  CHECK(word_string(sl3, reflection(sl3, ab)) == "s1s2s1");
  CHECK(word_string(sl3, IntMatrix::identity(2)) == "1");
}

TEST_CASE("labels and highest roots") {
  RootDatum sl3 = build_preset("SL", {3});
  auto hi = sl3.highest_roots();
  REQUIRE(hi.size() == 1);
  CHECK(sl3.label(hi[0]) == "a1+a2");
  CHECK(hi == oracle::highest_roots(sl3));
  RootDatum gl3 = build_preset("GL", {3});
  CHECK(gl3.highest_roots() == oracle::highest_roots(gl3));
  CHECK(sl3.components().size() == 1);
  CHECK(sl3.components()[0].name() == "A2");
  CHECK(build_preset("SO", {8}).components()[0].name() == "D4");
}
