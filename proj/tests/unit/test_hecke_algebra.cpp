#include "oracles.hpp"

#include <doctest.h>

using namespace tamehecke;

namespace {

Laurent random_laurent(std::mt19937_64& rng) {
  Laurent l;
  for (int i = 0; i < 3; ++i) l += Laurent::monomial(static_cast<Int>(rng() % 7) - 3, static_cast<Int>(rng() % 9) - 4);
  return l;
}

HeckeElement random_hecke(const HeckeAlgebra& h, std::mt19937_64& rng) {
  HeckeElement x;
  for (int i = 0; i < 2; ++i)
    x = x + h.e(random_word_element(h.geometry(), rng, 4)).scaled(random_laurent(rng));
  return x;
}

}  // namespace

TEST_CASE("Laurent polynomials form a commutative ring") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 300; ++t) {
    Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a * Laurent(1) == a);
    Laurent ab = a * b;
    for (const auto& [e, k] : ab.terms()) CHECK(k != 0);
  }
  Laurent c = Laurent::quadratic_parameter();
  CHECK(c == Laurent::monomial(1) - Laurent::monomial(-1));
  CHECK(to_string(Laurent(0)) == "0");
}

TEST_CASE("specialization") {
  Laurent c = Laurent::quadratic_parameter();
  CHECK(specialize(c, Rational(1)) == QuadraticNumber{0, 0});
  CHECK(specialize(c, Rational(4)) == QuadraticNumber{Rational(3, 2), 0});
  CHECK(specialize(c, Rational(5)) == QuadraticNumber{0, Rational(4, 5)});
  CHECK(specialize(Laurent(1), Rational(7)) == QuadraticNumber{1, 0});
}

TEST_CASE("defining relations on the SL3 example") {
  auto ctx = fixture::sl3_example();
  ChiGeometry g(GenuineCharacter(ctx, {2, 2}));
  HeckeAlgebra h(g);
  const RootDatum& d = g.datum();
  const Laurent c = Laurent::quadratic_parameter();
  auto one = h.identity();
  CHECK(h.mul(one, one) == one);
  CHECK(one.terms().size() == 1);
  CHECK(one.terms().begin()->first.is_identity());

  for (const auto& a : g.delta_chi()) {
    auto ea = h.e_simple(a);
    CHECK(h.mul(one, ea) == ea);
    CHECK(h.mul(ea, ea) == one + ea.scaled(c));
    CHECK(h.mul(ea, h.invert_simple(a)) == one);
    CHECK(h.mul(h.invert_simple(a), ea) == one);
    // q = 1: e_a is an involution.
    auto sq = h.specialize_q(h.mul(ea, ea), Rational(1));
    CHECK(sq.size() == 1);
    // q = 4: e_a^2 = 1 + (3/2) e_a.
    auto q4 = h.specialize_q(h.mul(ea, ea), Rational(4));
    CHECK(q4.at(ExtendedAffineElement::identity(2)) == QuadraticNumber{1, 0});
    CHECK(q4.at(affine_reflection(d, a)) == QuadraticNumber{Rational(3, 2), 0});
  }
  std::mt19937_64 rng(52);
  for (int t = 0; t < 100; ++t) {
    auto w = random_word_element(g, rng, 5);
    for (const auto& a : g.delta_chi()) {
      if (!is_positive(d, affine_action(d, w.inverse(), a))) continue;
      CHECK(h.mul(h.e_simple(a), h.e(w)) == h.e(affine_reflection(d, a) * w));
    }
  }
  // braid relations of length 3
  const auto& delta = g.delta_chi();
  for (std::size_t i = 0; i < delta.size(); ++i)
    for (std::size_t j = i + 1; j < delta.size(); ++j) {
      auto x = h.e_simple(delta[i]), y = h.e_simple(delta[j]);
      CHECK(h.mul(h.mul(x, y), x) == h.mul(h.mul(y, x), y));
    }
}

TEST_CASE("Omega part relations and the W_ex subalgebra on the GL2 example") {
  auto ctx = fixture::gl2_example();
  ChiGeometry g(GenuineCharacter(ctx, {2, 0}));
  HeckeAlgebra h(g);
  const RootDatum& d = g.datum();
  auto s = ExtendedAffineElement::weyl(reflection(d, d.simple(0)));
  auto se1 = s * ExtendedAffineElement::translation_by({1, 0});
  auto t = ExtendedAffineElement::translation_by({1, 1});
  CHECK(h.mul(h.e(se1), h.e(t)) == h.e(se1 * t));
  CHECK(h.mul(h.e(se1), h.invert_omega(se1)) == h.identity());
  CHECK(h.invert_omega(se1) == h.e(se1.inverse()));
  CHECK(h.in_subalgebra_ex(h.identity()));
  CHECK_FALSE(h.in_subalgebra_ex(h.e(se1)));
  CHECK(h.in_subalgebra_ex(h.mul(h.e(t), h.e(t))));
  auto mixed = h.e(se1) + h.e(t);
  CHECK(h.restrict_to_ex(mixed) == h.e(t));
  CHECK_THROWS_AS(h.e(s), std::domain_error);
}

TEST_CASE("algebra is associative and closed on every preset") {
  std::mt19937_64 rng(53);
  for (const auto& s : fixture::sweep_presets()) {
    for (int t = 0; t < 3; ++t) {
      ChiGeometry g(fixture::random_character(s.ctx, rng));
      HeckeAlgebra h(g);
      for (int k = 0; k < 30; ++k) {
        auto x = random_hecke(h, rng), y = random_hecke(h, rng), z = random_hecke(h, rng);
        auto xy_z = h.mul(h.mul(x, y), z);
        CHECK(xy_z == h.mul(x, h.mul(y, z)));
        for (const auto& [w, coeff] : xy_z.terms()) {
          CHECK(g.in_wchi(w));
          CHECK_FALSE(coeff.is_zero());
        }
        auto ex1 = h.e(random_word_element(g, rng, 4, true)), ex2 = h.e(random_word_element(g, rng, 4, true));
        CHECK(h.in_subalgebra_ex(h.mul(ex1, ex2)));
      }
      for (const auto& om : g.omega_generators()) {
        CHECK(h.mul(h.e(om), h.invert_omega(om)) == h.identity());
        CHECK(h.mul(h.invert_omega(om), h.e(om)) == h.identity());
      }
    }
  }
}

TEST_CASE("relation report passes on every preset") {
  std::mt19937_64 rng(54);
  for (const auto& s : fixture::sweep_presets()) {
    for (int t = 0; t < 2; ++t) {
      ChiGeometry g(fixture::random_character(s.ctx, rng));
      HeckeAlgebra h(g);
      RelationOptions opts;
      opts.seed = 9 + t;
      opts.associativity_samples = 40;
      for (const auto& r : verify_relations(h, opts)) {
        CAPTURE(s.name);
        CAPTURE(r.name);
        CAPTURE(r.witness);
        CHECK(r.ok);
      }
    }
  }
}
