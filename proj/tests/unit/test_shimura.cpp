#include "oracles.hpp"

#include <doctest.h>

using namespace tamehecke;

namespace {

/// Elements of W_chi of order exactly 2 with translation in [-B, B]^r, by exhaustive scan.
int order_two_count(const ChiGeometry& g, Int B) {
  const int r = g.datum().rank();
  int count = 0;
  for (const auto& w : g.weyl()) {
    IntVec y(r, -B);
    while (true) {
      ExtendedAffineElement e{w, y};
      if (!e.is_identity() && g.in_wchi(e) && (e * e).is_identity()) ++count;
      int i = 0;
      while (i < r && ++y[i] > B) y[i++] = -B;
      if (i == r) break;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("linear context and transferred characters") {
  auto ctx = fixture::gl2_example();
  GenuineCharacter chi(ctx, {2, 0});
  auto endo = ctx->cover.endoscopic_datum();
  auto chq = transfer_char(chi, endo);
  CHECK(chq.cover().n() == 1);
  CHECK(chq.cover().D() == IntMatrix(2, 2));
  CHECK(chq.field().q() == 5);
  CHECK(chq.m() == IntVec{2, 0});
  for (int j = 0; j < 2; ++j) {
    IntVec e(2, 0);
    e[j] = 1;
    CHECK(chq.value(e) == chi.value(endo.lattice_basis.column(j)));
  }
  GenuineCharacter triv(ctx, {0, 0});
  CHECK(transfer_char(triv, endo).m() == IntVec{0, 0});

  // SL3 double cover: chi_Qn on alpha^vee_Qn = 2 alpha^vee is trivial.
  auto sl3 = fixture::sl3_example();
  GenuineCharacter c3(sl3, {2, 2});
  auto e3 = sl3->cover.endoscopic_datum();
  auto t3 = transfer_char(c3, e3);
  for (int a = 0; a < e3.datum_Qn.num_roots(); ++a) CHECK(t3.value(e3.datum_Qn.coroot(a)) == 0);

  GenuineCharacter deep(sl3, {0, 0}, {{0, 3}});
  CHECK_THROWS_AS(transfer_char(deep, e3), std::domain_error);
}

TEST_CASE("Psi on the SL3 example") {
  auto ctx = fixture::sl3_example();
  auto s = make_shimura_setup(GenuineCharacter(ctx, {2, 2}));
  const auto& map = *s.map;
  const RootDatum& d = ctx->cover.datum();
  int ab = *d.root_index(add(d.root(d.simple(0)), d.root(d.simple(1))));
  // Psi is conjugation by s_{a+b} t_{-a^vee - b^vee} after Psi_1.
  AffineMap n = AffineMap::from(ExtendedAffineElement{reflection(d, ab), IntVec{-1, -1}});
  std::mt19937_64 rng(61);
  for (int t = 0; t < 30; ++t) {
    auto w = random_word_element(*s.endo_geometry, rng, 4, true);
    auto expect = (n.inverse() * AffineMap::from(map.psi1(w)) * n).to_element();
    CHECK(map.psi(w) == expect);
    CHECK(s.cover_geometry->in_wchi_ex(map.psi(w)));
  }
  auto v = upsilon_check(map);
  CHECK(v.ok());
  auto full = fullness_and_torsion(*s.cover_geometry, *s.endo_geometry);
  CHECK(full.verdict == FullVerdict::isomorphic);
}

TEST_CASE("GL2 example: the full algebras differ") {
  auto ctx = fixture::gl2_example();
  auto s = make_shimura_setup(GenuineCharacter(ctx, {2, 0}));
  const auto& map = *s.map;
  // Psi is the identity on the lattice.
  for (const auto& y : s.endo.lattice_basis.columns()) {
    IntVec e = y;  // any lattice vector in endoscopic coordinates
    CHECK(map.psi(ExtendedAffineElement::translation_by(e)) ==
          ExtendedAffineElement::translation_by(s.endo.lattice_basis * e));
  }
  auto v = upsilon_check(map);
  CHECK(v.ok());
  auto full = fullness_and_torsion(*s.cover_geometry, *s.endo_geometry);
  CHECK(full.index_cover == 2);
  CHECK(full.index_endo == 2);
  CHECK(full.torsion_endo.found);
  CHECK(full.torsion_endo.witness.linear == reflection(s.endo.datum_Qn, s.endo.datum_Qn.simple(0)));
  CHECK((full.torsion_endo.witness * full.torsion_endo.witness).is_identity());
  CHECK_FALSE(full.torsion_cover.found);
  CHECK(full.torsion_cover.exact);
  CHECK(full.verdict == FullVerdict::not_isomorphic);
  CHECK(to_string(full.verdict) == "not isomorphic");
  // Exhaustive scan over a box agrees with the torsion verdicts.
  CHECK(order_two_count(*s.cover_geometry, 4) == 0);
  CHECK(order_two_count(*s.endo_geometry, 4) > 0);
}

TEST_CASE("trivial character on the SL2 double cover") {
  auto ctx = fixture::standard("SL", 2, 2, 5);
  auto s = make_shimura_setup(GenuineCharacter(ctx, {0}));
  const RootDatum& d = ctx->cover.datum();
  int a = d.simple(0);
  CHECK(s.cover_geometry->normalizer().linear.is_identity());
  for (Int k = -3; k <= 3; ++k)
    CHECK(s.map->transport_root({a, k}) == AffineRoot{a, 2 * k});
  CHECK(upsilon_check(*s.map).ok());
  CHECK(fullness_and_torsion(*s.cover_geometry, *s.endo_geometry).verdict == FullVerdict::isomorphic);
}

TEST_CASE("Psi is a homomorphism with inverse, and walls correspond") {
  std::mt19937_64 rng(62);
  for (const auto& p : fixture::sweep_presets()) {
    for (int t = 0; t < 4; ++t) {
      auto chi = fixture::random_character(p.ctx, rng);
      auto s = make_shimura_setup(chi);
      const auto& map = *s.map;
      const auto& cg = *s.cover_geometry;
      const auto& eg = *s.endo_geometry;
      CAPTURE(p.name);
      CAPTURE(to_string(chi.m()));
      // Phi_{chi_Qn} = {alpha_Qn : alpha in Phi^diamond_chi}
      CHECK(eg.system().diamond_roots == cg.system().diamond_roots);
      // Walls of Phi_{chi_Qn,af} transported are exactly the Phi^diamond_{chi,af} walls.
      const RootDatum& d = cg.datum();
      for (int a = 0; a < d.num_roots(); ++a)
        for (Int k = -4; k <= 4; ++k) {
          CHECK(eg.system().affine.contains({a, k}) == cg.system().diamond_affine.contains(map.transport_root({a, k})));
          if (cg.system().diamond_affine.contains({a, k})) {
            Int na = p.ctx->cover.n_alpha(a);
            CHECK(k % na == 0);
            CHECK(eg.system().affine.contains({a, k / na}));
          }
        }
      for (int k = 0; k < 50; ++k) {
        auto w1 = random_word_element(eg, rng, 4, true), w2 = random_word_element(eg, rng, 4, true);
        CHECK(map.psi(w1 * w2) == map.psi(w1) * map.psi(w2));
        CHECK(map.psi_inverse(map.psi(w1)) == w1);
        CHECK(map.psi1_inverse(map.psi1(w1)) == w1);
        CHECK(cg.in_wchi_ex(map.psi(w1)));
      }
      for (const auto& a : eg.delta_chi()) {
        auto img = map.psi(affine_reflection(eg.datum(), a));
        bool found = false;
        for (const auto& b : cg.delta_chi())
          if (affine_reflection(d, b) == img) found = true;
        CHECK(found);
      }
      UpsilonOptions opts;
      opts.seed = 100 + t;
      auto v = upsilon_check(map, opts);
      if (!v.ok())
        for (const auto& f : v.failures) MESSAGE(f);
      CHECK(v.ok());
    }
  }
}

TEST_CASE("degree one: both sides coincide") {
  std::mt19937_64 rng(63);
  for (auto [g, param] : std::vector<std::pair<std::string, Int>>{{"SL", 2}, {"SL", 3}, {"GL", 2}, {"Sp", 4}}) {
    auto ctx = fixture::standard(g, param, 1, 7);
    for (int t = 0; t < 5; ++t) {
      auto chi = fixture::random_character(ctx, rng);
      auto s = make_shimura_setup(chi);
      CHECK(s.endo.lattice_basis == IntMatrix::identity(ctx->cover.rank()));
      CHECK(s.endo.datum_Qn == ctx->cover.datum());
      CHECK(s.endo_geometry->chi().m() == chi.m());
      CHECK(s.endo_geometry->delta_chi() == s.cover_geometry->delta_chi());
      CHECK(s.endo_geometry->wchi_cosets() == s.cover_geometry->wchi_cosets());
      CHECK(s.endo_geometry->omega_generators() == s.cover_geometry->omega_generators());
      auto full = fullness_and_torsion(*s.cover_geometry, *s.endo_geometry);
      CHECK(full.index_cover == full.index_endo);
      CHECK(full.torsion_cover.found == full.torsion_endo.found);
      CHECK(full.verdict == FullVerdict::isomorphic);
    }
  }
}
