#include "oracles.hpp"

#include <doctest.h>

using namespace tamehecke;

namespace {

/// Y_{Q,n} basis by scanning the box [0, n)^r and adding n e_j.
std::set<IntVec> yqn_box(const QuadraticCover& c) {
  const int r = c.rank();
  std::set<IntVec> out;
  IntVec y(r, 0);
  while (true) {
    if (oracle::in_yqn(c, y)) out.insert(y);
    int i = 0;
    while (i < r && ++y[i] == c.n()) y[i++] = 0;
    if (i == r) break;
  }
  return out;
}

}  // namespace

TEST_CASE("n_alpha values") {
  auto sl3 = fixture::sl3_example();
  for (int i = 0; i < sl3->cover.datum().num_roots(); ++i) {
    CHECK(sl3->cover.Q_coroot(i) == 1);
    CHECK(sl3->cover.n_alpha(i) == 2);
  }
  auto gl2 = fixture::gl2_example();
  int a = gl2->cover.datum().simple(0);
  CHECK(gl2->cover.Q_coroot(a) == 4);
  CHECK(gl2->cover.n_alpha(a) == 1);
  auto lin = fixture::standard("Sp", 4, 1, 5);
  for (int i = 0; i < lin->cover.datum().num_roots(); ++i) CHECK(lin->cover.n_alpha(i) == 1);
}

TEST_CASE("derived forms") {
  for (const auto& s : fixture::sweep_presets()) {
    const auto& c = s.ctx->cover;
    const RootDatum& d = c.datum();
    IntMatrix e = IntMatrix::identity(d.rank());
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j) {
        IntVec y = e.column(i), z = e.column(j);
        CHECK(c.B(y, z) == c.Q(add(y, z)) - c.Q(y) - c.Q(z));
        CHECK(c.B(y, z) == c.D(y, z) + c.D(z, y));
      }
    for (int a = 0; a < d.num_roots(); ++a)
      for (int i = 0; i < d.rank(); ++i) {
        IntVec y = e.column(i);
        CHECK(c.B(y, d.coroot(a)) == d.pair_root(a, y) * c.Q_coroot(a));
      }
    for (const auto& w : weyl_group(d))
      for (int i = 0; i < d.rank(); ++i) CHECK(c.Q(w * e.column(i)) == c.Q(e.column(i)));
  }
}

TEST_CASE("non-invariant forms are rejected") {
  RootDatum gl2 = build_preset("GL", {2});
  CHECK_THROWS_AS(QuadraticCover(gl2, IntMatrix(std::vector<IntVec>{{1, 0}, {0, 2}}), 2), std::invalid_argument);
  RootDatum sl3 = build_preset("SL", {3});
  CHECK_THROWS_AS(QuadraticCover(sl3, IntMatrix(std::vector<IntVec>{{1, 0}, {0, 1}}), 2), std::invalid_argument);
  CHECK_NOTHROW(QuadraticCover(gl2, IntMatrix(std::vector<IntVec>{{1, -2}, {0, 1}}), 4));
}

TEST_CASE("the lattice Y_Qn on the worked examples") {
  auto gl2 = fixture::gl2_example();
  CHECK(gl2->cover.B_matrix() == IntMatrix(std::vector<IntVec>{{2, -2}, {-2, 2}}));
  CHECK(gl2->cover.yqn_basis() == IntMatrix(std::vector<IntVec>{{1, 0}, {1, 2}}));
  // Same lattice as Z(e1 - e2) + Z(e1 + e2).
  CHECK(lattice_basis(IntMatrix(std::vector<IntVec>{{1, 1}, {-1, 1}})) == gl2->cover.yqn_basis());

  // SL2 with Q(a^vee) = 1, n = 2: B_Q(k a^vee, a^vee) = 2k is always even.
  auto sl2 = fixture::standard("SL", 2, 2, 5);
  CHECK(sl2->cover.yqn_basis() == IntMatrix(std::vector<IntVec>{{1}}));
  auto sl2n4 = fixture::standard("SL", 2, 4, 5);
  CHECK(sl2n4->cover.yqn_basis() == IntMatrix(std::vector<IntVec>{{2}}));

  auto lin = fixture::standard("SL", 3, 1, 5);
  CHECK(lin->cover.yqn_basis() == IntMatrix::identity(2));
}

TEST_CASE("Y_Qn matches a brute-force scan and kills B_Q mod n") {
  for (const auto& s : fixture::sweep_presets()) {
    const auto& c = s.ctx->cover;
    auto box = yqn_box(c);
    Int cube = 1;
    for (int i = 0; i < c.rank(); ++i) cube *= c.n();
    CHECK(cube / c.yqn().index() == static_cast<Int>(box.size()));
    for (const auto& y : box) CHECK(c.yqn().contains(y));
    for (const auto& col : c.yqn_basis().columns()) {
      CHECK(oracle::in_yqn(c, col));
      for (int a = 0; a < c.datum().num_roots(); ++a) CHECK(mod(c.B(col, c.datum().coroot(a)), c.n()) == 0);
    }
    for (int a = 0; a < c.datum().num_roots(); ++a)
      CHECK(c.yqn().contains(scale(c.n_alpha(a), c.datum().coroot(a))));
  }
}

TEST_CASE("endoscopic root datum") {
  for (const auto& s : fixture::sweep_presets()) {
    const auto& c = s.ctx->cover;
    const RootDatum& d = c.datum();
    EndoscopicDatum e = c.endoscopic_datum();
    const RootDatum& dq = e.datum_Qn;
    CHECK(dq.num_roots() == d.num_roots());
    CHECK(weyl_group(dq).size() == weyl_group(d).size());
    for (int a = 0; a < d.num_roots(); ++a) {
      // coroot n_a a^vee in lattice coordinates
      CHECK(e.lattice_basis * dq.coroot(a) == scale(c.n_alpha(a), d.coroot(a)));
      // alpha_{Q,n} = alpha / n_alpha on the lattice basis
      for (const auto& col : e.lattice_basis.columns()) {
        Int full = d.pair_root(a, col);
        CHECK(full % c.n_alpha(a) == 0);
      }
      for (int j = 0; j < dq.rank(); ++j)
        CHECK(dq.root_functional(a)[j] * c.n_alpha(a) == d.pair_root(a, e.lattice_basis.column(j)));
    }
    // Degree one on the endoscopic datum returns it unchanged.
    QuadraticCover again(dq, IntMatrix(dq.rank(), dq.rank()), 1);
    CHECK(again.endoscopic_datum().datum_Qn == dq);
    CHECK(again.yqn_basis() == IntMatrix::identity(dq.rank()));
  }
  auto gl2 = fixture::gl2_example();
  EndoscopicDatum e = gl2->cover.endoscopic_datum();
  int a = gl2->cover.datum().simple(0);
  CHECK(e.lattice_basis * e.datum_Qn.coroot(a) == IntVec{1, -1});

  auto lin = fixture::standard("GL", 2, 1, 5);
  CHECK(lin->cover.endoscopic_datum().datum_Qn == lin->cover.datum());
}
