#include <catch2/catch_amalgamated.hpp>

#include "mfa1/rootsys.hpp"

#include <random>

using namespace mfa1;

namespace {
const PositiveRoot& root_by_rc(const RootSystem& rs, std::vector<Int> rc) {
  for (const auto& a : rs.positive)
    if (a.rc == rc) return a;
  throw std::logic_error("no such root");
}
}  // namespace

TEST_CASE("rank bounds") {
  CHECK_THROWS_AS(build({Family::B, 1}), invalid_rank);
  CHECK_THROWS_AS(build({Family::C, 2}), invalid_rank);
  CHECK_THROWS_AS(build({Family::D, 3}), invalid_rank);
  CHECK_THROWS_AS(build({Family::E, 5}), invalid_rank);
  CHECK_THROWS_AS(build({Family::E, 9}), invalid_rank);
  CHECK_THROWS_AS(build({Family::F, 3}), invalid_rank);
  CHECK_THROWS_AS(build({Family::G, 3}), invalid_rank);
  CHECK_NOTHROW(build({Family::A, 1}));
}

TEST_CASE("cartan matrices") {
  // entries are <alpha_j, alpha_i^vee>
  auto a2 = build({Family::A, 2});
  CHECK(a2.cartan == std::vector<std::vector<Int>>{{2, -1}, {-1, 2}});
  auto b2 = build({Family::B, 2});
  CHECK(b2.cartan == std::vector<std::vector<Int>>{{2, -1}, {-2, 2}});
  auto c3 = build({Family::C, 3});
  CHECK(c3.cartan == std::vector<std::vector<Int>>{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  auto g2 = build({Family::G, 2});
  CHECK(g2.cartan == std::vector<std::vector<Int>>{{2, -3}, {-1, 2}});
  auto f4 = build({Family::F, 4});
  CHECK(f4.cartan == std::vector<std::vector<Int>>{
                         {2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});

  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    int lo = f == Family::E ? 6 : (f == Family::F ? 4 : (f == Family::G ? 2 : 1));
    int hi = f == Family::E ? 8 : (f == Family::F ? 4 : (f == Family::G ? 2 : 6));
    if (f == Family::B) lo = 2;
    if (f == Family::C) lo = 3;
    if (f == Family::D) lo = 4;
    for (int l = lo; l <= hi; ++l) {
      auto rs = build({f, l});
      for (int i = 0; i < l; ++i) {
        CHECK(rs.cartan[i][i] == 2);
        for (int j = 0; j < l; ++j)
          if (i != j) CHECK(rs.cartan[i][j] <= 0);
      }
    }
  }
}

TEST_CASE("positive root counts and coxeter numbers") {
  struct Row {
    GroupType t;
    size_t roots;
    int h;
  };
  for (const Row& row : {Row{{Family::A, 2}, 3, 3}, Row{{Family::B, 2}, 4, 4},
                         Row{{Family::G, 2}, 6, 6}, Row{{Family::D, 4}, 12, 6},
                         Row{{Family::F, 4}, 24, 12}, Row{{Family::E, 6}, 36, 12},
                         Row{{Family::E, 7}, 63, 18}, Row{{Family::E, 8}, 120, 30},
                         Row{{Family::B, 5}, 25, 10}, Row{{Family::C, 4}, 16, 8},
                         Row{{Family::A, 7}, 28, 8}}) {
    auto rs = build(row.t);
    CHECK(rs.positive.size() == row.roots);
    CHECK(rs.coxeter == row.h);
  }
}

TEST_CASE("positive roots are nonnegative and dominated by the highest root") {
  for (GroupType t : {GroupType{Family::A, 4}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4},
                      {Family::G, 2}, {Family::F, 4}}) {
    auto rs = build(t);
    const auto& highest = rs.positive.back();
    for (const auto& a : rs.positive) {
      for (Int x : a.rc) CHECK(x >= 0);
      for (int i = 0; i < rs.rank(); ++i) CHECK(highest.rc[i] >= a.rc[i]);
    }
  }
}

TEST_CASE("pairing") {
  auto a2 = build({Family::A, 2});
  CHECK(a2.pairing(Weight{1, 0}, root_by_rc(a2, {1, 0})) == 1);
  CHECK(a2.pairing(Weight{1, 0}, root_by_rc(a2, {1, 1})) == 1);
  CHECK(a2.pairing(Weight{0, 0}, root_by_rc(a2, {1, 1})) == 0);

  // fundamental weights against simple coroots: delta_ij, and >= 0 everywhere
  for (GroupType t : {GroupType{Family::B, 3}, {Family::G, 2}, {Family::F, 4}}) {
    auto rs = build(t);
    for (int i = 0; i < rs.rank(); ++i) {
      Weight wi = Weight::zero(rs.rank());
      wi[i] = 1;
      for (int j = 0; j < rs.rank(); ++j) {
        std::vector<Int> e(rs.rank(), 0);
        e[j] = 1;
        CHECK(rs.pairing(wi, root_by_rc(rs, e)) == (i == j ? 1 : 0));
      }
      for (const auto& a : rs.positive) CHECK(rs.pairing(wi, a) >= 0);
    }
  }
}

TEST_CASE("telescoping identity for simple roots") {
  for (GroupType t : {GroupType{Family::A, 3}, {Family::B, 4}, {Family::C, 3}, {Family::D, 5},
                      {Family::G, 2}, {Family::F, 4}, {Family::E, 6}}) {
    auto rs = build(t);
    for (int i = 0; i < rs.rank(); ++i) {
      Weight ai = rs.simple_root_fw(i);
      Int sum = 0;
      std::vector<Int> e(rs.rank(), 0);
      e[i] = 1;
      for (const auto& a : rs.positive)
        if (a.rc != e) sum += rs.pairing(ai, a);
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("weight_to_root_coords") {
  auto a2 = build({Family::A, 2});
  auto rc = weight_to_root_coords(a2, Weight{1, 0});
  CHECK(rc[0] == Rat(2, 3));
  CHECK(rc[1] == Rat(1, 3));

  auto b2 = build({Family::B, 2});
  auto rc2 = weight_to_root_coords(b2, Weight{0, 1});
  CHECK(rc2[0] == Rat(1, 2));
  CHECK(rc2[1] == 1);
  CHECK_FALSE(lies_in_root_lattice(b2, Weight{0, 1}));
  CHECK(lies_in_root_lattice(b2, Weight{1, 0}));

  for (GroupType t : {GroupType{Family::D, 4}, {Family::E, 6}}) {
    auto rs = build(t);
    for (int i = 0; i < rs.rank(); ++i) {
      auto a = weight_to_root_coords(rs, rs.simple_root_fw(i));
      for (int j = 0; j < rs.rank(); ++j) CHECK(a[j] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("dominant_rep") {
  auto a2 = build({Family::A, 2});
  auto [w0, p0] = dominant_rep(a2, Weight{2, 1});
  CHECK(w0 == Weight{2, 1});
  CHECK(p0 == 0);

  // single reflection s_1(omega_1) = omega_1 - alpha_1
  Weight refl = a2.reflect(Weight{1, 0}, 0);
  auto [w1, p1] = dominant_rep(a2, refl);
  CHECK(w1 == Weight{1, 0});
  CHECK(p1 == 1);

  // -1 lies in W(B2); the canonical reducing word for -2w1 has odd length
  // because the stabiliser of 2w1 contains a reflection.
  auto b2 = build({Family::B, 2});
  auto [w2, p2] = dominant_rep(b2, Weight{-2, 0});
  CHECK(w2 == Weight{2, 0});

  // idempotence and orbit-constancy
  std::mt19937 rng(7);
  for (GroupType t : {GroupType{Family::B, 3}, {Family::G, 2}, {Family::A, 4}}) {
    auto rs = build(t);
    std::uniform_int_distribution<Int> coord(-4, 4);
    std::uniform_int_distribution<int> node(0, rs.rank() - 1);
    for (int iter = 0; iter < 200; ++iter) {
      Weight w = Weight::zero(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) w[i] = coord(rng);
      Weight dom = dominant_rep(rs, w).first;
      CHECK(dominant_rep(rs, dom).first == dom);
      CHECK(dominant_rep(rs, rs.reflect(w, node(rng))).first == dom);
    }
  }
}

TEST_CASE("orbits") {
  auto a2 = build({Family::A, 2});
  CHECK(orbit(a2, Weight{1, 0}).size() == 3);
  auto b2 = build({Family::B, 2});
  CHECK(orbit(b2, Weight{1, 0}).size() == 4);
  CHECK(orbit(b2, Weight::zero(2)) == std::vector<Weight>{Weight::zero(2)});

  // orbit size times stabiliser order equals |W| for fundamental weights
  for (GroupType t : {GroupType{Family::A, 4}, {Family::B, 4}, {Family::C, 4}, {Family::D, 4},
                      {Family::G, 2}, {Family::F, 4}}) {
    auto rs = build(t);
    for (int i = 0; i < rs.rank(); ++i) {
      Weight wi = Weight::zero(rs.rank());
      wi[i] = 1;
      auto orb = orbit(rs, wi);
      CHECK(static_cast<Int>(orb.size()) == orbit_size(rs, wi));
      CHECK(rs.weyl_group_order % static_cast<Int>(orb.size()) == 0);
    }
  }

  // orbit elements reduce to the dominant representative
  auto g2 = build({Family::G, 2});
  for (const auto& w : orbit(g2, Weight{1, 1}))
    CHECK(dominant_rep(g2, w).first == Weight{1, 1});
}
