#include "../support/grids.hpp"
#include "../support/oracle.hpp"

#include "symnorm/splitters.hpp"

#include <doctest.h>

using namespace symnorm;

namespace {
MVec mv(std::initializer_list<Int> xs) {
  MVec m;
  for (Int x : xs) m.push_back(make_rat(x));
  return m;
}
std::vector<Rat> rv(std::initializer_list<Int> xs) { return mv(xs); }
void check_witness(const PLFunction& h, const PLFunction& k, const SplitWitness& w) {
  CHECK(oracle::decomposition_ok(h, k, w.m, w.m1, w.m2));
  CHECK_NOTHROW(verify_witness(h, k, w));
}
}  // namespace

TEST_CASE("family identification") {
  CHECK(identify_family(catalog::ex1(3, 2))->name == "ex1");
  CHECK(identify_family(catalog::ex1(3, 2))->params == std::vector<Int>{3, 2});
  CHECK(identify_family(catalog::ex1b(3, 3))->name == "ex1b");
  CHECK(identify_family(catalog::ex2b(2))->name == "ex2b");
  CHECK(identify_family(catalog::ex3_1(3, 2))->name == "ex3_1");
  CHECK(identify_family(catalog::ex3_2(3, 2))->name == "ex3_2");
  CHECK_FALSE(identify_family(catalog::chamber(2)).has_value());
  CHECK(parse_algorithm("chain") == Algorithm::Chain);
  CHECK(to_string(parse_algorithm("simplex3")) == "simplex3");
  CHECK_THROWS_AS(parse_algorithm("magic"), std::invalid_argument);
}

TEST_CASE("blow-up splitter") {
  Fan f = catalog::ex1(2, 2);
  PLFunction h = from_ray_values(f, grids::by_ray(f, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 1}}));
  SplitWitness w = split_blowup(h, h, mv({1, 1}));
  check_witness(h, h, w);
  CHECK(w.algorithm == "blowup");
  CHECK(detect_algorithm(h, h) == Algorithm::Blowup);
  CHECK_THROWS_AS(split_blowup(h, h, mv({0, 0})), std::invalid_argument);
}

TEST_CASE("chain splitter on the worked example") {
  Fan f = catalog::ex1b(3, 3);
  // h(e_i) = 0 and h = 1 on both blow-up rays.
  std::vector<Rat> v(f.rays.size(), make_rat(1));
  for (std::size_t i = 0; i < 3; ++i) {
    NVec e(3, 0);
    e[i] = 1;
    v[static_cast<std::size_t>(f.ray_index(e))] = 0;
  }
  PLFunction h = from_ray_values(f, v);
  REQUIRE(oracle::convex(h));
  SplitWitness w = split_chain_blowup(h, mv({1, 1, 1}));
  check_witness(h, h, w);
  CHECK(w.m1 == mv({1, 0, 1}));
  CHECK(w.m2 == mv({0, 1, 0}));
}

TEST_CASE("chain splitter on every minimal point") {
  std::mt19937_64 rng(11);
  for (Int r : {2, 3}) {
    Fan f = catalog::ex1b(3, r);
    for (int t = 0; t < 4; ++t) {
      auto h = grids::sample(rng, f, nullptr, -3, 3, [](const PLFunction& x) { return oracle::convex(x); });
      REQUIRE(h);
      for (const auto& m : oracle::minimal_points(*h + *h)) check_witness(*h, *h, split_chain_blowup(*h, m));
    }
  }
}

TEST_CASE("dim2 splitter on small fans") {
  std::mt19937_64 rng(5);
  for (const auto& f : grids::subdivided_fans(2, 2)) {
    auto keep = [](const PLFunction& x) { return oracle::convex(x); };
    auto h1 = grids::sample(rng, f, nullptr, -3, 3, keep);
    auto h2 = grids::sample(rng, f, nullptr, -3, 3, keep);
    REQUIRE(h1);
    REQUIRE(h2);
    for (const auto& m : oracle::minimal_points(*h1 + *h2)) check_witness(*h1, *h2, split_dim2(*h1, *h2, m));
  }
}

TEST_CASE("triangle split properties") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Int> size(1, 4), coord(-14, 2);
  for (int t = 0; t < 300; ++t) {
    Int a1 = size(rng), a2 = size(rng), t1 = size(rng), t2 = size(rng);
    if (std::gcd(a1, a2) != 1) continue;
    NVec m{coord(rng), coord(rng)};
    // m in (t1 + t2) D + orthant: a1 x + a2 y >= -(t1 + t2) a1 a2.
    if (a1 * m[0] + a2 * m[1] < -(t1 + t2) * a1 * a2) continue;
    std::size_t depth = 0;
    auto [p, q] = split_triangle(a1, a2, t1, t2, m, nullptr, &depth);
    CHECK(p[0] + q[0] == m[0]);
    CHECK(p[1] + q[1] == m[1]);
    CHECK(a1 * p[0] + a2 * p[1] >= -t1 * a1 * a2);
    CHECK(a1 * q[0] + a2 * q[1] >= -t2 * a1 * a2);
    CHECK(depth <= static_cast<std::size_t>(a1 + a2));
    bool inside = m[0] <= 0 && m[1] <= 0;
    if (inside) {
      CHECK(p[0] <= 0);
      CHECK(p[1] <= 0);
      CHECK(q[0] <= 0);
      CHECK(q[1] <= 0);
    }
  }
}

TEST_CASE("simplex splitter on ex2b") {
  for (Int a : {1, 2, 3}) {
    Fan f = catalog::ex2b(a);
    std::mt19937_64 rng(static_cast<unsigned>(a));
    for (int t = 0; t < 3; ++t) {
      auto h = grids::sample(rng, f, nullptr, -3, 3, [](const PLFunction& x) { return oracle::convex(x); });
      REQUIRE(h);
      for (const auto& m : oracle::minimal_points(*h + *h)) check_witness(*h, *h, split_simplex3(*h, m));
    }
  }
}

TEST_CASE("rounding index selection") {
  RSelection s = select_r(1, 0, 0, Int{0}, std::nullopt);
  // t = 1 fractional coordinate and the floor sum already at the bound.
  CHECK(s.branch == 3);
  CHECK(s.r == 0);
  RSelection free = select_r(3, 0, 0, std::nullopt, std::nullopt);
  CHECK(free.r >= 0);
  CHECK(free.r <= 3);
  for (Int t = 0; t <= 4; ++t)
    for (Int fx = -3; fx <= 3; ++fx)
      for (Int b = fx; b <= fx + t; ++b) {
        RSelection x = select_r(t, fx, 0, b, std::nullopt);
        CHECK(x.r >= 0);
        CHECK(x.r <= t);
        CHECK(fx + x.r <= b);
      }
}

TEST_CASE("Z_n splitter and tight rays") {
  std::mt19937_64 rng(8);
  for (Int n : {1, 2, 3}) {
    Fan f = catalog::ex3_1(3, n);
    auto keep = [](const PLFunction& x) { return oracle::convex(x); };
    auto h = grids::sample(rng, f, nullptr, -3, 3, keep);
    auto k = grids::sample(rng, f, nullptr, -3, 3, keep);
    REQUIRE(h);
    REQUIRE(k);
    for (const auto& m : oracle::minimal_points(*h + *k)) {
      check_witness(*h, *k, split_zn(*h, *k, m));
      auto ray = tight_ray(*h, *k, m);
      if (ray) CHECK(oracle::dot(m, *ray) == oracle::value(*h + *k, *ray));
    }
  }
}

TEST_CASE("ex3_2 data") {
  Fan f = catalog::ex3_2(3, 1);
  auto make = [&](Int a1, Int b) {
    std::vector<Rat> v(f.rays.size(), make_rat(0));
    v[static_cast<std::size_t>(f.ray_index(catalog::ex3_v(3, 1)))] = make_rat(a1);
    v[static_cast<std::size_t>(f.ray_index(catalog::ex3_w(3)))] = make_rat(b);
    return from_ray_values(f, v);
  };
  Ex32Data d = ex3_2_data(make(2, 3));
  CHECK(d.a == std::vector<Int>{2});
  CHECK(d.b == 3);
  CHECK(d.inequalities_hold);

  Fan g = catalog::ex3_2(3, 2);
  auto make2 = [&](Int a1, Int a2, Int b) {
    std::vector<Rat> v(g.rays.size(), make_rat(0));
    v[static_cast<std::size_t>(g.ray_index(catalog::ex3_v(3, 1)))] = make_rat(a1);
    v[static_cast<std::size_t>(g.ray_index(catalog::ex3_v(3, 2)))] = make_rat(a2);
    v[static_cast<std::size_t>(g.ray_index(catalog::ex3_w(3)))] = make_rat(b);
    return from_ray_values(g, v);
  };
  // a_2 + b < 3 a_1 fails for (2, 3; 3) and (3, 5; 4).
  CHECK_FALSE(ex3_2_data(make2(2, 3, 3)).inequalities_hold);
  CHECK_FALSE(ex3_2_data(make2(3, 5, 4)).inequalities_hold);
}
