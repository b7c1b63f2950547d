#include "symnorm/root_data.hpp"

#include <doctest.h>

#include <cstdlib>
#include <set>

using namespace symnorm;

namespace {
MVec mv(std::initializer_list<Int> xs) {
  MVec m;
  for (Int x : xs) m.push_back(make_rat(x));
  return m;
}
}  // namespace

TEST_CASE("catalog root systems") {
  CHECK(make_root_system("A2").cartan == IntMat{{2, -1}, {-1, 2}});
  CHECK(make_root_system("A1xA1").cartan == IntMat{{2, 0}, {0, 2}});
  CHECK(make_root_system("A1xA2").rank == 3);
  CHECK_THROWS_AS(make_root_system("Q7"), std::invalid_argument);
  CHECK_THROWS(make_custom_root_system({{2, -1}, {0, 2}}));
  CHECK_THROWS(make_custom_root_system({{1, 0}, {0, 2}}));
}

TEST_CASE("dotted coordinates") {
  auto a2 = make_root_system("A2");
  auto a11 = make_root_system("A1xA1");
  CHECK(dotted_coords(a2, unit_m(2, 0)) == mv({2, -1}));
  CHECK(dotted_coords(a2, zero_m(2)) == mv({0, 0}));
  CHECK(dotted_coords(a11, unit_m(2, 0)) == mv({2, 0}));
  CHECK(dotted_coords(a2, g_vector(a2, 0)) == mv({1, 0}));
  CHECK(dotted_coords(a2, g_vector(a2, 1)) == mv({0, 1}));
}

TEST_CASE("dominance and regularity") {
  auto a2 = make_root_system("A2");
  MVec d = scale(add(g_vector(a2, 0), g_vector(a2, 1)), -1);  // -g_1 - g_2
  CHECK(is_dominant(a2, d));
  CHECK(is_regular(a2, d));
  CHECK(is_dominant(a2, zero_m(2)));
  CHECK_FALSE(is_regular(a2, zero_m(2)));
  CHECK_FALSE(is_dominant(a2, unit_m(2, 0)));
}

TEST_CASE("simple reflections") {
  auto a2 = make_root_system("A2");
  auto s1 = simple_reflection(a2, 0);
  CHECK(act(s1, unit_m(2, 0)) == mv({-1, 0}));
  CHECK(act(s1, unit_m(2, 1)) == mv({1, 1}));
  for (const auto* label : {"A2", "B2", "G2", "BC2", "A3", "C3"}) {
    auto rs = make_root_system(label);
    for (std::size_t j = 0; j < rs.rank; ++j) {
      auto s = simple_reflection(rs, j);
      CHECK(mul(s, s) == identity_int(rs.rank));
    }
  }
  auto a11 = make_root_system("A1xA1");
  CHECK(act(simple_reflection(a11, 0), unit_m(2, 1)) == unit_m(2, 1));
}

TEST_CASE("Weyl group orders") {
  CHECK(generate_weyl_group(make_root_system("A1xA1")).size() == 4);
  CHECK(generate_weyl_group(make_root_system("A2")).size() == 6);
  CHECK(generate_weyl_group(make_root_system("B2")).size() == 8);
  CHECK(generate_weyl_group(make_root_system("G2")).size() == 12);
  CHECK(generate_weyl_group(make_root_system("BC2")).size() == 8);
  CHECK(generate_weyl_group(make_root_system("A3")).size() == 24);
  CHECK(generate_weyl_group(make_root_system("B3")).size() == 48);
  CHECK_THROWS_AS(generate_weyl_group(make_root_system("B3"), 10), CapExceeded);
}

TEST_CASE("SYMNORM_CAP overrides the enumeration cap") {
  setenv("SYMNORM_CAP", "5", 1);
  CHECK(enumeration_cap() == 5);
  CHECK_THROWS_AS(generate_weyl_group(make_root_system("A2")), CapExceeded);
  unsetenv("SYMNORM_CAP");
  CHECK(enumeration_cap() == 1000000);
}

TEST_CASE("Weyl group acts on N contragrediently") {
  auto rs = make_root_system("B2");
  auto w = generate_weyl_group(rs);
  MVec m = mv({3, -1});
  NVec n{2, 5};
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(pair(act(w.on_m[i], m), act(w.on_n[i], n)) == pair(m, n));
  std::set<IntMat> distinct(w.on_m.begin(), w.on_m.end());
  CHECK(distinct.size() == w.size());
  CHECK(w.on_m[0] == identity_int(2));
}

TEST_CASE("dominant representatives") {
  auto a11 = make_root_system("A1xA1");
  auto r = dominant_representative(a11, unit_m(2, 0));
  CHECK(r.m_dom == mv({-1, 0}));
  CHECK(r.word == std::vector<std::size_t>{0});
  auto d = dominant_representative(a11, mv({-1, -1}));
  CHECK(d.word.empty());
  CHECK(d.w == identity_int(2));
  for (const auto* label : {"A2", "B2", "G2"}) {
    auto rs = make_root_system(label);
    for (Int x = -3; x <= 3; ++x)
      for (Int y = -3; y <= 3; ++y) {
        auto rep = dominant_representative(rs, mv({x, y}));
        CHECK(is_dominant(rs, rep.m_dom));
        CHECK(act(rep.w, mv({x, y})) == rep.m_dom);
      }
  }
}

TEST_CASE("spherical lattices") {
  auto a2 = make_root_system("A2");
  auto def = SphericalLattice::root_default();
  CHECK(def.contains(&a2, g_vector(a2, 0)));
  CHECK(def.contains(&a2, unit_m(2, 0)));
  CHECK_FALSE(def.contains(&a2, scale(g_vector(a2, 0), make_rat(1, 2))));
  auto m = SphericalLattice::toric_default();
  CHECK(m.contains(&a2, unit_m(2, 1)));
  CHECK_FALSE(m.contains(&a2, g_vector(a2, 0)));
}
