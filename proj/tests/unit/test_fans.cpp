#include "symnorm/fans.hpp"

#include <doctest.h>

using namespace symnorm;

namespace {
Fan blowup2() { return make_fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 2}, {1, 2}}); }
}  // namespace

TEST_CASE("canonical form") {
  Fan a = make_fan(2, {{1, 1}, {1, 0}, {0, 1}}, {{1, 0}, {2, 0}});
  CHECK(a == blowup2());
  CHECK(a.rays == std::vector<NVec>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(a.ray_index({1, 1}) == 2);
  CHECK(a.ray_index({2, 1}) == -1);
  CHECK(a.cone_index({{1, 1}, {1, 0}}) >= 0);
  CHECK_THROWS(make_fan(2, {{1, 0}, {0, 1}}, {{0, 2}}));
}

TEST_CASE("validate") {
  CHECK(validate(catalog::chamber(2)).ok);
  CHECK(validate(blowup2()).ok);
  Fan bad = make_fan(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {{0, 1}, {2, 3}});
  auto r = validate(bad);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.violations.empty());
}

TEST_CASE("properness over the orthant") {
  CHECK(is_proper_over_orthant(catalog::chamber(2)));
  CHECK(is_proper_over_orthant(blowup2()));
  CHECK_FALSE(is_proper_over_orthant(make_fan(2, {{1, 0}, {1, 1}}, {{0, 1}})));
}

TEST_CASE("smoothness") {
  CHECK(is_smooth(blowup2()));
  CHECK_FALSE(is_smooth(make_fan(2, {{1, 0}, {1, 2}}, {{0, 1}})));
  CHECK(is_smooth(catalog::ex2b(1)));
  CHECK_FALSE(is_smooth(catalog::ex2b(2)));
  CHECK_FALSE(is_smooth(catalog::ex2b(3)));
}

TEST_CASE("star subdivision") {
  Fan f = star_subdivision(catalog::chamber(2), {{1, 0}, {0, 1}});
  CHECK(f == blowup2());
  CHECK(f.max_cones.size() == 2);
  CHECK(validate(f).ok);
  CHECK(is_proper_over_orthant(f));
}

TEST_CASE("symmetrization") {
  auto a11 = generate_weyl_group(make_root_system("A1xA1"));
  auto a2 = generate_weyl_group(make_root_system("A2"));
  Fan q = symmetrize(catalog::chamber(2), a11);
  CHECK(q.max_cones.size() == 4);
  CHECK(q.kind == FanKind::Complete);
  CHECK(validate(q).ok);
  CHECK(symmetrize(catalog::chamber(2), a2).max_cones.size() == 6);
  Fan b = symmetrize(blowup2(), a11);
  CHECK(b.max_cones.size() == 8);
  CHECK(validate(b).ok);
  CHECK(b.rays.size() == 8);
}

TEST_CASE("star fans") {
  auto s = star_fan(blowup2(), {1, 1});
  CHECK(s.quotient.rank == 1);
  CHECK(s.quotient.rays.size() == 2);
  CHECK(s.quotient.rays[0] == neg(s.quotient.rays[1]));
  auto t = star_fan(catalog::chamber(2), {1, 0});
  CHECK(t.quotient.rays.size() == 1);
  CHECK(t.quotient.max_cones.size() == 1);
  CHECK(star_fan(catalog::ex3_1(3, 2), catalog::ex3_v(3, 1)).quotient.max_cones.size() == 4);
  IntMat u = unimodular_to_last({2, 3, 1});
  CHECK(act(u, NVec{2, 3, 1}) == NVec{0, 0, 1});
  CHECK(std::abs(det(u)) == 1);
}

TEST_CASE("catalog") {
  Fan e31 = catalog::ex3_1(3, 2);
  CHECK(e31.rays == std::vector<NVec>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}, {2, 2, 1}});
  CHECK(catalog::ex3_v(3, 2) == NVec{2, 2, 1});
  Fan e32 = catalog::ex3_2(3, 1);
  CHECK(e32.ray_index({1, 2, 2}) >= 0);
  CHECK(e32.rays.size() == 5);
  CHECK(catalog::chamber(3).max_cones.size() == 1);
  CHECK(catalog::ex1(3, 2).rays.size() == 4);
  CHECK(catalog::ex1b(4, 3).rays.size() == 6);
  CHECK_THROWS(catalog::ex1(3, 4));
  CHECK_THROWS(catalog::ex2b(0));
  for (const Fan& f : {catalog::chamber(2), catalog::ex1(3, 2), catalog::ex1(4, 4), catalog::ex1b(4, 3), catalog::ex2b(2),
                       catalog::ex2b(3), catalog::ex3_1(3, 3), catalog::ex3_2(3, 2), catalog::ex3_2(4, 2)}) {
    CHECK(validate(f).ok);
    CHECK(is_proper_over_orthant(f));
  }
  // The chain of n-1 subdivisions adds v_i = i(e_1+...+e_{l-1}) + e_l.
  for (std::size_t n = 1; n <= 4; ++n) CHECK(catalog::ex3_1(4, n).ray_index(catalog::ex3_v(4, n)) >= 0);
}

TEST_CASE("cone location") {
  Fan f = blowup2();
  long c = locate_cone(f, {2, 3});
  REQUIRE(c >= 0);
  CHECK(cone_contains(f, static_cast<std::size_t>(c), {1, 1}));
  CHECK(f.cone_rays(static_cast<std::size_t>(c)) == std::vector<NVec>{{0, 1}, {1, 1}});
  CHECK(locate_cone(f, {-1, 0}) == -1);
  auto co = cone_coefficients(f, static_cast<std::size_t>(c), {2, 3});
  CHECK(co == MVec{make_rat(1), make_rat(2)});
  CHECK(f.cone_rays(designated_cone(f)).size() == 2);
}
