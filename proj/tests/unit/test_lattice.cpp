#include "symnorm/lattice.hpp"

#include <doctest.h>

using namespace symnorm;

TEST_CASE("rationals parse canonically and round exactly") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-2/4")) == "-1/2");
  CHECK_THROWS(parse_rat("-2/-4"));
  CHECK(to_string(parse_rat("7")) == "7");
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("abc"));
  CHECK(floor_int(make_rat(-3, 2)) == -2);
  CHECK(ceil_int(make_rat(-3, 2)) == -1);
  CHECK(floor_int(make_rat(7, 3)) == 2);
  CHECK(frac_flag(make_rat(4, 2)) == 0);
  CHECK(frac_flag(make_rat(1, 3)) == 1);
  CHECK_THROWS_AS(to_int(make_rat(1, 2)), std::domain_error);
}

TEST_CASE("pairing") {
  CHECK(pair(unit_m(2, 0), unit_n(2, 0)) == 1);
  CHECK(pair(unit_m(2, 0), unit_n(2, 1)) == 0);
  CHECK(pair(zero_m(3), {4, -1, 9}) == 0);
  CHECK(pair({make_rat(3, 2), make_rat(-1)}, {2, 5}) == -2);
  CHECK_THROWS_AS(pair(zero_m(2), {1, 2, 3}), DimensionError);
}

TEST_CASE("lattice bases") {
  CHECK(is_lattice_basis({{1, 0}, {0, 1}}));
  CHECK_FALSE(is_lattice_basis({{1, 0}, {1, 2}}));
  CHECK(is_lattice_basis({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(det(IntMat{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}) == 1);
  CHECK(det(IntMat{{2, -1}, {-1, 2}}) == 3);
}

TEST_CASE("solve_linear_form") {
  CHECK(solve_linear_form({{1, 0}, {0, 1}}, {make_rat(0), make_rat(1)}) == unit_m(2, 1));
  CHECK(solve_linear_form({{1, 0}, {1, 1}}, {make_rat(0), make_rat(1)}) == unit_m(2, 1));
  CHECK(solve_linear_form({{1, 0}, {0, 1}}, {make_rat(-2), make_rat(-1)}) == MVec{make_rat(-2), make_rat(-1)});
  CHECK(solve_linear_form({{1, 0}, {1, 2}}, {make_rat(0), make_rat(1)}) == MVec{make_rat(0), make_rat(1, 2)});
  CHECK_THROWS(solve_linear_form({{1, 1}, {2, 2}}, {make_rat(0), make_rat(1)}));
}

TEST_CASE("unimodular inverse and primitive vectors") {
  IntMat u{{2, 1}, {1, 1}};
  CHECK(mul(u, inverse_unimodular(u)) == identity_int(2));
  CHECK_THROWS_AS(inverse_unimodular(IntMat{{2, 0}, {0, 1}}), SingularError);
  CHECK(primitive({4, -6}) == NVec{2, -3});
  CHECK(is_primitive({1, 2}));
  CHECK_FALSE(is_primitive({2, 2}));
}

TEST_CASE("cosets") {
  LatticeCoset c{{make_rat(1, 2), make_rat(-3)}};
  CHECK(c.contains({make_rat(-1, 2), make_rat(4)}));
  CHECK_FALSE(c.contains({make_rat(0), make_rat(4)}));
  CHECK(c.reduced() == MVec{make_rat(1, 2), make_rat(0)});
}

TEST_CASE("nullspace and rank") {
  RatMat a{{make_rat(1), make_rat(1), make_rat(0)}};
  auto ns = nullspace(a, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + v[1] == 0);
  CHECK(rank(a) == 1);
}
