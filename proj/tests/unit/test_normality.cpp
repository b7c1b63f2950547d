#include "../support/grids.hpp"
#include "../support/oracle.hpp"

#include "symnorm/normality.hpp"

#include <doctest.h>

using namespace symnorm;

namespace {
const NVec E1{1, 0}, E2{0, 1}, U{1, 1};
PLFunction bl(Int a1, Int a2, Int b, const RootSystem* rs = nullptr) {
  Fan f = catalog::ex1(2, 2);
  return from_ray_values(f, grids::by_ray(f, {{E1, make_rat(a1)}, {E2, make_rat(a2)}, {U, make_rat(b)}}),
                         rs ? SphericalLattice::root_default() : SphericalLattice::toric_default(), rs);
}
MVec mv(std::initializer_list<Int> xs) {
  MVec m;
  for (Int x : xs) m.push_back(make_rat(x));
  return m;
}
}  // namespace

TEST_CASE("open check on the blow-up") {
  PLFunction h = bl(0, 0, 1);
  CheckReport r = check_sum_open(h, h, true);
  CHECK(r.verdict == Verdict::Surjective);
  CHECK(r.stats["targets"] == 3);
  CHECK(r.witnesses.empty());
  bool saw = false;
  for (const auto& d : r.decompositions) {
    CHECK(oracle::decomposition_ok(h, h, d.m, d.m1, d.m2));
    saw = saw || d.m == mv({1, 1});
  }
  CHECK(saw);
  PLFunction lin = grids::linear(MVec{make_rat(2), make_rat(-1)});
  CheckReport rl = check_sum_open(lin, lin);
  CHECK(rl.verdict == Verdict::Surjective);
  CHECK(rl.stats["targets"] == 1);
  CHECK_THROWS_AS(check_sum_open(bl(0, 0, -1), bl(0, 0, -1)), PreconditionError);
}

TEST_CASE("open check on ex1(3,2) against the oracle") {
  std::mt19937_64 rng(3);
  Fan f = catalog::ex1(3, 2);
  for (int t = 0; t < 6; ++t) {
    auto h = grids::sample(rng, f, nullptr, -5, 5, [](const PLFunction& x) { return oracle::convex(x); });
    auto k = grids::sample(rng, f, nullptr, -5, 5, [](const PLFunction& x) { return oracle::convex(x); });
    REQUIRE(h);
    REQUIRE(k);
    CHECK(check_sum_open(*h, *k).verdict == Verdict::Surjective);
    for (const auto& m : oracle::minimal_points(*h + *k)) CHECK(oracle::decompose(*h, *k, m));
  }
}

TEST_CASE("complete check and equivalence") {
  auto a11 = make_root_system("A1xA1");
  auto w = generate_weyl_group(a11);
  PLFunction h = bl(-2, -2, -3, &a11);
  CheckReport c = check_sum_complete(h, h, a11, w, true);
  CHECK(c.verdict == Verdict::Surjective);
  for (const auto& d : c.decompositions) {
    CHECK(oracle::in_P(h, a11.cartan, d.m1));
    CHECK(oracle::in_P(h, a11.cartan, d.m2));
  }
  auto eq = check_equivalence(h, h, a11, w);
  CHECK(eq.agree);
  CHECK(eq.open.verdict == Verdict::Surjective);

  auto a2 = make_root_system("A2");
  auto w2 = generate_weyl_group(a2);
  MVec lam = scale(add(g_vector(a2, 0), g_vector(a2, 1)), -1);
  PLFunction lin = grids::linear(MVec{lam[0], lam[1]}, &a2);
  auto e2 = check_equivalence(lin, lin, a2, w2);
  CHECK(e2.agree);
  CHECK(e2.complete.verdict == Verdict::Surjective);

  PLFunction nd = bl(0, 0, 1, &a11);
  CHECK_THROWS_AS(check_sum_complete(nd, nd, a11, w), PreconditionError);
  CHECK_THROWS_AS(check_equivalence(bl(-1, -1, -2, &a11), bl(-1, -1, -2, &a11), a11, w), PreconditionError);
}

TEST_CASE("transfer from open to complete decompositions") {
  auto a11 = make_root_system("A1xA1");
  auto w = generate_weyl_group(a11);
  PLFunction h = bl(-2, -2, -3, &a11);
  Transfer t = transfer_decomposition(h, h, a11, w, mv({-4, -2}), mv({-2, -1}), mv({-2, -1}));
  CHECK(t.steps.empty());
  CHECK(t.p == mv({-2, -1}));

  // q0 = p + f_1 leaves P_k; one move of f_1 repairs it.
  Transfer u = transfer_decomposition(h, h, a11, w, mv({-3, -2}), mv({-2, -1}), mv({-1, -1}));
  CHECK(oracle::in_P(h, a11.cartan, u.p));
  CHECK(oracle::in_P(h, a11.cartan, u.q));
  CHECK(add(u.p, u.q) == mv({-3, -2}));
  CHECK_THROWS_AS(transfer_decomposition(h, h, a11, w, mv({0, 0}), mv({-2, -1}), mv({-2, -1})), PreconditionError);
}

TEST_CASE("Q points as P points plus f's") {
  auto a11 = make_root_system("A1xA1");
  auto w = generate_weyl_group(a11);
  PLFunction h = bl(-2, -2, -3, &a11);
  QExpression e = express_Q_point(h, a11, w, mv({-2, -1}));
  CHECK_THROWS(express_Q_point(h, a11, w, mv({-2, -2})));
  CHECK(e.c == std::vector<Int>{0, 0});
  for (const auto& p : {mv({2, -2}), mv({5, 3}), mv({-2, 7})}) {
    QExpression x = express_Q_point(h, a11, w, p);
    CHECK(oracle::in_P(h, a11.cartan, x.p_dom));
    CHECK(oracle::dominant(a11.cartan, x.p_dom));
    MVec back = x.p_dom;
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(x.c[i] >= 0);
      back[i] += make_rat(x.c[i]);
    }
    CHECK(back == p);
  }
  for (const auto& m : minimal_lattice_points(polyhedron_Q(h)).points) CHECK_NOTHROW(express_Q_point(h, a11, w, m));
}

TEST_CASE("R_j wall check") {
  auto a11 = make_root_system("A1xA1");
  auto w = generate_weyl_group(a11);
  PLFunction h = bl(-2, -2, -3, &a11);
  for (std::size_t j = 0; j < 2; ++j) {
    RjReport r = check_Rj(h, a11, w, j);
    CHECK(r.supported);
    CHECK(r.passed);
    CHECK_FALSE(r.wall_vertices.empty());
    for (const auto& v : r.wall_vertices) CHECK(v[j] == 0);
  }
  auto a2 = make_root_system("A2");
  auto w2 = generate_weyl_group(a2);
  PLFunction reg = grids::linear(MVec{make_rat(-3), make_rat(-3)}, &a2);
  CHECK(check_Rj(reg, a2, w2, 0).passed);
  // lambda = -g_1 is not regular: the vertex sits on a wall.
  MVec g1 = scale(g_vector(a2, 0), -1);
  PLFunction sing = grids::linear(MVec{g1[0], g1[1]}, &a2);
  CHECK_FALSE(check_Rj(sing, a2, w2, 0).supported);
  CHECK_THROWS_AS(check_Rj(reg, a2, w2, 2), std::out_of_range);
}

TEST_CASE("saturation diagnostics") {
  auto a11 = make_root_system("A1xA1");
  auto w = generate_weyl_group(a11);
  PLFunction h = bl(-2, -2, -3, &a11);
  auto s = check_saturation(h, h, a11, w);
  CHECK(s.saturated);
  CHECK(s.set_size > 0);
  CHECK(check_pi_saturation(h, a11, w).saturated);
  for (const auto* label : {"A2", "B2", "G2"}) {
    auto rs = make_root_system(label);
    auto wg = generate_weyl_group(rs);
    PLFunction lin = grids::linear(MVec{make_rat(-2), make_rat(-2)}, &rs);
    if (!bundle_status(lin, &rs).gg) continue;
    CHECK(check_saturation(lin, lin, rs, wg).saturated);
  }
}

TEST_CASE("l1 report") {
  auto a11 = make_root_system("A1xA1");
  auto w = generate_weyl_group(a11);
  L1Report r = check_l1(bl(-2, -2, -3, &a11), a11, w, 30, 5);
  CHECK(r.supported);
  CHECK(r.l1a);
  CHECK(r.l1b);
  CHECK(r.deep_checked == 30);
  CHECK(r.points == 8);
  CHECK_FALSE(check_l1(bl(0, 0, 1, &a11), a11, w).supported);
}

TEST_CASE("find_split agrees with the oracle") {
  PLFunction h = bl(0, 0, 1), k = bl(-1, 0, 2);
  HPolyhedron qh = polyhedron_Q(h), qk = polyhedron_Q(k);
  for (const auto& m : oracle::minimal_points(h + k)) {
    auto m1 = find_split(qh, qk, m);
    CHECK(m1.has_value() == oracle::decompose(h, k, m).has_value());
    if (m1) CHECK(oracle::decomposition_ok(h, k, m, *m1, sub(m, *m1)));
  }
}
