#include "symnorm/splitters.hpp"

#include <benchmark/benchmark.h>

using namespace symnorm;

namespace {

PLFunction on(const Fan& f, std::initializer_list<std::pair<NVec, Int>> vals, const RootSystem* rs = nullptr) {
  std::vector<Rat> v(f.rays.size());
  for (const auto& [ray, x] : vals) v[static_cast<std::size_t>(f.ray_index(ray))] = make_rat(x);
  return from_ray_values(f, v, rs ? SphericalLattice::root_default() : SphericalLattice::toric_default(), rs);
}

void weyl_group(benchmark::State& st, const char* label) {
  auto rs = make_root_system(label);
  for (auto _ : st) benchmark::DoNotOptimize(generate_weyl_group(rs).size());
}
BENCHMARK_CAPTURE(weyl_group, G2, "G2");
BENCHMARK_CAPTURE(weyl_group, B3, "B3");
BENCHMARK_CAPTURE(weyl_group, A4, "A4");

void minimal_layer(benchmark::State& st) {
  Fan f = catalog::ex1(3, 2);
  std::vector<Rat> v(f.rays.size(), make_rat(0));
  v[static_cast<std::size_t>(f.ray_index({1, 1, 0}))] = make_rat(st.range(0));
  PLFunction h = from_ray_values(f, v);
  HPolyhedron q = polyhedron_Q(h);
  for (auto _ : st) benchmark::DoNotOptimize(minimal_lattice_points(q).points.size());
}
BENCHMARK(minimal_layer)->Arg(1)->Arg(4)->Arg(16);

void open_check(benchmark::State& st) {
  Fan f = catalog::ex1(2, 2);
  PLFunction h = on(f, {{{1, 0}, -st.range(0)}, {{0, 1}, -st.range(0)}, {{1, 1}, -st.range(0) - 1}});
  for (auto _ : st) benchmark::DoNotOptimize(check_sum_open(h, h).verdict);
}
BENCHMARK(open_check)->Arg(2)->Arg(8)->Arg(32);

void complete_check(benchmark::State& st) {
  auto rs = make_root_system("A1xA1");
  auto w = generate_weyl_group(rs);
  Fan f = catalog::ex1(2, 2);
  const Int n = st.range(0);
  PLFunction h = on(f, {{{1, 0}, -2 * n}, {{0, 1}, -2 * n}, {{1, 1}, -3 * n}}, &rs);
  for (auto _ : st) benchmark::DoNotOptimize(check_sum_complete(h, h, rs, w).verdict);
}
BENCHMARK(complete_check)->Arg(1)->Arg(3)->Arg(6);

void triangle(benchmark::State& st) {
  const Int a = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(split_triangle(a, a + 1, 5, 7, {-6 * a, -5 * a}));
}
BENCHMARK(triangle)->Arg(1)->Arg(10)->Arg(100);

void chain_split(benchmark::State& st) {
  Fan f = catalog::ex1b(4, 4);
  std::vector<Rat> v(f.rays.size(), make_rat(1));
  for (std::size_t i = 0; i < 4; ++i) {
    NVec e(4, 0);
    e[i] = 1;
    v[static_cast<std::size_t>(f.ray_index(e))] = 0;
  }
  PLFunction h = from_ray_values(f, v);
  MVec m(4, make_rat(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(split_chain_blowup(h, m).m1.size());
}
BENCHMARK(chain_split)->Arg(1)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
