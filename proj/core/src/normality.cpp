#include "symnorm/normality.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <limits>
#include <random>
#include <set>
#include <thread>

namespace symnorm {

namespace {

constexpr Int kNoBound = std::numeric_limits<Int>::max() / 4;

// Runs f(i) for i in [0, n) on a few threads; results land by index.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F f) {
  std::vector<T> out(n);
  std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  if (n < 64) workers = 1;
  std::vector<std::future<void>> futs;
  for (std::size_t t = 0; t < workers; ++t)
    futs.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async, [&, t] {
      for (std::size_t i = t; i < n; i += workers) out[i] = f(i);
    }));
  for (auto& fu : futs) fu.get();
  return out;
}

// Integer search for m = m1 + m2 with m1 in K_h on base_h, m2 in K_k on base_k.
struct Splitter {
  IntConstraints ch, ck;
  NVec lo_h, hi_h, lo_k, hi_k;  // coordinate boxes for z1 and z2 (kNoBound when open)

  std::optional<NVec> split(const NVec& zm) const {
    const std::size_t l = ch.dim;
    IntConstraints c{l, ch.base, ch.normals, ch.rhs};
    for (std::size_t j = 0; j < ck.normals.size(); ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < l; ++i) s += ck.normals[j][i] * zm[i];
      c.normals.push_back(neg(ck.normals[j]));
      c.rhs.push_back(ck.rhs[j] - s);
    }
    NVec lo(l), hi(l);
    for (std::size_t i = 0; i < l; ++i) {
      lo[i] = lo_h[i];
      if (hi_k[i] != kNoBound) lo[i] = std::max(lo[i], zm[i] - hi_k[i]);
      hi[i] = zm[i] - lo_k[i];
      if (hi_h[i] != kNoBound) hi[i] = std::min(hi[i], hi_h[i]);
    }
    std::optional<NVec> hit;
    scan_box(c, lo, hi, [&](const NVec& z) {
      hit = z;
      return false;
    });
    return hit;
  }
};

void box_from_vertices(const std::vector<MVec>& verts, const MVec& base, NVec& lo, NVec& hi) {
  const std::size_t l = base.size();
  lo.assign(l, 0);
  hi.assign(l, 0);
  for (std::size_t i = 0; i < l; ++i) {
    Rat mn = verts.at(0)[i], mx = verts[0][i];
    for (const auto& v : verts) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = ceil_int(mn - base[i]);
    hi[i] = floor_int(mx - base[i]);
  }
}

// Lower bounds from the unit-normal inequalities x_i >= b.
NVec unit_lower_bounds(const IntConstraints& c) {
  NVec lo(c.dim, 0);
  std::vector<bool> seen(c.dim, false);
  for (std::size_t j = 0; j < c.normals.size(); ++j) {
    const auto& n = c.normals[j];
    std::size_t nz = 0, idx = 0;
    for (std::size_t i = 0; i < c.dim; ++i)
      if (n[i] != 0) {
        ++nz;
        idx = i;
      }
    if (nz == 1 && n[idx] == 1) {
      lo[idx] = seen[idx] ? std::max(lo[idx], c.rhs[j]) : c.rhs[j];
      seen[idx] = true;
    }
  }
  for (bool s : seen)
    if (!s) throw PreconditionError("the fan must contain every ray e_i");
  return lo;
}

NVec integral_offset(const MVec& m, const MVec& base) {
  MVec d = sub(m, base);
  if (!is_integral(d)) throw std::logic_error("point " + format(m) + " is off the expected coset");
  return floor_vec(d);
}

long long micros_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
}

void same_fan(const PLFunction& h, const PLFunction& k) {
  if (!(h.fan == k.fan)) throw PreconditionError("h and k must live on the same fan");
}

CheckReport run_targets(const std::vector<MVec>& targets, const Splitter& sp, const MVec& vh, const MVec& vk,
                        bool record, std::string mode) {
  auto t0 = std::chrono::steady_clock::now();
  MVec base = add(vh, vk);
  auto found = parallel_map<std::optional<NVec>>(targets.size(), [&](std::size_t i) {
    return sp.split(integral_offset(targets[i], base));
  });
  CheckReport rep;
  rep.mode = std::move(mode);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!found[i]) {
      rep.witnesses.push_back(targets[i]);
      continue;
    }
    if (record) {
      MVec m1 = add(vh, to_m(*found[i]));
      rep.decompositions.push_back({targets[i], m1, sub(targets[i], m1)});
    }
  }
  rep.verdict = rep.witnesses.empty() ? Verdict::Surjective : Verdict::NotSurjective;
  rep.stats["targets"] = static_cast<long long>(targets.size());
  rep.stats["witnesses"] = static_cast<long long>(rep.witnesses.size());
  rep.stats["elapsed_us"] = micros_since(t0);
  return rep;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Surjective:
      return "surjective";
    case Verdict::NotSurjective:
      return "not_surjective";
    default:
      return "unsupported";
  }
}

std::optional<MVec> find_split(const HPolyhedron& kh, const HPolyhedron& kk, const MVec& m) {
  MVec zm = sub(sub(m, kh.coset.base), kk.coset.base);
  if (!is_integral(zm)) return std::nullopt;
  HPolyhedron k = intersect(kh, reflect_through(m, kk));
  k.coset = kh.coset;
  auto verts = vertices(k);
  if (verts.empty()) return std::nullopt;
  NVec lo, hi;
  box_from_vertices(verts, kh.coset.base, lo, hi);
  auto c = to_int(k, kh.coset.base);
  std::optional<MVec> hit;
  scan_box(c, lo, hi, [&](const NVec& z) {
    hit = c.point(z);
    return false;
  });
  return hit;
}

HPolyhedron polytope_of(const PLFunction& h, const WeylGroup& w) {
  return polytope_P(weyl_extend(h, w), h.base_point());
}

CheckReport check_sum_open(const PLFunction& h, const PLFunction& k, bool record) {
  same_fan(h, k);
  if (h.fan.kind != FanKind::Open) throw PreconditionError("check_sum_open needs an open fan");
  if (!is_convex(h) || !is_convex(k)) throw PreconditionError("check_sum_open needs convex h and k");
  auto t0 = std::chrono::steady_clock::now();
  MVec vh = h.base_point(), vk = k.base_point();
  HPolyhedron qh = polyhedron_Q(h), qk = polyhedron_Q(k), qs = polyhedron_Q(h + k);
  auto minimal = minimal_lattice_points(qs);
  Splitter sp{to_int(qh, vh), to_int(qk, vk), {}, {}, {}, {}};
  sp.lo_h = unit_lower_bounds(sp.ch);
  sp.lo_k = unit_lower_bounds(sp.ck);
  sp.hi_h.assign(h.rank(), kNoBound);
  sp.hi_k.assign(h.rank(), kNoBound);
  auto rep = run_targets(minimal.points, sp, vh, vk, record, "open");
  rep.stats["minimal_points"] = static_cast<long long>(minimal.size());
  rep.stats["elapsed_us"] = micros_since(t0);
  return rep;
}

CheckReport check_sum_complete(const PLFunction& h, const PLFunction& k, const RootSystem& rs, const WeylGroup& w,
                               bool record) {
  same_fan(h, k);
  auto sh = bundle_status(h, &rs), sk = bundle_status(k, &rs);
  if (!sh.gg || !sk.gg) throw PreconditionError("check_sum_complete needs h and k generated by global sections");
  auto t0 = std::chrono::steady_clock::now();
  MVec vh = h.base_point(), vk = k.base_point(), vs = add(vh, vk);
  auto hc = weyl_extend(h, w), kc = weyl_extend(k, w), sc = weyl_extend(h + k, w);
  auto ph = polytope_P(hc, vh), pk = polytope_P(kc, vk), ps = polytope_P(sc, vs);
  Splitter sp{to_int(ph, vh), to_int(pk, vk), {}, {}, {}, {}};
  box_from_vertices(vertices_from_parts(hc), vh, sp.lo_h, sp.hi_h);
  box_from_vertices(vertices_from_parts(kc), vk, sp.lo_k, sp.hi_k);
  // Dominant targets only: the polytopes are Weyl-invariant.
  auto targets = lattice_points(with_dominance(ps, rs), vertices_from_parts(sc));
  auto rep = run_targets(targets.points, sp, vh, vk, record, "complete");
  if (!sh.ample || !sk.ample) rep.notes.push_back("inputs are generated by global sections but not ample");
  rep.stats["dominant_points"] = static_cast<long long>(targets.size());
  rep.stats["elapsed_us"] = micros_since(t0);
  return rep;
}

EquivalenceReport check_equivalence(const PLFunction& h, const PLFunction& k, const RootSystem& rs,
                                    const WeylGroup& w) {
  if (!bundle_status(h, &rs).ample || !bundle_status(k, &rs).ample)
    throw PreconditionError("check_equivalence needs ample h and k");
  EquivalenceReport r{check_sum_open(h, k), check_sum_complete(h, k, rs, w), false};
  r.agree = r.open.verdict == r.complete.verdict;
  if (!r.agree) {
    std::string s = "verdicts disagree; open witnesses:";
    for (const auto& m : r.open.witnesses) s += " " + format(m);
    s += "; complete witnesses:";
    for (const auto& m : r.complete.witnesses) s += " " + format(m);
    r.open.notes.push_back(s);
    r.complete.notes.push_back(s);
  }
  return r;
}

Transfer transfer_decomposition(const PLFunction& h, const PLFunction& k, const RootSystem& rs, const WeylGroup& w,
                                const MVec& m, const MVec& p0, const MVec& q0) {
  auto ph = polytope_of(h, w), pk = polytope_of(k, w);
  auto qk = polyhedron_Q(k);
  if (add(p0, q0) != m) throw PreconditionError("p0 + q0 differs from m");
  if (!ph.contains(p0)) throw PreconditionError("p0 is not in P_h on v_h + M");
  if (!qk.contains(q0)) throw PreconditionError("q0 is not in Q_k on v_k + M");
  Transfer t{p0, q0, {}};
  const std::size_t guard = 1000000;
  while (!pk.in_region(t.q)) {
    auto d = dotted_coords(rs, t.q);
    std::size_t j = 0;
    while (j < d.size() && d[j] <= 0) ++j;
    if (j == d.size()) throw std::logic_error("q is dominant in Q_k but outside P_k");
    MVec f = unit_m(rs.rank, j);
    t.p = add(t.p, f);
    t.q = sub(t.q, f);
    t.steps.push_back(j);
    if (!ph.in_region(t.p)) throw std::logic_error("transfer left P_h at " + format(t.p));
    if (!qk.in_region(t.q)) throw std::logic_error("transfer left Q_k at " + format(t.q));
    if (t.steps.size() > guard) throw std::runtime_error("transfer did not terminate");
  }
  return t;
}

Transfer complete_from_open(const PLFunction& h, const PLFunction& k, const RootSystem& rs, const WeylGroup& w,
                            const MVec& m, const MVec& p0, const MVec& q0) {
  auto e = express_Q_point(h, rs, w, p0);
  MVec q = q0;
  for (std::size_t i = 0; i < e.c.size(); ++i) q[i] += Rat(static_cast<long>(e.c[i]));
  return transfer_decomposition(h, k, rs, w, m, e.p_dom, q);
}

QExpression express_Q_point(const PLFunction& h, const RootSystem& rs, const WeylGroup& w, const MVec& p) {
  if (!bundle_status(h, &rs).ample) throw PreconditionError("express_Q_point needs an ample h");
  auto q = polyhedron_Q(h);
  if (!q.contains(p)) throw PreconditionError(format(p) + " is not in Q_h on v_h + M");
  QExpression e{p, std::vector<Int>(rs.rank, 0), {}};
  const std::size_t guard = 1000000;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > guard) throw std::runtime_error("descent did not terminate");
    auto d = dotted_coords(rs, e.p_dom);
    if (!is_integral(d)) throw PreconditionError("dotted coordinates of " + format(e.p_dom) + " are not integral");
    std::size_t j = 0;
    while (j < d.size() && d[j] <= 0) ++j;
    if (j == d.size()) break;
    Int t = to_int(d[j]) / 2;
    Int extra = to_int(d[j]) % 2;  // a remaining 1 needs the unit step through R_j
    e.p_dom[j] -= Rat(static_cast<long>(t + extra));
    e.c[j] += t + extra;
    e.trace.push_back("j=" + std::to_string(j + 1) + " subtract " + std::to_string(t) + "f" +
                      (extra ? " then one more f (R_j step)" : ""));
    if (!q.in_region(e.p_dom)) throw std::logic_error("descent left Q_h at " + format(e.p_dom));
  }
  if (!polytope_of(h, w).in_region(e.p_dom))
    throw std::logic_error("dominant point " + format(e.p_dom) + " of Q_h is outside P_h");
  return e;
}

RjReport check_Rj(const PLFunction& h, const RootSystem& rs, const WeylGroup& w, std::size_t j) {
  RjReport r;
  r.j = j;
  if (j >= rs.rank) throw std::out_of_range("check_Rj: index out of range");
  if (!bundle_status(h, &rs).ample) return r;
  r.supported = true;
  auto p = polytope_of(h, w);
  auto q = polyhedron_Q(h);
  r.wall_vertices = vertices(with_wall(p, rs, j));
  MVec half = scale(unit_m(rs.rank, j), Rat(1, 2));
  for (const auto& v : r.wall_vertices)
    for (const auto& cand : {add(v, half), sub(v, half)})
      if (!q.in_region(cand)) r.failures.push_back(cand);
  r.passed = r.failures.empty();
  return r;
}

SaturationReport check_saturation(const PLFunction& h, const PLFunction& k, const RootSystem& rs,
                                  const WeylGroup& w) {
  same_fan(h, k);
  SaturationReport r;
  r.notes.push_back(
      "S is built from lattice points only; it may be smaller than the set defined through the "
      "representation-level product, so a violation is a diagnostic rather than a counterexample");
  auto hc = weyl_extend(h, w), kc = weyl_extend(k, w), sc = weyl_extend(h + k, w);
  auto a = lattice_points(polytope_P(hc, h.base_point()), vertices_from_parts(hc));
  auto b = lattice_points(polytope_P(kc, k.base_point()), vertices_from_parts(kc));
  std::set<MVec> s;
  for (const auto& x : a.points)
    for (const auto& y : b.points) {
      MVec z = add(x, y);
      if (is_dominant(rs, z)) s.insert(std::move(z));
    }
  r.set_size = s.size();
  auto target = lattice_points(with_dominance(polytope_P(sc, add(h.base_point(), k.base_point())), rs),
                               vertices_from_parts(sc));
  for (const auto& nup : target.points) {
    if (s.count(nup)) continue;
    for (const auto& nu : s) {
      ++r.pairs_checked;
      MVec d = sub(nup, nu);
      if (std::all_of(d.begin(), d.end(), [](const Rat& x) { return x >= 0; })) {
        r.saturated = false;
        r.violations.push_back({nu, nup});
        break;
      }
    }
  }
  return r;
}

SaturationReport check_pi_saturation(const PLFunction& h, const RootSystem& rs, const WeylGroup& w) {
  SaturationReport r;
  auto hc = weyl_extend(h, w);
  auto pts = lattice_points(with_dominance(polytope_P(hc, h.base_point()), rs), vertices_from_parts(hc));
  r.set_size = pts.size();
  for (const auto& nu : pts.points) {
    HPolyhedron up;
    up.dim = rs.rank;
    for (std::size_t i = 0; i < rs.rank; ++i) up.add(unit_n(rs.rank, i), nu[i]);
    up = with_dominance(up, rs);
    up.coset.base = nu;
    for (const auto& nup : lattice_points(up).points) {
      ++r.pairs_checked;
      if (!pts.contains(nup)) {
        r.saturated = false;
        r.violations.push_back({nu, nup});
      }
    }
  }
  return r;
}

L1Report check_l1(const PLFunction& h, const RootSystem& rs, const WeylGroup& w, std::size_t deep,
                  std::uint64_t seed) {
  L1Report r;
  if (!bundle_status(h, &rs).ample) {
    r.notes.push_back("only checked for ample h");
    return r;
  }
  r.supported = true;
  auto q = polyhedron_Q(h);
  auto hc = weyl_extend(h, w);
  auto pc = with_dominance(polytope_P(hc, h.base_point()), rs);
  auto qc = with_dominance(q, rs);
  auto vq = vertices(qc), vp = vertices(pc);
  auto lp = lattice_points(pc, vertices_from_parts(hc));
  auto lq = lattice_points(qc, vq);
  r.vertices = vp.size();
  r.points = lp.size();
  r.l1a = vq == vp && lq.points == lp.points;
  if (vq != vp) r.notes.push_back("vertex sets of Q cap C+ and P cap C+ differ");
  if (lq.points != lp.points) r.notes.push_back("lattice points of Q cap C+ and P cap C+ differ");

  auto reaches = [&](const MVec& m) {
    try {
      auto e = express_Q_point(h, rs, w, m);
      bool ok = lp.contains(e.p_dom);
      MVec back = e.p_dom;
      for (std::size_t i = 0; i < e.c.size(); ++i) {
        ok = ok && e.c[i] >= 0;
        back[i] += Rat(static_cast<long>(e.c[i]));
      }
      return ok && back == m;
    } catch (const std::logic_error&) {
      return false;
    }
  };
  auto minimal = minimal_lattice_points(q);
  for (const auto& m : minimal.points) {
    ++r.minimal_checked;
    if (!reaches(m)) r.failures.push_back(m);
  }
  if (!minimal.points.empty()) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, minimal.size() - 1);
    std::uniform_int_distribution<int> step(0, 5);
    for (std::size_t i = 0; i < deep; ++i) {
      MVec m = minimal.points[pick(rng)];
      for (auto& x : m) x += step(rng);
      ++r.deep_checked;
      if (!reaches(m)) r.failures.push_back(m);
    }
  }
  r.l1b = r.failures.empty();
  return r;
}

}  // namespace symnorm
