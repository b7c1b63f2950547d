#include "symnorm/splitters.hpp"

#include <algorithm>
#include <numeric>

namespace symnorm {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

Int ival(const Rat& q) {
  if (!is_integer(q)) throw PreconditionError("expected an integral value, got " + to_string(q));
  return to_int(q);
}

Int ival(const PLFunction& h, const NVec& ray) { return ival(h.value(ray)); }

void require_toric_integral(const PLFunction& h) {
  for (const auto& p : h.parts)
    if (!is_integral(p)) throw PreconditionError("constructive splitters need integral linear parts");
}

void require_convex(const PLFunction& h) {
  if (!is_convex(h)) throw PreconditionError("constructive splitters need convex functions");
}

void require_target(const PLFunction& h, const PLFunction& k, const MVec& m) {
  if (!(h.fan == k.fan)) throw PreconditionError("h and k must live on the same fan");
  if (m.size() != h.rank()) throw DimensionError("point has the wrong dimension");
  if (!is_integral(m)) throw PreconditionError(format(m) + " is not a lattice point");
  if (!polyhedron_Q(h + k).contains(m)) throw PreconditionError(format(m) + " is not in Q_{h+k}");
}

FamilyMatch require_family(const Fan& fan, const std::string& name) {
  auto f = identify_family(fan);
  // A chain of one blow-up is the single blow-up along sigma(e_1, e_2).
  if (f && name == "ex1b" && f->name == "ex1" && f->params[1] == 2) return FamilyMatch{"ex1b", f->params};
  // ex2b(1) is the blow-up of A^3 at the origin.
  if (f && name == "ex2b" && f->name == "ex1" && f->params == std::vector<Int>{3, 3}) return FamilyMatch{"ex2b", {1}};
  // ex3_1(l, 1) blows up the origin only.
  if (f && name == "ex3_1" && f->name == "ex1" && f->params[0] == f->params[1])
    return FamilyMatch{"ex3_1", {f->params[0], 1}};
  if (!f || f->name != name) throw PreconditionError("fan is not of family " + name);
  return *f;
}

// Rational m~1 with m~1 in kh and m - m~1 in kk: the midpoint shifted by the
// basepoints when it works, otherwise the centroid of the vertices of
// kh cap (m - kk).
std::pair<MVec, std::string> rational_seed(const HPolyhedron& kh, const HPolyhedron& kk, const MVec& m) {
  const std::size_t l = m.size();
  MVec vh = kh.coset.base.empty() ? zero_m(l) : kh.coset.base;
  MVec vk = kk.coset.base.empty() ? zero_m(l) : kk.coset.base;
  MVec mid = scale(add(m, sub(vh, vk)), Rat(1, 2));
  if (kh.in_region(mid) && kk.in_region(sub(m, mid))) return {mid, "seed midpoint " + format(mid)};
  auto verts = vertices(intersect(kh, reflect_through(m, kk)));
  if (verts.empty()) throw PreconditionError("no real decomposition of " + format(m));
  MVec c = zero_m(l);
  for (const auto& v : verts) c = add(c, v);
  c = scale(c, Rat(1, static_cast<long>(verts.size())));
  return {c, "seed vertex centroid " + format(c)};
}

// x_i >= lo_i for all i and sum over S of x_i >= b.
struct BlowupData {
  NVec lo;
  std::vector<std::size_t> S;
  Int b = 0;
  bool contains(const NVec& v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < lo[i]) return false;
    Int s = 0;
    for (auto i : S) s += v[i];
    return s >= b;
  }
};

// Floor/epsilon rounding of a rational split x + (m - x).
NVec blowup_round(const BlowupData& H, const BlowupData& K, const NVec& m, const MVec& x,
                  std::vector<std::string>& trace) {
  const std::size_t l = m.size();
  NVec fl(l), eps(l), fy(l);
  for (std::size_t i = 0; i < l; ++i) {
    fl[i] = floor_int(x[i]);
    eps[i] = is_integer(x[i]) ? 0 : 1;
    fy[i] = m[i] - fl[i] - eps[i];
  }
  trace.push_back("floors " + format(fl) + ", eps " + format(eps));
  if (K.contains(fy)) {
    trace.push_back("floor of m2 feasible: m1 = floor + eps");
    return add(fl, eps);
  }
  if (H.contains(fl)) {
    trace.push_back("floor of m1 feasible: m1 = floor");
    return fl;
  }
  Int need = H.b;
  for (auto i : H.S) need -= fl[i];
  NVec m1 = fl;
  std::size_t s = 0;
  for (auto i : H.S) {
    if (need == 0) break;
    if (eps[i]) {
      ++m1[i];
      --need;
      s = i + 1;
    }
  }
  if (need != 0) throw std::logic_error("blow-up rounding found no cut index; " + join(trace));
  trace.push_back("cut index s = " + std::to_string(s));
  return m1;
}

SplitWitness finish(std::string algo, const PLFunction& h, const PLFunction& k, const MVec& m, const MVec& m1,
                    std::vector<std::string> trace) {
  SplitWitness w{std::move(algo), m, m1, sub(m, m1), std::move(trace)};
  verify_witness(h, k, w);
  return w;
}

struct Tri {
  std::vector<std::string>* trace;
  std::size_t depth = 0, max_depth = 0;

  void note(const std::string& s) {
    if (trace) trace->push_back(s);
  }

  NVec run(Int a1, Int a2, Int t1, Int t2, const NVec& m) {
    const Int x = m[0], y = m[1], T = t1 + t2;
    if (x >= 0) return {0, std::clamp<Int>(y, -a1 * t1, 0)};
    if (y >= 0) return {std::clamp<Int>(x, -a2 * t1, 0), 0};
    if (a1 == a2) {
      if (a1 != 1) throw std::logic_error("triangle normal is not primitive");
      note("base (1,1) triangle, sizes " + std::to_string(t1) + "+" + std::to_string(t2) + ", m " + format(m));
      if (t1 == 0) return {0, 0};
      if (t2 == 0) return m;
      MVec seed = scale(to_m(m), make_rat(t1, T));
      BlowupData H{{-t1, -t1}, {0, 1}, -t1}, K{{-t2, -t2}, {0, 1}, -t2};
      std::vector<std::string> local;
      NVec r = blowup_round(H, K, m, seed, local);
      for (auto& s : local) note(s);
      return r;
    }
    if (a2 > a1) {
      NVec r = run(a2, a1, t1, t2, {y, x});
      return {r[1], r[0]};
    }
    if (++depth > max_depth) throw std::logic_error("triangle recursion exceeded a1 + a2");
    if (x + y >= -a2 * T) {
      note("cut (" + std::to_string(a1) + "," + std::to_string(a2) + "): corner part, (1,1) triangle");
      return run(1, 1, a2 * t1, a2 * t2, m);
    }
    note("cut (" + std::to_string(a1) + "," + std::to_string(a2) + "): far part, normal becomes (" +
         std::to_string(a1 - a2) + "," + std::to_string(a2) + ")");
    NVec r = run(a1 - a2, a2, t1, t2, {x, x + y + a2 * T});
    // back through (u, v) -> (u, v - u) after removing the corner (0, -a2 t1)
    Int u = r[0], v = r[1] - a2 * t1;
    return {u, v - u};
  }
};

}  // namespace

void verify_witness(const PLFunction& h, const PLFunction& k, const SplitWitness& w) {
  std::string why;
  if (add(w.m1, w.m2) != w.m) why = "m1 + m2 differs from m";
  else if (!polyhedron_Q(h).contains(w.m1)) why = "m1 = " + format(w.m1) + " is not in Q_h";
  else if (!polyhedron_Q(k).contains(w.m2)) why = "m2 = " + format(w.m2) + " is not in Q_k";
  if (!why.empty()) throw std::logic_error(w.algorithm + " witness invalid for " + format(w.m) + ": " + why +
                                           "; trace: " + join(w.trace));
}

std::optional<FamilyMatch> identify_family(const Fan& fan) {
  const std::size_t l = fan.rank, nr = fan.rays.size();
  if (fan.kind != FanKind::Open || l < 2) return std::nullopt;
  auto I = [](std::size_t v) { return static_cast<Int>(v); };
  if (nr == l + 1)
    for (std::size_t r = 2; r <= l; ++r)
      if (fan == catalog::ex1(l, r)) return FamilyMatch{"ex1", {I(l), I(r)}};
  if (nr > l + 1 && nr - l + 1 <= l && fan == catalog::ex1b(l, nr - l + 1))
    return FamilyMatch{"ex1b", {I(l), I(nr - l + 1)}};
  if (l == 3 && nr == 4) {
    const NVec& u = fan.rays.back();
    if (u[0] >= 1 && fan == catalog::ex2b(u[0])) return FamilyMatch{"ex2b", {u[0]}};
  }
  if (nr > l + 1 && fan == catalog::ex3_1(l, nr - l)) return FamilyMatch{"ex3_1", {I(l), I(nr - l)}};
  if (nr > l + 1 && fan == catalog::ex3_2(l, nr - l - 1)) return FamilyMatch{"ex3_2", {I(l), I(nr - l - 1)}};
  return std::nullopt;
}

SplitWitness split_blowup(const PLFunction& h, const PLFunction& k, const MVec& m) {
  auto fam = require_family(h.fan, "ex1");
  require_convex(h);
  require_convex(k);
  require_toric_integral(h);
  require_toric_integral(k);
  require_target(h, k, m);
  const std::size_t l = h.rank(), r = static_cast<std::size_t>(fam.params[1]);
  NVec u(l, 0);
  std::vector<std::size_t> S;
  for (std::size_t i = 0; i < r; ++i) {
    u[i] = 1;
    S.push_back(i);
  }
  BlowupData H{NVec(l), S, ival(h, u)}, K{NVec(l), S, ival(k, u)};
  for (std::size_t i = 0; i < l; ++i) {
    H.lo[i] = ival(h, unit_n(l, i));
    K.lo[i] = ival(k, unit_n(l, i));
  }
  auto [seed, how] = rational_seed(polyhedron_Q(h), polyhedron_Q(k), m);
  std::vector<std::string> trace{how};
  NVec m1 = blowup_round(H, K, floor_vec(m), seed, trace);
  return finish("blowup", h, k, m, to_m(m1), std::move(trace));
}

SplitWitness split_chain_blowup(const PLFunction& h, const MVec& m) {
  auto fam = require_family(h.fan, "ex1b");
  require_convex(h);
  require_toric_integral(h);
  require_target(h, h, m);
  const std::size_t l = h.rank(), r = static_cast<std::size_t>(fam.params[1]);
  const std::size_t s = r % 2 ? r : r - 1;
  NVec z = floor_vec(m), m1(l), eps(l);
  for (std::size_t i = 0; i < l; ++i) {
    m1[i] = z[i] >= 0 ? z[i] / 2 : -((1 - z[i]) / 2);
    eps[i] = z[i] - 2 * m1[i];
    if (i % 2 == 0 && i < s) m1[i] += eps[i];
  }
  std::vector<std::string> trace{"eps " + format(eps), "s = " + std::to_string(s)};
  return finish("chain", h, h, m, to_m(m1), std::move(trace));
}

std::pair<NVec, NVec> split_triangle(Int a1, Int a2, Int t1, Int t2, const NVec& m, std::vector<std::string>* trace,
                                     std::size_t* depth) {
  if (a1 < 1 || a2 < 1 || std::gcd(a1, a2) != 1) throw std::invalid_argument("split_triangle: bad normal");
  if (t1 < 0 || t2 < 0) throw std::invalid_argument("split_triangle: negative size");
  Tri tri{trace, 0, static_cast<std::size_t>(a1 + a2)};
  NVec m1 = tri.run(a1, a2, t1, t2, m);
  if (depth) *depth = tri.depth;
  return {m1, NVec{m[0] - m1[0], m[1] - m1[1]}};
}

SplitWitness split_dim2(const PLFunction& h1, const PLFunction& h2, const MVec& m) {
  if (h1.rank() != 2) throw PreconditionError("split_dim2 needs rank 2");
  if (h1.fan.kind != FanKind::Open) throw PreconditionError("split_dim2 needs an open fan");
  require_convex(h1);
  require_convex(h2);
  require_toric_integral(h1);
  require_toric_integral(h2);
  require_target(h1, h2, m);
  std::vector<NVec> rays = h1.fan.rays;
  for (const auto& r : rays)
    if (r[0] < 0 || r[1] < 0) throw PreconditionError("fan is not supported in the orthant");
  std::sort(rays.begin(), rays.end(), [](const NVec& a, const NVec& b) { return a[1] * b[0] < b[1] * a[0]; });
  if (rays.front() != NVec{1, 0} || rays.back() != NVec{0, 1})
    throw PreconditionError("fan must contain e_1 and e_2");
  const std::size_t nc = rays.size() - 1;
  std::vector<MVec> p1(nc), p2(nc), p3(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    long ci = h1.fan.cone_index({rays[c], rays[c + 1]});
    if (ci < 0) throw PreconditionError("fan is not a subdivision of the orthant");
    p1[c] = h1.parts[ci];
    p2[c] = h2.parts[ci];
    p3[c] = add(p1[c], p2[c]);
  }
  std::vector<std::string> trace;
  for (std::size_t c = 0; c < nc; ++c)
    if (m[0] >= p3[c][0] && m[1] >= p3[c][1]) {
      trace.push_back("vertex cone " + std::to_string(c) + " at " + format(p3[c]));
      return finish("dim2", h1, h2, m, p1[c], std::move(trace));
    }
  for (std::size_t c = 0; c + 1 < nc; ++c) {
    if (!(p3[c][0] <= m[0] && m[0] <= p3[c + 1][0])) continue;
    const NVec& rho = rays[c + 1];
    const Int a1 = rho[0], a2 = rho[1];
    auto size = [&](const MVec& a, const MVec& b) {
      Rat t = (b[0] - a[0]) / Rat(static_cast<long>(a2));
      if (!is_integer(t) || t < 0) throw std::logic_error("side triangle has a non-integral size");
      return to_int(t);
    };
    Int t1 = size(p1[c], p1[c + 1]), t2 = size(p2[c], p2[c + 1]);
    MVec c1{p1[c + 1][0], p1[c][1]}, c2{p2[c + 1][0], p2[c][1]};
    trace.push_back("side triangle between cones " + std::to_string(c) + "," + std::to_string(c + 1) +
                    ", normal " + format(rho) + ", sizes " + std::to_string(t1) + "+" + std::to_string(t2));
    std::size_t depth = 0;
    auto [r1, r2] = split_triangle(a1, a2, t1, t2, floor_vec(sub(sub(m, c1), c2)), &trace, &depth);
    trace.push_back("recursion depth " + std::to_string(depth));
    return finish("dim2", h1, h2, m, add(c1, to_m(r1)), std::move(trace));
  }
  throw std::logic_error("split_dim2: no side triangle contains " + format(m));
}

SplitWitness split_simplex3(const PLFunction& h, const MVec& m) {
  auto fam = require_family(h.fan, "ex2b");
  require_convex(h);
  require_toric_integral(h);
  require_target(h, h, m);
  const Int a = fam.params[0];
  NVec c{ival(h, {1, 0, 0}), ival(h, {0, 1, 0}), ival(h, {0, 0, 1})};
  Int B = ival(h, {a, a, 1}) - a * c[0] - a * c[1] - c[2];
  if (B < 0 || B % a != 0) throw std::logic_error("ex2b function has unexpected vertex data");
  const Int b = B / a;
  NVec x = floor_vec(sub(m, scale(to_m(c), Rat(2))));
  std::vector<std::string> trace{"a = " + std::to_string(a) + ", b = " + std::to_string(b)};
  for (const NVec& v : {NVec{0, 0, a * b}, NVec{0, b, 0}, NVec{b, 0, 0}})
    if (x[0] >= 2 * v[0] && x[1] >= 2 * v[1] && x[2] >= 2 * v[2]) {
      trace.push_back("vertex cone at " + format(add(to_m(c), to_m(v))));
      return finish("simplex3", h, h, m, add(to_m(c), to_m(v)), std::move(trace));
    }
  // Q_h depends on x1 + x2 only through its sum: split (x1 + x2, x3) in the plane.
  const Int s = x[0] + x[1], z = x[2];
  trace.push_back("plane point (" + std::to_string(s) + "," + std::to_string(z) + ")");
  auto [r1, r2] = split_triangle(a, 1, b, b, {s - 2 * b, z - 2 * a * b}, &trace);
  const Int s1 = b + r1[0], z1 = a * b + r1[1];
  const Int x1 = std::min(x[0], s1);
  NVec m1{c[0] + x1, c[1] + s1 - x1, c[2] + z1};
  return finish("simplex3", h, h, m, to_m(m1), std::move(trace));
}

RSelection select_r(Int t, Int fx, Int fy, std::optional<Int> b, std::optional<Int> c) {
  RSelection s;
  if (!b || t + fx <= *b) {
    s.branch = 1;
    s.r = c ? std::min(fy + t - *c, t) : t;
  } else if (c && fx + fy + t <= *b + *c) {
    s.branch = 2;
    s.r = *c - fy > 0 ? t + fy - *c : t;
  } else {
    s.branch = 3;
    s.r = *b - fx;
  }
  if (s.r < 0 || s.r > t) throw std::logic_error("select_r produced r outside [0, t]");
  return s;
}

std::optional<NVec> tight_ray(const PLFunction& h, const PLFunction& k, const MVec& m) {
  const std::size_t l = h.rank();
  std::vector<NVec> cand;
  for (const auto& r : h.fan.rays)
    if (r[l - 1] == 1) cand.push_back(r);
  std::sort(cand.begin(), cand.end(), [](const NVec& a, const NVec& b) { return a[0] < b[0]; });
  for (const auto& r : cand)
    if (pair(m, r) == h.value(r) + k.value(r)) return r;
  return std::nullopt;
}

SplitWitness split_zn(const PLFunction& h, const PLFunction& k, const MVec& m) {
  require_family(h.fan, "ex3_1");
  require_convex(h);
  require_convex(k);
  require_toric_integral(h);
  require_toric_integral(k);
  require_target(h, k, m);
  const std::size_t l = h.rank(), d = l - 1;
  std::vector<std::string> trace;

  // minimal layer: drop multiples of f_i while staying in Q_{h+k}
  HPolyhedron q = polyhedron_Q(h + k);
  MVec m0 = m;
  for (std::size_t i = 0; i < l; ++i) {
    std::optional<Rat> step;
    for (const auto& in : q.ineqs)
      if (in.normal[i] > 0) {
        Rat s = floor_rat((pair(m0, in.normal) - in.bound) / Rat(static_cast<long>(in.normal[i])));
        if (!step || s < *step) step = s;
      }
    if (step && *step > 0) m0[i] -= *step;
  }
  MVec delta = sub(m, m0);
  trace.push_back("minimal point " + format(m0) + ", removed " + format(delta));

  auto tau = tight_ray(h, k, m0);
  if (!tau) throw std::logic_error("no tight ray at minimal point " + format(m0));
  const Int it = (*tau)[0];
  const Int Lh = ival(h, *tau), Lk = ival(k, *tau);
  trace.push_back("tight ray " + format(*tau));

  // Face m(tau) = level in the coordinates m_1..m_{l-1}: x_i >= lo_i and
  // lower <= x_1 + ... + x_{l-1} <= upper.
  struct Face {
    NVec lo;
    std::optional<Int> lower, upper;
    HPolyhedron poly;
  };
  auto face = [&](const PLFunction& f, Int L) {
    Face F{NVec(d), std::nullopt, std::nullopt, {}};
    for (std::size_t i = 0; i < d; ++i) F.lo[i] = ival(f, unit_n(l, i));
    for (const auto& r : f.fan.rays) {
      if (r[l - 1] != 1 || r == *tau) continue;
      const Int dd = r[0] - it;
      const Rat c = f.value(r) - Rat(static_cast<long>(L));
      if (dd > 0) {
        Int v = ceil_int(c / Rat(static_cast<long>(dd)));
        F.lower = F.lower ? std::max(*F.lower, v) : v;
      } else {
        Int v = floor_int(c / Rat(static_cast<long>(dd)));
        F.upper = F.upper ? std::min(*F.upper, v) : v;
      }
    }
    F.poly.dim = d;
    F.poly.coset.base = zero_m(d);
    for (std::size_t i = 0; i < d; ++i) F.poly.add(unit_n(d, i), make_rat(F.lo[i]));
    if (F.lower) F.poly.add(NVec(d, 1), make_rat(*F.lower));
    if (F.upper) F.poly.add(NVec(d, -1), make_rat(-*F.upper));
    return F;
  };
  Face Fh = face(h, Lh), Fk = face(k, Lk);
  MVec mt(m0.begin(), m0.end() - 1);
  auto [seed, how] = rational_seed(Fh.poly, Fk.poly, mt);
  trace.push_back(how);

  NVec fl(d), eps(d);
  Int t = 0, fx = 0, fy = 0;
  for (std::size_t i = 0; i < d; ++i) {
    fl[i] = floor_int(seed[i]);
    eps[i] = is_integer(seed[i]) ? 0 : 1;
    t += eps[i];
    fx += fl[i];
    fy += to_int(mt[i]) - fl[i] - eps[i];
  }
  auto sel = select_r(t, fx, fy, Fh.upper, Fk.lower);
  trace.push_back("t = " + std::to_string(t) + ", [x] = " + std::to_string(fx) + ", [y] = " + std::to_string(fy) +
                  ", branch " + std::to_string(sel.branch) + ", r = " + std::to_string(sel.r));
  MVec m1(l);
  Int left = sel.r, dot = 0;
  for (std::size_t i = 0; i < d; ++i) {
    Int v = fl[i];
    if (left > 0 && eps[i]) {
      ++v;
      --left;
    }
    m1[i] = make_rat(v);
    dot += (*tau)[i] * v;
  }
  m1[l - 1] = make_rat(Lh - dot);
  SplitWitness w{"zn", m, m1, add(sub(m0, m1), delta), std::move(trace)};
  verify_witness(h, k, w);
  return w;
}

Algorithm parse_algorithm(const std::string& s) {
  if (s == "blowup") return Algorithm::Blowup;
  if (s == "chain") return Algorithm::Chain;
  if (s == "dim2") return Algorithm::Dim2;
  if (s == "simplex3") return Algorithm::Simplex3;
  if (s == "zn") return Algorithm::Zn;
  if (s == "auto") return Algorithm::Auto;
  throw std::invalid_argument("unknown algorithm '" + s + "'");
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Blowup:
      return "blowup";
    case Algorithm::Chain:
      return "chain";
    case Algorithm::Dim2:
      return "dim2";
    case Algorithm::Simplex3:
      return "simplex3";
    case Algorithm::Zn:
      return "zn";
    default:
      return "auto";
  }
}

Algorithm detect_algorithm(const PLFunction& h, const PLFunction& k) {
  auto fam = identify_family(h.fan);
  const bool same = h.values == k.values;
  if (fam) {
    if (fam->name == "ex1") return Algorithm::Blowup;
    if (fam->name == "ex1b" && same) return Algorithm::Chain;
    if (fam->name == "ex2b" && same) return Algorithm::Simplex3;
    if (fam->name == "ex3_1") return Algorithm::Zn;
  }
  if (h.rank() == 2) return Algorithm::Dim2;
  throw PreconditionError("no constructive splitter applies to this fan");
}

SplitWitness split(Algorithm a, const PLFunction& h, const PLFunction& k, const MVec& m) {
  if (a == Algorithm::Auto) a = detect_algorithm(h, k);
  if ((a == Algorithm::Chain || a == Algorithm::Simplex3) && h.values != k.values)
    throw PreconditionError(to_string(a) + " needs k = h");
  switch (a) {
    case Algorithm::Blowup:
      return split_blowup(h, k, m);
    case Algorithm::Chain:
      return split_chain_blowup(h, m);
    case Algorithm::Dim2:
      return split_dim2(h, k, m);
    case Algorithm::Simplex3:
      return split_simplex3(h, m);
    default:
      return split_zn(h, k, m);
  }
}

Ex32Data ex3_2_data(const PLFunction& h) {
  auto fam = require_family(h.fan, "ex3_2");
  const std::size_t l = h.rank(), n = static_cast<std::size_t>(fam.params[1]);
  MVec c(l);
  for (std::size_t j = 0; j < l; ++j) c[j] = h.value(unit_n(l, j));
  PLFunction g = shift(h, c);
  Ex32Data e;
  for (std::size_t i = 1; i <= n; ++i) e.a.push_back(ival(g, catalog::ex3_v(l, i)));
  e.b = ival(g, catalog::ex3_w(l));
  const Int a1 = e.a[0], b = e.b;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) e.failed.push_back(what);
  };
  check(b > a1, "b > a_1");
  check(a1 > 0, "a_1 > 0");
  check(2 * a1 > b, "2a_1 > b");
  for (std::size_t i = 2; i <= n; ++i) {
    const Int ii = static_cast<Int>(i), ai = e.a[i - 1];
    check(ai + (ii - 1) * b < (2 * ii - 1) * a1, "a_" + std::to_string(i) + " + " + std::to_string(i - 1) +
                                                     "b < " + std::to_string(2 * i - 1) + "a_1");
    check(ii * a1 > ai, std::to_string(i) + "a_1 > a_" + std::to_string(i));
  }
  e.inequalities_hold = e.failed.empty();
  return e;
}

CheckReport check_ex3_2(const PLFunction& h) {
  auto e = ex3_2_data(h);
  const bool ample = is_strictly_convex(h);
  std::string failed = join(e.failed);
  if (!ample)
    throw PreconditionError("h is not ample on ex3_2" + (failed.empty() ? "" : " (failed: " + failed + ")"));
  auto rep = check_sum_open(h, h);
  rep.mode = "ex3_2";
  std::string vals = "a =";
  for (auto v : e.a) vals += " " + std::to_string(v);
  rep.notes.push_back(vals + ", b = " + std::to_string(e.b));
  if (!e.inequalities_hold)
    rep.notes.push_back("h is ample but the necessary inequalities fail: " + failed);
  rep.stats["inequalities_hold"] = e.inequalities_hold ? 1 : 0;
  return rep;
}

}  // namespace symnorm
