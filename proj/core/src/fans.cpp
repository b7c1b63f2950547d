#include "symnorm/fans.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace symnorm {

namespace {

// H-description of a simplicial cone: row i of `coef` gives the coefficient of
// ray i (i < k, must be >= 0) or of a padding vector (i >= k, must be 0).
struct ConeH {
  std::size_t k = 0;
  RatMat coef;
};

std::optional<ConeH> cone_h(const std::vector<NVec>& rays, std::size_t l) {
  RatMat cols;
  for (const auto& r : rays) cols.push_back(to_m(r));
  if (rank(cols) < static_cast<int>(rays.size())) return std::nullopt;
  for (std::size_t i = 0; i < l && cols.size() < l; ++i) {
    cols.push_back(unit_m(l, i));
    if (rank(cols) < static_cast<int>(cols.size())) cols.pop_back();
  }
  RatMat m(l, std::vector<Rat>(l));
  for (std::size_t c = 0; c < l; ++c)
    for (std::size_t r = 0; r < l; ++r) m[r][c] = cols[c][r];
  return ConeH{rays.size(), *inverse(m)};
}

Rat dot(const std::vector<Rat>& row, const MVec& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += row[i] * x[i];
  return s;
}

// True iff cone(a) and cone(b) meet exactly in the cone over their shared rays.
bool meets_in_common_face(const std::vector<NVec>& a, const std::vector<NVec>& b, std::size_t l) {
  auto ha = cone_h(a, l), hb = cone_h(b, l);
  if (!ha || !hb) return false;
  RatMat ineq, eq;
  for (const ConeH* h : {&*ha, &*hb})
    for (std::size_t i = 0; i < l; ++i) (i < h->k ? ineq : eq).push_back(h->coef[i]);
  auto satisfies = [&](const MVec& d) {
    for (const auto& row : ineq)
      if (dot(row, d) < 0) return false;
    for (const auto& row : eq)
      if (dot(row, d) != 0) return false;
    return true;
  };
  std::vector<bool> a_shared(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    a_shared[i] = std::find(b.begin(), b.end(), a[i]) != b.end();
  // Every extreme ray of the intersection must be supported on shared rays of a.
  const std::size_t n = ineq.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) + 1 > l) continue;
    RatMat sys = eq;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sys.push_back(ineq[i]);
    auto ns = nullspace(sys, l);
    if (ns.size() != 1) continue;
    for (int sgn : {1, -1}) {
      MVec d = scale(ns[0], Rat(sgn));
      if (!satisfies(d)) continue;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!a_shared[i] && dot(ha->coef[i], d) != 0) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool in_orthant(const NVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
}

// Facet pairing for a complete simplicial fan: every codimension-one face of
// a maximal cone lies in exactly two maximal cones.
void check_complete(const Fan& fan, ValidationReport& rep) {
  std::map<ConeIdx, int> facets;
  for (const auto& c : fan.max_cones) {
    if (c.size() != fan.rank) {
      rep.ok = false;
      rep.violations.push_back("complete fan has a maximal cone of dimension " +
                               std::to_string(c.size()));
      return;
    }
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      ConeIdx f;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (i != drop) f.push_back(c[i]);
      ++facets[f];
    }
  }
  for (const auto& [f, n] : facets)
    if (n != 2) {
      rep.ok = false;
      std::string s = "codimension-one face {";
      for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + format(fan.rays[f[i]]);
      rep.violations.push_back(s + "} lies in " + std::to_string(n) + " maximal cones");
    }
}

}  // namespace

std::vector<NVec> Fan::cone_rays(std::size_t c) const {
  std::vector<NVec> out;
  for (auto i : max_cones.at(c)) out.push_back(rays[i]);
  return out;
}

long Fan::ray_index(const NVec& v) const {
  auto it = std::lower_bound(rays.begin(), rays.end(), v);
  if (it == rays.end() || *it != v) return -1;
  return static_cast<long>(it - rays.begin());
}

long Fan::cone_index(const std::vector<NVec>& rs) const {
  ConeIdx idx;
  for (const auto& r : rs) {
    long i = ray_index(r);
    if (i < 0) return -1;
    idx.push_back(static_cast<std::size_t>(i));
  }
  std::sort(idx.begin(), idx.end());
  auto it = std::lower_bound(max_cones.begin(), max_cones.end(), idx);
  if (it == max_cones.end() || *it != idx) return -1;
  return static_cast<long>(it - max_cones.begin());
}

Fan make_fan(std::size_t rank, std::vector<NVec> rays, std::vector<ConeIdx> cones, FanKind kind) {
  for (const auto& r : rays)
    if (r.size() != rank) throw DimensionError("ray length differs from fan rank");
  std::vector<std::size_t> order(rays.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return rays[x] < rays[y]; });
  std::vector<std::size_t> where(rays.size());
  Fan f;
  f.rank = rank;
  f.kind = kind;
  for (std::size_t i = 0; i < order.size(); ++i) {
    where[order[i]] = i;
    if (i > 0 && rays[order[i]] == rays[order[i - 1]])
      throw std::invalid_argument("duplicate ray " + format(rays[order[i]]));
    f.rays.push_back(rays[order[i]]);
  }
  for (auto& c : cones) {
    ConeIdx m;
    for (auto i : c) {
      if (i >= rays.size()) throw std::out_of_range("cone references missing ray " + std::to_string(i));
      m.push_back(where[i]);
    }
    std::sort(m.begin(), m.end());
    f.max_cones.push_back(std::move(m));
  }
  std::sort(f.max_cones.begin(), f.max_cones.end());
  return f;
}

ValidationReport validate(const Fan& fan) {
  ValidationReport rep;
  auto fail = [&](std::string s) {
    rep.ok = false;
    rep.violations.push_back(std::move(s));
  };
  if (fan.rank == 0) fail("rank must be positive");
  std::vector<bool> used(fan.rays.size(), false);
  for (const auto& r : fan.rays) {
    if (gcd_vec(r) != 1) fail("ray " + format(r) + " is not primitive");
    if (fan.kind == FanKind::Open && !in_orthant(r)) fail("ray " + format(r) + " lies outside the orthant");
  }
  std::vector<bool> simplicial(fan.max_cones.size(), false);
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& idx = fan.max_cones[c];
    if (idx.empty()) {
      fail("empty maximal cone");
      continue;
    }
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
      fail("maximal cone " + std::to_string(c) + " repeats a ray");
      continue;
    }
    for (auto i : idx) used[i] = true;
    RatMat m;
    for (auto i : idx) m.push_back(to_m(fan.rays[i]));
    if (idx.size() > fan.rank || rank(m) < static_cast<int>(idx.size()))
      fail("maximal cone " + std::to_string(c) + " is not simplicial");
    else
      simplicial[c] = true;
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) fail("ray " + format(fan.rays[i]) + " lies in no maximal cone");
  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
      const auto &ca = fan.max_cones[a], &cb = fan.max_cones[b];
      if (std::includes(ca.begin(), ca.end(), cb.begin(), cb.end()) ||
          std::includes(cb.begin(), cb.end(), ca.begin(), ca.end())) {
        fail("maximal cones " + std::to_string(a) + " and " + std::to_string(b) + " are nested");
        continue;
      }
      if (!simplicial[a] || !simplicial[b]) continue;
      if (!meets_in_common_face(fan.cone_rays(a), fan.cone_rays(b), fan.rank))
        fail("maximal cones " + std::to_string(a) + " and " + std::to_string(b) +
             " do not meet in a common face");
    }
  if (fan.kind == FanKind::Complete && rep.ok) check_complete(fan, rep);
  return rep;
}

bool is_proper_over_orthant(const Fan& fan) {
  if (fan.kind != FanKind::Open || !validate(fan).ok) return false;
  // Normalized volume of each cone cut by sum(x) <= 1, relative to the orthant's.
  Rat total = 0;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    auto rays = fan.cone_rays(c);
    if (rays.size() != fan.rank) return false;
    Int d = det(IntMat(rays.begin(), rays.end()));
    Rat v(static_cast<long>(d < 0 ? -d : d));
    for (const auto& r : rays) {
      Int s = 0;
      for (Int x : r) s += x;
      v /= Rat(static_cast<long>(s));
    }
    total += v;
  }
  return total == 1;
}

bool is_smooth(const Fan& fan) {
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    auto rays = fan.cone_rays(c);
    const std::size_t k = rays.size();
    if (k == fan.rank) {
      if (!is_lattice_basis(rays)) return false;
      continue;
    }
    // Extends to a basis iff the k x k minors are coprime.
    Int g = 0;
    for (const auto& cols : subsets(fan.rank, k)) {
      IntMat m(k, std::vector<Int>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = rays[i][cols[j]];
      Int d = det(m);
      g = std::gcd(g, d < 0 ? -d : d);
    }
    if (g != 1) return false;
  }
  return true;
}

Fan star_subdivision(const Fan& fan, const std::vector<NVec>& gamma) {
  if (gamma.size() < 2) throw std::invalid_argument("star subdivision needs a cone of dimension >= 2");
  ConeIdx g;
  NVec sum(fan.rank, 0);
  for (const auto& r : gamma) {
    long i = fan.ray_index(r);
    if (i < 0) throw std::invalid_argument("cone to subdivide is not in the fan: missing ray " + format(r));
    g.push_back(static_cast<std::size_t>(i));
    sum = add(sum, r);
  }
  std::sort(g.begin(), g.end());
  NVec rho = primitive(sum);
  if (fan.ray_index(rho) >= 0) throw std::invalid_argument("new ray " + format(rho) + " already present");
  std::vector<NVec> rays = fan.rays;
  rays.push_back(rho);
  const std::size_t rho_idx = rays.size() - 1;
  std::vector<ConeIdx> cones;
  bool found = false;
  for (const auto& c : fan.max_cones) {
    if (!std::includes(c.begin(), c.end(), g.begin(), g.end())) {
      cones.push_back(c);
      continue;
    }
    found = true;
    for (auto r : g) {
      ConeIdx nc;
      for (auto i : c)
        if (i != r) nc.push_back(i);
      nc.push_back(rho_idx);
      cones.push_back(nc);
    }
  }
  if (!found) throw std::invalid_argument("cone to subdivide is not in the fan");
  return make_fan(fan.rank, std::move(rays), std::move(cones), fan.kind);
}

Fan symmetrize(const Fan& fan, const WeylGroup& w) {
  if (fan.kind != FanKind::Open) throw std::invalid_argument("symmetrize expects an open fan");
  if (!is_proper_over_orthant(fan)) throw std::invalid_argument("symmetrize expects a fan proper over the orthant");
  std::map<NVec, std::size_t> index;
  std::vector<NVec> rays;
  std::set<ConeIdx> cones;
  for (const auto& g : w.on_n)
    for (const auto& c : fan.max_cones) {
      ConeIdx idx;
      for (auto i : c) {
        NVec v = act(g, fan.rays[i]);
        auto [it, fresh] = index.emplace(v, rays.size());
        if (fresh) rays.push_back(v);
        idx.push_back(it->second);
      }
      std::sort(idx.begin(), idx.end());
      cones.insert(idx);
    }
  Fan out = make_fan(fan.rank, rays, {cones.begin(), cones.end()}, FanKind::Complete);
  ValidationReport rep;
  check_complete(out, rep);
  if (!rep.ok) throw std::runtime_error("symmetrized cones do not form a complete fan: " + rep.violations.front());
  return out;
}

std::size_t designated_cone(const Fan& fan) {
  NVec ones(fan.rank, 1);
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
    if (fan.max_cones[c].size() == fan.rank && cone_contains(fan, c, ones)) return c;
  throw std::invalid_argument("no maximal cone contains e_1+...+e_l");
}

MVec cone_coefficients(const Fan& fan, std::size_t cone, const NVec& v) {
  auto rays = fan.cone_rays(cone);
  if (rays.size() != fan.rank) throw DimensionError("cone is not full-dimensional");
  RatMat m(fan.rank, std::vector<Rat>(fan.rank));
  for (std::size_t c = 0; c < fan.rank; ++c)
    for (std::size_t r = 0; r < fan.rank; ++r) m[r][c] = Rat(static_cast<long>(rays[c][r]));
  auto x = solve(m, to_m(v));
  if (!x) throw SingularError("cone rays are dependent");
  return *x;
}

bool cone_contains(const Fan& fan, std::size_t cone, const NVec& v) {
  for (const auto& c : cone_coefficients(fan, cone, v))
    if (c < 0) return false;
  return true;
}

long locate_cone(const Fan& fan, const NVec& v) {
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
    if (cone_contains(fan, c, v)) return static_cast<long>(c);
  return -1;
}

IntMat unimodular_to_last(const NVec& tau) {
  const std::size_t l = tau.size();
  if (gcd_vec(tau) != 1) throw std::invalid_argument("vector is not primitive");
  IntMat u = identity_int(l);
  NVec v = tau;
  for (;;) {
    std::size_t p = l;
    for (std::size_t i = 0; i < l; ++i)
      if (v[i] != 0 && (p == l || std::abs(v[i]) < std::abs(v[p]))) p = i;
    bool done = true;
    for (std::size_t j = 0; j < l; ++j) {
      if (j == p || v[j] == 0) continue;
      done = false;
      Int q = v[j] / v[p];
      v[j] -= q * v[p];
      for (std::size_t c = 0; c < l; ++c) u[j][c] -= q * u[p][c];
    }
    if (done) {
      if (v[p] < 0) {
        v[p] = -v[p];
        for (auto& x : u[p]) x = -x;
      }
      std::swap(u[p], u[l - 1]);
      return u;
    }
  }
}

NVec StarFan::project(const NVec& v) const {
  NVec w = act(U, v);
  w.pop_back();
  return w;
}

StarFan star_fan(const Fan& fan, const NVec& tau) {
  long t = fan.ray_index(tau);
  if (t < 0) throw std::invalid_argument("star_fan: " + format(tau) + " is not a ray of the fan");
  if (fan.rank < 2) throw std::invalid_argument("star_fan needs rank >= 2");
  StarFan s{tau, unimodular_to_last(tau), {}};
  std::vector<NVec> rays;
  std::vector<ConeIdx> cones;
  for (const auto& c : fan.max_cones) {
    if (!std::binary_search(c.begin(), c.end(), static_cast<std::size_t>(t))) continue;
    ConeIdx idx;
    for (auto i : c) {
      if (i == static_cast<std::size_t>(t)) continue;
      NVec p = primitive(s.project(fan.rays[i]));
      auto it = std::find(rays.begin(), rays.end(), p);
      if (it == rays.end()) {
        rays.push_back(p);
        it = rays.end() - 1;
      }
      idx.push_back(static_cast<std::size_t>(it - rays.begin()));
    }
    cones.push_back(idx);
  }
  bool interior = fan.kind == FanKind::Complete ||
                  std::all_of(tau.begin(), tau.end(), [](Int x) { return x > 0; });
  s.quotient = make_fan(fan.rank - 1, rays, cones, interior ? FanKind::Complete : FanKind::Open);
  return s;
}

namespace catalog {

Fan chamber(std::size_t l) {
  if (l == 0) throw std::invalid_argument("chamber: rank must be positive");
  std::vector<NVec> rays;
  ConeIdx c;
  for (std::size_t i = 0; i < l; ++i) {
    rays.push_back(unit_n(l, i));
    c.push_back(i);
  }
  return make_fan(l, rays, {c});
}

Fan ex1(std::size_t l, std::size_t r) {
  if (r < 2 || r > l) throw std::invalid_argument("ex1: need 2 <= r <= l");
  std::vector<NVec> g;
  for (std::size_t i = 0; i < r; ++i) g.push_back(unit_n(l, i));
  return star_subdivision(chamber(l), g);
}

Fan ex1b(std::size_t l, std::size_t r) {
  if (r < 2 || r > l) throw std::invalid_argument("ex1b: need 2 <= r <= l");
  Fan f = chamber(l);
  for (std::size_t i = 1; i < r; ++i) f = star_subdivision(f, {unit_n(l, i - 1), unit_n(l, i)});
  return f;
}

Fan ex2b(Int a) {
  if (a < 1) throw std::invalid_argument("ex2b: need a >= 1");
  std::vector<NVec> rays{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {a, a, 1}};
  return make_fan(3, rays, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

NVec ex3_v(std::size_t l, std::size_t i) {
  NVec v(l, static_cast<Int>(i));
  v[l - 1] = 1;
  return v;
}

NVec ex3_w(std::size_t l) {
  NVec w(l, 2);
  w[0] = 1;
  return w;
}

Fan ex3_1(std::size_t l, std::size_t n) {
  if (l < 2 || n < 1) throw std::invalid_argument("ex3_1: need l >= 2, n >= 1");
  Fan f = chamber(l);
  std::vector<NVec> all;
  for (std::size_t i = 0; i < l; ++i) all.push_back(unit_n(l, i));
  f = star_subdivision(f, all);
  for (std::size_t i = 2; i <= n; ++i) {
    std::vector<NVec> g(all.begin(), all.end() - 1);
    g.push_back(ex3_v(l, i - 1));
    f = star_subdivision(f, g);
  }
  return f;
}

Fan ex3_2(std::size_t l, std::size_t n) {
  Fan f = ex3_1(l, n);
  std::vector<NVec> g{ex3_v(l, 1)};
  for (std::size_t i = 1; i < l; ++i) g.push_back(unit_n(l, i));
  return star_subdivision(f, g);
}

}  // namespace catalog

}  // namespace symnorm
