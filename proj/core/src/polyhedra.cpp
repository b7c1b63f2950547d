#include "symnorm/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace symnorm {

namespace {

using i128 = __int128;

bool mul_ok(i128 a, i128 b, i128& out) { return !__builtin_mul_overflow(a, b, &out); }
bool sub_ok(i128 a, i128 b, i128& out) { return !__builtin_sub_overflow(a, b, &out); }
bool add_ok(i128 a, i128 b, i128& out) { return !__builtin_add_overflow(a, b, &out); }

// Bareiss determinant; false on overflow.
bool det128(std::vector<std::vector<i128>> m, i128& out) {
  const std::size_t n = m.size();
  i128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) {
        out = 0;
        return true;
      }
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        i128 a, b, c;
        if (!mul_ok(m[i][j], m[k][k], a) || !mul_ok(m[i][k], m[k][j], b) || !sub_ok(a, b, c)) return false;
        m[i][j] = c / prev;
      }
    prev = m[k][k];
  }
  out = n == 0 ? 1 : m[n - 1][n - 1] * sign;
  return true;
}

Rat to_rat(i128 num, i128 den) {
  auto z = [](i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class r(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += mpz_class(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    return neg ? mpz_class(-r) : r;
  };
  Rat q(z(num), z(den));
  q.canonicalize();
  return q;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Exact subset solve with GMP; used when the integer path overflows.
void vertex_exact(const HPolyhedron& k, const std::vector<std::size_t>& sub, std::set<MVec>& out) {
  const std::size_t l = k.dim;
  RatMat a(l, std::vector<Rat>(l));
  MVec b(l);
  for (std::size_t r = 0; r < l; ++r) {
    for (std::size_t c = 0; c < l; ++c) a[r][c] = Rat(static_cast<long>(k.ineqs[sub[r]].normal[c]));
    b[r] = k.ineqs[sub[r]].bound;
  }
  auto x = solve(a, b);
  if (x && k.in_region(*x)) out.insert(*x);
}

void require_dim(const HPolyhedron& k, const MVec& m) {
  if (m.size() != k.dim) throw DimensionError("point dimension differs from polyhedron dimension");
}

}  // namespace

bool HPolyhedron::in_region(const MVec& m) const {
  require_dim(*this, m);
  for (const auto& q : ineqs)
    if (pair(m, q.normal) < q.bound) return false;
  return true;
}

bool HPolyhedron::contains(const MVec& m) const { return coset.contains(m) && in_region(m); }

void HPolyhedron::add(NVec normal, Rat bound) {
  if (normal.size() != dim) throw DimensionError("inequality dimension mismatch");
  ineqs.push_back({std::move(normal), std::move(bound)});
}

void HPolyhedron::normalize() {
  std::map<NVec, Rat> best;
  for (auto& q : ineqs) {
    Int g = gcd_vec(q.normal);
    if (g == 0) throw std::invalid_argument("zero inequality normal");
    NVec n = q.normal;
    for (auto& x : n) x /= g;
    Rat b = q.bound / Rat(static_cast<long>(g));
    auto it = best.find(n);
    if (it == best.end())
      best.emplace(n, b);
    else if (b > it->second)
      it->second = b;
  }
  ineqs.clear();
  for (auto& [n, b] : best) ineqs.push_back({n, b});
}

bool LatticePointSet::contains(const MVec& m) const { return std::binary_search(points.begin(), points.end(), m); }

HPolyhedron polyhedron_Q(const PLFunction& h) {
  HPolyhedron q;
  q.dim = h.rank();
  for (std::size_t r = 0; r < h.fan.rays.size(); ++r) q.add(h.fan.rays[r], h.values[r]);
  q.normalize();
  q.coset.base = h.base_point();
  return q;
}

HPolyhedron polytope_P(const PLFunction& hc, const MVec& base) {
  if (hc.fan.kind != FanKind::Complete) throw std::invalid_argument("polytope_P needs a function on a complete fan");
  if (!is_convex(hc)) throw UnboundedError("h^c is not convex, so P_h is not the expected polytope");
  HPolyhedron p;
  p.dim = hc.rank();
  for (std::size_t r = 0; r < hc.fan.rays.size(); ++r) p.add(hc.fan.rays[r], hc.values[r]);
  p.normalize();
  p.coset.base = base;
  return p;
}

HPolyhedron intersect(const HPolyhedron& a, const HPolyhedron& b) {
  if (a.dim != b.dim) throw DimensionError("intersect: dimension mismatch");
  HPolyhedron r = a;
  for (const auto& q : b.ineqs) r.ineqs.push_back(q);
  r.normalize();
  return r;
}

HPolyhedron reflect_through(const MVec& m, const HPolyhedron& k) {
  HPolyhedron r;
  r.dim = k.dim;
  for (const auto& q : k.ineqs) r.add(neg(q.normal), q.bound - pair(m, q.normal));
  r.normalize();
  r.coset.base = sub(m, k.coset.base);
  return r;
}

HPolyhedron with_dominance(const HPolyhedron& k, const RootSystem& rs) {
  HPolyhedron r = k;
  for (std::size_t i = 0; i < rs.rank; ++i) r.add(neg(rs.cartan[i]), Rat(0));
  r.normalize();
  return r;
}

HPolyhedron with_wall(const HPolyhedron& k, const RootSystem& rs, std::size_t j) {
  HPolyhedron r = k;
  r.add(rs.cartan[j], Rat(0));
  r.add(neg(rs.cartan[j]), Rat(0));
  r.normalize();
  return r;
}

std::vector<MVec> vertices(const HPolyhedron& k) {
  const std::size_t l = k.dim;
  if (l > kVertexRankCap) throw std::length_error("vertex enumeration rank cap exceeded");
  std::set<MVec> out;
  // Scale bounds to integers with a common denominator D.
  mpz_class D = 1;
  for (const auto& q : k.ineqs) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), q.bound.get_den_mpz_t());
  std::vector<i128> B;
  bool int_path = D.fits_slong_p();
  for (const auto& q : k.ineqs) {
    if (!int_path) break;
    mpz_class v = q.bound.get_num() * (D / q.bound.get_den());
    if (!v.fits_slong_p()) int_path = false;
    else B.push_back(v.get_si());
  }
  const std::size_t n = k.ineqs.size();
  for_each_subset(n, l, [&](const std::vector<std::size_t>& sub) {
    if (!int_path) return vertex_exact(k, sub, out);
    std::vector<std::vector<i128>> a(l, std::vector<i128>(l));
    for (std::size_t r = 0; r < l; ++r)
      for (std::size_t c = 0; c < l; ++c) a[r][c] = k.ineqs[sub[r]].normal[c];
    i128 d;
    if (!det128(a, d)) return vertex_exact(k, sub, out);
    if (d == 0) return;
    std::vector<i128> X(l);
    for (std::size_t c = 0; c < l; ++c) {
      auto ac = a;
      for (std::size_t r = 0; r < l; ++r) ac[r][c] = B[sub[r]];
      if (!det128(ac, X[c])) return vertex_exact(k, sub, out);
    }
    // x = X / (d D); check n_j . X against B_j d with the sign of d.
    for (std::size_t j = 0; j < n; ++j) {
      i128 s = 0, t, rhs;
      for (std::size_t c = 0; c < l; ++c)
        if (!mul_ok(k.ineqs[j].normal[c], X[c], t) || !add_ok(s, t, s)) return vertex_exact(k, sub, out);
      if (!mul_ok(B[j], d, rhs)) return vertex_exact(k, sub, out);
      if (d > 0 ? s < rhs : s > rhs) return;
    }
    i128 den;
    if (!mul_ok(d, static_cast<i128>(D.get_si()), den)) return vertex_exact(k, sub, out);
    MVec v(l);
    for (std::size_t c = 0; c < l; ++c) v[c] = to_rat(X[c], den);
    out.insert(std::move(v));
  });
  return {out.begin(), out.end()};
}

bool is_bounded(const HPolyhedron& k) {
  const std::size_t l = k.dim;
  RatMat rows;
  for (const auto& q : k.ineqs) rows.push_back(to_m(q.normal));
  if (rank(rows) < static_cast<int>(l)) return false;
  // Bounded iff the recession cone {d : n . d >= 0} has no extreme ray.
  bool bounded = true;
  for_each_subset(rows.size(), l - 1, [&](const std::vector<std::size_t>& sub) {
    if (!bounded) return;
    RatMat sys;
    for (auto i : sub) sys.push_back(rows[i]);
    auto ns = nullspace(sys, l);
    if (ns.size() != 1) return;
    for (int sgn : {1, -1}) {
      MVec d = scale(ns[0], Rat(sgn));
      bool ok = true;
      for (const auto& q : k.ineqs)
        if (pair(d, q.normal) < 0) {
          ok = false;
          break;
        }
      if (ok) bounded = false;
    }
  });
  return bounded;
}

bool IntConstraints::contains(const NVec& z) const {
  for (std::size_t j = 0; j < normals.size(); ++j) {
    Int s = 0;
    for (std::size_t c = 0; c < dim; ++c) s += normals[j][c] * z[c];
    if (s < rhs[j]) return false;
  }
  return true;
}

MVec IntConstraints::point(const NVec& z) const { return add(base, to_m(z)); }

IntConstraints to_int(const HPolyhedron& k, const MVec& base) {
  IntConstraints c{k.dim, base, {}, {}};
  for (const auto& q : k.ineqs) {
    c.normals.push_back(q.normal);
    c.rhs.push_back(ceil_int(q.bound - pair(base, q.normal)));
  }
  return c;
}

std::size_t scan_box(const IntConstraints& c, const NVec& lo, const NVec& hi,
                     const std::function<bool(const NVec&)>& visit) {
  const std::size_t l = c.dim;
  for (std::size_t i = 0; i < l; ++i)
    if (lo[i] > hi[i]) return 0;
  // Partial sums per constraint let the innermost loop touch one coordinate.
  const std::size_t n = c.normals.size();
  NVec z = lo;
  std::vector<Int> s(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < l; ++i) s[j] += c.normals[j][i] * z[i];
  std::size_t examined = 0;
  for (;;) {
    ++examined;
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = s[j] >= c.rhs[j];
    if (ok && !visit(z)) return examined;
    std::size_t i = l;
    while (i > 0) {
      --i;
      if (z[i] < hi[i]) {
        ++z[i];
        for (std::size_t j = 0; j < n; ++j) s[j] += c.normals[j][i];
        break;
      }
      for (std::size_t j = 0; j < n; ++j) s[j] -= c.normals[j][i] * (z[i] - lo[i]);
      z[i] = lo[i];
      if (i == 0) return examined;
    }
    if (l == 0) return examined;
  }
}

namespace {

LatticePointSet scan_vertices_box(const HPolyhedron& k, const std::vector<MVec>& verts, bool open_upper) {
  LatticePointSet out{k.coset, {}};
  if (verts.empty()) return out;
  const std::size_t l = k.dim;
  const MVec& b = k.coset.base;
  NVec lo(l), hi(l);
  for (std::size_t i = 0; i < l; ++i) {
    Rat mn = verts[0][i], mx = verts[0][i];
    for (const auto& v : verts) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = ceil_int(mn - b[i]);
    hi[i] = open_upper ? ceil_int(mx - b[i] + 1) - 1 : floor_int(mx - b[i]);
  }
  auto c = to_int(k, b);
  if (!open_upper) {
    scan_box(c, lo, hi, [&](const NVec& z) {
      out.points.push_back(c.point(z));
      return true;
    });
    return out;
  }
  scan_box(c, lo, hi, [&](const NVec& z) {
    NVec y = z;
    for (std::size_t i = 0; i < l; ++i) {
      --y[i];
      bool below = c.contains(y);
      ++y[i];
      if (below) return true;
    }
    out.points.push_back(c.point(z));
    return true;
  });
  return out;
}

}  // namespace

LatticePointSet lattice_points(const HPolyhedron& k) {
  if (!is_bounded(k)) throw UnboundedError("lattice_points needs a bounded polyhedron");
  return scan_vertices_box(k, vertices(k), false);
}

LatticePointSet lattice_points(const HPolyhedron& k, const std::vector<MVec>& verts) {
  return scan_vertices_box(k, verts, false);
}

std::vector<MVec> vertices_from_parts(const PLFunction& h) {
  std::set<MVec> s(h.parts.begin(), h.parts.end());
  return {s.begin(), s.end()};
}

LatticePointSet minimal_lattice_points(const HPolyhedron& q) {
  for (const auto& ineq : q.ineqs)
    for (Int x : ineq.normal)
      if (x < 0) throw std::invalid_argument("minimal_lattice_points needs normals in the orthant");
  return scan_vertices_box(q, vertices(q), true);
}

PiSets pi_sets(const PLFunction& h, const RootSystem& rs, const WeylGroup& w) {
  if (!bundle_status(h, &rs).gg) throw std::invalid_argument("pi_sets needs h generated by global sections");
  PiSets out;
  out.Pi_Z = polyhedron_Q(h);
  auto hc = weyl_extend(h, w);
  auto p = polytope_P(hc, h.base_point());
  out.Pi_Zc = lattice_points(p);
  out.Pi_Y.coset = out.Pi_Zc.coset;
  for (const auto& m : out.Pi_Zc.points)
    if (is_dominant(rs, m)) out.Pi_Y.points.push_back(m);
  auto direct = lattice_points(with_dominance(out.Pi_Z, rs));
  out.consistent = direct.points == out.Pi_Y.points;
  return out;
}

MVec FaceRestriction::lift(const MVec& m_face) const {
  MVec mp = m_face;
  mp.push_back(level);
  return act(transpose(U), mp);
}

MVec FaceRestriction::project(const MVec& m) const {
  MVec mp = act(transpose(inverse_unimodular(U)), m);
  mp.pop_back();
  return mp;
}

FaceRestriction face_restriction(const HPolyhedron& k, const NVec& tau, const Rat& level) {
  if (k.dim < 2) throw std::invalid_argument("face_restriction needs dimension >= 2");
  FaceRestriction f{tau, unimodular_to_last(tau), level, {}};
  const std::size_t l = k.dim;
  f.face.dim = l - 1;
  for (const auto& q : k.ineqs) {
    NVec un = act(f.U, q.normal);
    Rat b = q.bound - level * Rat(static_cast<long>(un[l - 1]));
    un.pop_back();
    if (gcd_vec(un) == 0) {
      if (b > 0) throw EmptyError("face pair(m, " + format(tau) + ") = " + to_string(level) + " is empty");
      continue;
    }
    f.face.add(un, b);
  }
  f.face.normalize();
  f.face.coset.base = f.project(k.coset.base);
  RatMat rows;
  for (const auto& q : f.face.ineqs) rows.push_back(to_m(q.normal));
  if (!f.face.ineqs.empty() && rank(rows) == static_cast<int>(l - 1) && vertices(f.face).empty())
    throw EmptyError("face pair(m, " + format(tau) + ") = " + to_string(level) + " is empty");
  return f;
}

}  // namespace symnorm
