#include "symnorm/bundles.hpp"

#include <algorithm>

namespace symnorm {

namespace {

std::vector<MVec> solve_parts(const Fan& fan, const std::vector<Rat>& values) {
  std::vector<MVec> parts;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& idx = fan.max_cones[c];
    if (idx.size() != fan.rank) throw BundleError("maximal cone " + std::to_string(c) + " is not full-dimensional");
    std::vector<Rat> vals;
    for (auto i : idx) vals.push_back(values[i]);
    parts.push_back(solve_linear_form(fan.cone_rays(c), vals));
  }
  return parts;
}

}  // namespace

Rat PLFunction::value(const NVec& ray) const {
  long i = fan.ray_index(ray);
  if (i < 0) throw std::invalid_argument(format(ray) + " is not a ray of the fan");
  return values[i];
}

MVec PLFunction::base_point() const { return parts[designated_cone(fan)]; }

PLFunction from_ray_values(const Fan& fan, const std::vector<Rat>& values, const SphericalLattice& lattice,
                           const RootSystem* rs) {
  if (values.size() != fan.rays.size())
    throw BundleError("expected " + std::to_string(fan.rays.size()) + " ray values, got " +
                      std::to_string(values.size()));
  if (rs && rs->rank != fan.rank) throw DimensionError("root system rank differs from fan rank");
  PLFunction h{fan, values, solve_parts(fan, values), lattice};
  if (!h.lattice.is_m && h.lattice.generators.empty()) {
    if (rs)
      for (std::size_t i = 0; i < fan.rank; ++i) h.lattice.generators.push_back(scale(g_vector(*rs, i), Rat(-1)));
    else
      h.lattice.is_m = true;
  }
  for (std::size_t c = 0; c < h.parts.size(); ++c) {
    if (!h.lattice.contains(rs, h.parts[c]))
      throw BundleError("linear part " + format(h.parts[c]) + " on cone " + std::to_string(c) +
                        " is not in the spherical lattice");
    if (c > 0 && !is_integral(sub(h.parts[c], h.parts[0])))
      throw BundleError("linear parts on cones 0 and " + std::to_string(c) + " differ by a non-integral weight");
  }
  return h;
}

Rat evaluate(const PLFunction& h, const NVec& v) {
  long c = locate_cone(h.fan, v);
  if (c < 0) throw std::domain_error(format(v) + " lies outside the support of the fan");
  return pair(h.parts[c], v);
}

bool is_convex(const PLFunction& h) {
  for (const auto& part : h.parts)
    for (std::size_t r = 0; r < h.fan.rays.size(); ++r)
      if (pair(part, h.fan.rays[r]) < h.values[r]) return false;
  return true;
}

bool is_strictly_convex(const PLFunction& h) {
  if (!is_convex(h)) return false;
  for (std::size_t a = 0; a < h.parts.size(); ++a)
    for (std::size_t b = a + 1; b < h.parts.size(); ++b)
      if (h.parts[a] == h.parts[b]) return false;
  return true;
}

BundleStatus bundle_status(const PLFunction& h, const RootSystem* rs) {
  BundleStatus s{is_convex(h), is_strictly_convex(h)};
  if (!rs) return s;
  for (const auto& part : h.parts) {
    s.gg = s.gg && is_dominant(*rs, part);
    s.ample = s.ample && is_regular(*rs, part);
  }
  return s;
}

PLFunction weyl_extend(const PLFunction& h, const WeylGroup& w) {
  Fan fc = symmetrize(h.fan, w);
  std::vector<std::optional<Rat>> vals(fc.rays.size());
  std::vector<std::optional<MVec>> parts(fc.max_cones.size());
  for (std::size_t g = 0; g < w.size(); ++g) {
    for (std::size_t r = 0; r < h.fan.rays.size(); ++r) {
      long i = fc.ray_index(act(w.on_n[g], h.fan.rays[r]));
      if (vals[i] && *vals[i] != h.values[r]) throw BundleError("ray values are not Weyl-invariant");
      vals[i] = h.values[r];
    }
    for (std::size_t c = 0; c < h.fan.max_cones.size(); ++c) {
      std::vector<NVec> img;
      for (const auto& r : h.fan.cone_rays(c)) img.push_back(act(w.on_n[g], r));
      long i = fc.cone_index(img);
      MVec p = act(w.on_m[g], h.parts[c]);
      if (parts[i] && *parts[i] != p) throw BundleError("linear parts are not Weyl-equivariant");
      parts[i] = std::move(p);
    }
  }
  PLFunction hc{fc, {}, {}, h.lattice};
  for (auto& v : vals) hc.values.push_back(*v);
  for (auto& p : parts) hc.parts.push_back(*p);
  return hc;
}

PLFunction divisor_function(const Fan& fan, const NVec& tau) {
  long t = fan.ray_index(tau);
  if (t < 0) throw std::invalid_argument(format(tau) + " is not a ray of the fan");
  std::vector<Rat> vals(fan.rays.size(), Rat(0));
  vals[t] = -1;
  return from_ray_values(fan, vals);
}

std::vector<Int> decompose_weight_plus_divisors(const PLFunction& h, const MVec& lambda) {
  std::vector<Int> a;
  for (std::size_t r = 0; r < h.fan.rays.size(); ++r) {
    Rat c = pair(lambda, h.fan.rays[r]) - h.values[r];
    if (c < 0) throw std::domain_error("weight " + format(lambda) + " is below h on ray " + format(h.fan.rays[r]));
    if (!is_integer(c)) throw std::domain_error("coefficient on ray " + format(h.fan.rays[r]) + " is not integral");
    a.push_back(to_int(c));
  }
  return a;
}

PLFunction operator+(const PLFunction& h, const PLFunction& k) {
  if (!(h.fan == k.fan)) throw std::invalid_argument("functions live on different fans");
  PLFunction s = h;
  for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] += k.values[i];
  for (std::size_t c = 0; c < s.parts.size(); ++c) s.parts[c] = add(s.parts[c], k.parts[c]);
  return s;
}

PLFunction shift(const PLFunction& h, const MVec& m) {
  PLFunction s = h;
  for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] -= pair(m, s.fan.rays[i]);
  for (auto& p : s.parts) p = sub(p, m);
  return s;
}

}  // namespace symnorm
