#pragma once

#include "symnorm/lattice.hpp"
#include "symnorm/root_data.hpp"

#include <string>
#include <vector>

namespace symnorm {

enum class FanKind { Open, Complete };

using ConeIdx = std::vector<std::size_t>;  // sorted ray indices

// Simplicial fan stored by its maximal cones. Rays are kept in ascending
// lexicographic order of their coordinates and every cone lists its ray
// indices in ascending order, so equal fans compare equal.
struct Fan {
  std::size_t rank = 0;
  std::vector<NVec> rays;
  std::vector<ConeIdx> max_cones;
  FanKind kind = FanKind::Open;

  bool operator==(const Fan&) const = default;

  std::vector<NVec> cone_rays(std::size_t c) const;
  // Index of a ray vector, or -1.
  long ray_index(const NVec& v) const;
  // Index of the maximal cone with exactly these rays, or -1.
  long cone_index(const std::vector<NVec>& rays) const;
};

// Canonicalizes ray order and cone index lists. Throws on non-primitive or
// wrong-length rays and out-of-range indices; geometric checks live in validate.
Fan make_fan(std::size_t rank, std::vector<NVec> rays, std::vector<ConeIdx> cones,
             FanKind kind = FanKind::Open);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

ValidationReport validate(const Fan& fan);
bool is_proper_over_orthant(const Fan& fan);
bool is_smooth(const Fan& fan);
// Star subdivision at the cone spanned by gamma (a face of some maximal cone).
Fan star_subdivision(const Fan& fan, const std::vector<NVec>& gamma);
// The orbit fan {w.sigma}; requires the input to be open and proper over the orthant.
Fan symmetrize(const Fan& fan, const WeylGroup& w);

// Maximal cone of an open fan containing e_1+...+e_l, lexicographically
// smallest ray list on ties.
std::size_t designated_cone(const Fan& fan);
// Coefficients of v in the ray basis of a full-dimensional maximal cone.
MVec cone_coefficients(const Fan& fan, std::size_t cone, const NVec& v);
bool cone_contains(const Fan& fan, std::size_t cone, const NVec& v);
// First maximal cone containing v, or -1.
long locate_cone(const Fan& fan, const NVec& v);

// Star of a ray in the quotient lattice N / Z tau. U is unimodular with
// U tau = e_l; the quotient keeps the first l-1 coordinates of U v.
struct StarFan {
  NVec tau;
  IntMat U;
  Fan quotient;
  NVec project(const NVec& v) const;
};
StarFan star_fan(const Fan& fan, const NVec& tau);
IntMat unimodular_to_last(const NVec& tau);

namespace catalog {
Fan chamber(std::size_t l);
Fan ex1(std::size_t l, std::size_t r);
Fan ex1b(std::size_t l, std::size_t r);
Fan ex2b(Int a);
Fan ex3_1(std::size_t l, std::size_t n);
Fan ex3_2(std::size_t l, std::size_t n);
// v_i = i(e_1+...+e_{l-1}) + e_l, and w = e_1 + 2(e_2+...+e_l).
NVec ex3_v(std::size_t l, std::size_t i);
NVec ex3_w(std::size_t l);
}  // namespace catalog

}  // namespace symnorm
