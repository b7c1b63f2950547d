#pragma once

#include "symnorm/bundles.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace symnorm {

// pair(m, normal) >= bound
struct Inequality {
  NVec normal;
  Rat bound;
  bool operator==(const Inequality&) const = default;
};

struct HPolyhedron {
  std::size_t dim = 0;
  std::vector<Inequality> ineqs;
  LatticeCoset coset;

  // Inequalities only.
  bool in_region(const MVec& m) const;
  // Inequalities and coset.
  bool contains(const MVec& m) const;
  // Normals become primitive and equal normals keep the tightest bound.
  void normalize();
  void add(NVec normal, Rat bound);
};

struct LatticePointSet {
  LatticeCoset coset;
  std::vector<MVec> points;  // sorted, distinct
  std::size_t size() const { return points.size(); }
  bool contains(const MVec& m) const;
};

struct EmptyError : std::domain_error {
  using std::domain_error::domain_error;
};
struct UnboundedError : std::domain_error {
  using std::domain_error::domain_error;
};

HPolyhedron polyhedron_Q(const PLFunction& h);
// P for the complete function hc; `base` is the coset basepoint v_h.
// Throws UnboundedError when hc is not convex.
HPolyhedron polytope_P(const PLFunction& hc, const MVec& base);

HPolyhedron intersect(const HPolyhedron& a, const HPolyhedron& b);
// {m - x : x in k}, with coset m - coset(k).
HPolyhedron reflect_through(const MVec& m, const HPolyhedron& k);
HPolyhedron with_dominance(const HPolyhedron& k, const RootSystem& rs);
// The wall H_j (dotted coordinate j equal to zero) as two inequalities.
HPolyhedron with_wall(const HPolyhedron& k, const RootSystem& rs, std::size_t j);

// Rank cap for vertex enumeration (default 5, SYMNORM_CAP does not apply).
inline constexpr std::size_t kVertexRankCap = 5;
// Exact vertex set, sorted. Empty when the polyhedron is empty or has no vertex.
std::vector<MVec> vertices(const HPolyhedron& k);
bool is_bounded(const HPolyhedron& k);

// Integer form of a polyhedron on its coset: m = base + z lies in K iff
// normals[j] . z >= rhs[j] for every j.
struct IntConstraints {
  std::size_t dim = 0;
  MVec base;
  std::vector<NVec> normals;
  std::vector<Int> rhs;
  bool contains(const NVec& z) const;
  MVec point(const NVec& z) const;
};
IntConstraints to_int(const HPolyhedron& k, const MVec& base);
// Calls visit(z) for every integer z in the box lo <= z <= hi (inclusive)
// satisfying the constraints, in lexicographic order; stops when visit
// returns false. Returns the number of box points examined.
std::size_t scan_box(const IntConstraints& c, const NVec& lo, const NVec& hi,
                     const std::function<bool(const NVec&)>& visit);

LatticePointSet lattice_points(const HPolyhedron& k);
// Same, with a known vertex set (e.g. the linear parts of a convex function).
LatticePointSet lattice_points(const HPolyhedron& k, const std::vector<MVec>& verts);
// Distinct linear parts, sorted; these are the vertices of Q_h or P_h when h is convex.
std::vector<MVec> vertices_from_parts(const PLFunction& h);
// {m in Q on the coset : m - f_i not in Q for all i}. Needs normals in the orthant.
LatticePointSet minimal_lattice_points(const HPolyhedron& q);

struct PiSets {
  HPolyhedron Pi_Z;  // Q_h on v_h + M
  LatticePointSet Pi_Zc;
  LatticePointSet Pi_Y;
  // Q_h on the dominant chamber computed directly, compared with Pi_Y.
  bool consistent = false;
};
PiSets pi_sets(const PLFunction& h, const RootSystem& rs, const WeylGroup& w);

// The face pair(m, tau) = level, in coordinates m' = U^{-T} m where U tau = e_l.
struct FaceRestriction {
  NVec tau;
  IntMat U;
  Rat level;
  HPolyhedron face;  // dimension l-1
  MVec lift(const MVec& m_face) const;
  MVec project(const MVec& m) const;
};
FaceRestriction face_restriction(const HPolyhedron& k, const NVec& tau, const Rat& level);

}  // namespace symnorm
