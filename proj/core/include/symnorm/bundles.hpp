#pragma once

#include "symnorm/fans.hpp"
#include "symnorm/root_data.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace symnorm {

struct BundleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A Delta-linear function given by its values on the rays of a simplicial fan.
// parts[c] is the linear part on max_cones[c]. When the fan is complete the
// object plays the role of the Weyl extension h^c.
struct PLFunction {
  Fan fan;
  std::vector<Rat> values;  // aligned with fan.rays
  std::vector<MVec> parts;  // aligned with fan.max_cones
  SphericalLattice lattice;

  std::size_t rank() const { return fan.rank; }
  Rat value(const NVec& ray) const;
  // v_h: the linear part on the designated cone (open fans only).
  MVec base_point() const;
};

// Solves the linear parts and checks consistency, the M-integrality of part
// differences, and membership of every part in the lattice. A null root system
// with the default lattice means Lambda_X = M.
PLFunction from_ray_values(const Fan& fan, const std::vector<Rat>& values,
                           const SphericalLattice& lattice = SphericalLattice::toric_default(),
                           const RootSystem* rs = nullptr);

Rat evaluate(const PLFunction& h, const NVec& v);
bool is_convex(const PLFunction& h);
bool is_strictly_convex(const PLFunction& h);

struct BundleStatus {
  bool gg = false;
  bool ample = false;
};
// Without a root system only convexity is tested.
BundleStatus bundle_status(const PLFunction& h, const RootSystem* rs);

// h^c on symmetrize(h.fan, W), with h^c|w.sigma = w.(h|sigma).
PLFunction weyl_extend(const PLFunction& h, const WeylGroup& w);

PLFunction divisor_function(const Fan& fan, const NVec& tau);
// a_tau = lambda(rho) - h(rho), aligned with fan.rays; throws when some
// coefficient is negative or non-integral.
std::vector<Int> decompose_weight_plus_divisors(const PLFunction& h, const MVec& lambda);

// Pointwise sum; the two functions must live on the same fan.
PLFunction operator+(const PLFunction& h, const PLFunction& k);
// h - m for a linear form m, on the same fan.
PLFunction shift(const PLFunction& h, const MVec& m);

}  // namespace symnorm
