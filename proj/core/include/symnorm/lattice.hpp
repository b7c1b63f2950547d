#pragma once

#include "symnorm/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symnorm {

// Weights: rational coordinates in the basis f_1..f_l of M_R.
using MVec = std::vector<Rat>;
// One-parameter subgroups: integer coordinates in the dual basis e_1..e_l of N.
using NVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SingularError : std::domain_error {
  using std::domain_error::domain_error;
};

Rat pair(const MVec& m, const NVec& n);
bool is_lattice_basis(const std::vector<NVec>& vs);
// Unique m with pair(m, rays[i]) = values[i]; rays must be l independent vectors.
MVec solve_linear_form(const std::vector<NVec>& rays, const std::vector<Rat>& values);

MVec zero_m(std::size_t l);
MVec unit_m(std::size_t l, std::size_t i);
NVec unit_n(std::size_t l, std::size_t i);
MVec to_m(const NVec& v);
MVec add(const MVec& a, const MVec& b);
MVec sub(const MVec& a, const MVec& b);
MVec scale(const MVec& a, const Rat& c);
NVec add(const NVec& a, const NVec& b);
NVec neg(const NVec& a);
bool is_integral(const MVec& m);
// Componentwise floor; throws if a coordinate overflows Int.
NVec floor_vec(const MVec& m);

Int gcd_vec(const NVec& v);
NVec primitive(const NVec& v);
bool is_primitive(const NVec& v);

Int det(const IntMat& a);       // exact, via GMP
Rat det(const RatMat& a);
std::optional<RatMat> inverse(const RatMat& a);
std::optional<MVec> solve(const RatMat& a, const MVec& b);
int rank(const RatMat& a);
// Basis of {x : a x = 0} for a matrix with ncols columns.
std::vector<MVec> nullspace(RatMat a, std::size_t ncols);
RatMat to_rat(const IntMat& a);
IntMat transpose(const IntMat& a);
IntMat identity_int(std::size_t l);
IntMat mul(const IntMat& a, const IntMat& b);
NVec act(const IntMat& a, const NVec& v);
MVec act(const IntMat& a, const MVec& v);
MVec act(const RatMat& a, const MVec& v);
// Inverse of a unimodular integer matrix; throws SingularError otherwise.
IntMat inverse_unimodular(const IntMat& a);

// The coset v + M; membership is integrality of the difference.
struct LatticeCoset {
  MVec base;
  bool contains(const MVec& m) const;
  // Canonical representative with coordinates in [0, 1).
  MVec reduced() const;
};

std::string format(const MVec& m);
std::string format(const NVec& n);

}  // namespace symnorm
