#pragma once

#include "symnorm/lattice.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace symnorm {

// Restricted root system, recorded through the Cartan matrix A of the reduced
// system sharing its simple roots. f_i = -alpha_i, g_i = -omega_i, and
// f_i = sum_j A[j][i] g_j, so the g-coordinates of m are A * m.
struct RootSystem {
  std::string label;
  std::size_t rank = 0;
  IntMat cartan;

  // Columns are the g-coordinates of the f_i; equal to the Cartan matrix.
  const IntMat& basis_change() const { return cartan; }
};

// Catalog names: A1..A4, B2..B4, C2..C4, D4, BC1..BC4, G2 and products joined
// by 'x' such as A1xA1 or A1xA2. Throws std::invalid_argument otherwise.
RootSystem make_root_system(const std::string& label);
// Validates Cartan shape (2 on the diagonal, non-positive off-diagonal, zero
// pattern symmetric).
RootSystem make_custom_root_system(const IntMat& cartan, std::string label = "custom");

MVec dotted_coords(const RootSystem& rs, const MVec& m);
// g_i expressed in f-coordinates.
MVec g_vector(const RootSystem& rs, std::size_t i);
IntMat simple_reflection(const RootSystem& rs, std::size_t j);
bool is_dominant(const RootSystem& rs, const MVec& m);
bool is_regular(const RootSystem& rs, const MVec& m);

struct WeylGroup {
  // Matrices acting on f-coordinates of M; element 0 is the identity.
  std::vector<IntMat> on_m;
  // The contragredient action on e-coordinates of N: on_n[i] = on_m[i]^{-T}.
  std::vector<IntMat> on_n;
  std::size_t size() const { return on_m.size(); }
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default cap 10^6, overridable by SYMNORM_CAP.
std::size_t enumeration_cap(std::size_t fallback = 1000000);
WeylGroup generate_weyl_group(const RootSystem& rs, std::size_t cap = enumeration_cap());

struct DominantRep {
  IntMat w;  // on f-coordinates
  MVec m_dom;
  std::vector<std::size_t> word;  // reflections applied, in order
};
DominantRep dominant_representative(const RootSystem& rs, const MVec& m);

// Lattice Lambda_X generated by l vectors in f-coordinates. Empty generators
// mean the default span{-g_i}; toric_default() is M itself.
struct SphericalLattice {
  std::vector<MVec> generators;
  bool is_m = false;

  static SphericalLattice toric_default() { return {{}, true}; }
  static SphericalLattice root_default() { return {}; }
  bool contains(const RootSystem* rs, const MVec& m) const;
};

}  // namespace symnorm
