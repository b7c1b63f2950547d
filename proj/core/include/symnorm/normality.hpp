#pragma once

#include "symnorm/polyhedra.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symnorm {

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Verdict { Surjective, NotSurjective, Unsupported };
std::string to_string(Verdict v);

struct Decomposition {
  MVec m, m1, m2;
};

struct CheckReport {
  Verdict verdict = Verdict::Unsupported;
  std::string mode;  // open | complete | equivalence | ...
  std::vector<MVec> witnesses;  // points without a decomposition
  std::vector<Decomposition> decompositions;
  std::map<std::string, long long> stats;
  std::vector<std::string> notes;
};

// Lexicographically first m1 in K_h on its coset with m - m1 in K_k, where the
// boxes bound the search. Exposed so callers can re-run single searches.
std::optional<MVec> find_split(const HPolyhedron& kh, const HPolyhedron& kk, const MVec& m);

// Open side: every minimal point of Q_{h+k} must split. Both functions live on
// the same open fan whose rays include every e_i.
CheckReport check_sum_open(const PLFunction& h, const PLFunction& k, bool record = false);
// Complete side: every dominant lattice point of P_{h+k} must split into
// P_h + P_k. Needs h, k generated by global sections.
CheckReport check_sum_complete(const PLFunction& h, const PLFunction& k, const RootSystem& rs,
                               const WeylGroup& w, bool record = false);

struct EquivalenceReport {
  CheckReport open, complete;
  bool agree = false;
};
EquivalenceReport check_equivalence(const PLFunction& h, const PLFunction& k, const RootSystem& rs,
                                    const WeylGroup& w);

struct Transfer {
  MVec p, q;
  std::vector<std::size_t> steps;  // indices j of the moved f_j
};
// Moves f_j from q to p (smallest j with positive dotted q_j) until q lies in P_k.
Transfer transfer_decomposition(const PLFunction& h, const PLFunction& k, const RootSystem& rs,
                                const WeylGroup& w, const MVec& m, const MVec& p0, const MVec& q0);
// From an open split m = p0' + q0' to a complete one: p0' is first reduced by
// express_Q_point, then transfer_decomposition runs.
Transfer complete_from_open(const PLFunction& h, const PLFunction& k, const RootSystem& rs,
                            const WeylGroup& w, const MVec& m, const MVec& p0, const MVec& q0);

struct QExpression {
  MVec p_dom;            // in P_h on the chamber
  std::vector<Int> c;    // p = p_dom + sum c_i f_i
  std::vector<std::string> trace;
};
// Throws PreconditionError unless h is ample; needs integral dotted coordinates.
QExpression express_Q_point(const PLFunction& h, const RootSystem& rs, const WeylGroup& w, const MVec& p);

struct RjReport {
  bool supported = false;  // h ample
  bool passed = false;
  std::size_t j = 0;
  std::vector<MVec> wall_vertices;
  std::vector<MVec> failures;
};
RjReport check_Rj(const PLFunction& h, const RootSystem& rs, const WeylGroup& w, std::size_t j);

struct SaturationReport {
  bool saturated = true;
  std::size_t set_size = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<MVec, MVec>> violations;  // (nu, nu')
  std::vector<std::string> notes;
};
// S = dominant points of Pi(Z^c,h) + Pi(Z^c,k), tested against Pi(Y,h+k).
SaturationReport check_saturation(const PLFunction& h, const PLFunction& k, const RootSystem& rs,
                                  const WeylGroup& w);
// Pi(Y,h) itself: nu in Pi(Y,h), nu' dominant with nu' - nu in Z^+ f => nu' in Pi(Y,h).
SaturationReport check_pi_saturation(const PLFunction& h, const RootSystem& rs, const WeylGroup& w);

// Under ampleness: Q_h cap C+ = P_h cap C+ (vertices and lattice points) and every
// lattice point of Q_h is a point of P_h cap C+ plus non-negative integer f's,
// checked on the minimal layer and on `deep` random points above it.
struct L1Report {
  bool supported = false;
  bool l1a = false;
  bool l1b = false;
  std::size_t vertices = 0, points = 0, minimal_checked = 0, deep_checked = 0;
  std::vector<MVec> failures;
  std::vector<std::string> notes;
};
L1Report check_l1(const PLFunction& h, const RootSystem& rs, const WeylGroup& w, std::size_t deep = 100,
                  std::uint64_t seed = 1);

// P_h for an open h: weyl_extend, then polytope_P on v_h + M.
HPolyhedron polytope_of(const PLFunction& h, const WeylGroup& w);

}  // namespace symnorm
