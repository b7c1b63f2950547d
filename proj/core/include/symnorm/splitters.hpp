#pragma once

#include "symnorm/normality.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symnorm {

// Explicit m = m1 + m2 with m1 in Q_h, m2 in Q_k on their cosets.
struct SplitWitness {
  std::string algorithm;
  MVec m, m1, m2;
  std::vector<std::string> trace;
};

// Throws std::logic_error (message carries the trace) unless the witness holds.
void verify_witness(const PLFunction& h, const PLFunction& k, const SplitWitness& w);

// Catalog families recognised by comparison with the catalog constructors.
struct FamilyMatch {
  std::string name;  // ex1 | ex1b | ex2b | ex3_1 | ex3_2
  std::vector<Int> params;
};
std::optional<FamilyMatch> identify_family(const Fan& fan);

// Blow-up of A^l along the orbit closure of sigma(e_1..e_r); h, k convex.
SplitWitness split_blowup(const PLFunction& h, const PLFunction& k, const MVec& m);
// Chain of blow-ups along sigma(e_{i-1}, e_i); k = h.
SplitWitness split_chain_blowup(const PLFunction& h, const MVec& m);
// Rank 2, h1 and h2 convex on the same fan containing e_1, e_2.
SplitWitness split_dim2(const PLFunction& h1, const PLFunction& h2, const MVec& m);
// ex2b(a), k = h.
SplitWitness split_simplex3(const PLFunction& h, const MVec& m);
// ex3_1(l, n).
SplitWitness split_zn(const PLFunction& h, const PLFunction& k, const MVec& m);

enum class Algorithm { Blowup, Chain, Dim2, Simplex3, Zn, Auto };
Algorithm parse_algorithm(const std::string& s);
std::string to_string(Algorithm a);
Algorithm detect_algorithm(const PLFunction& h, const PLFunction& k);
SplitWitness split(Algorithm a, const PLFunction& h, const PLFunction& k, const MVec& m);

// Triangle D = conv(0, (-a2, 0), (0, -a1)) with hypotenuse normal (a1, a2).
// Splits m in (t1 + t2) D + orthant into t1 D + orthant and t2 D + orthant; a
// point inside (t1 + t2) D splits into points inside t1 D and t2 D. `depth`
// receives the number of reductions of a1 + a2.
std::pair<NVec, NVec> split_triangle(Int a1, Int a2, Int t1, Int t2, const NVec& m,
                                     std::vector<std::string>* trace = nullptr, std::size_t* depth = nullptr);

// Rounding index for the divisor step of split_zn. fx, fy are the sums of the
// floors, t the number of fractional coordinates; b bounds the first sum from
// above, c the second from below (nullopt = no bound).
struct RSelection {
  Int r = 0;
  int branch = 0;  // 1, 2 or 3
};
RSelection select_r(Int t, Int fx, Int fy, std::optional<Int> b, std::optional<Int> c);

// First ray among e_l, v_1, ..., v_n of ex3_1 on which m is tight for h + k.
std::optional<NVec> tight_ray(const PLFunction& h, const PLFunction& k, const MVec& m);

// Normalized values on ex3_2(l, n) (h(e_j) = 0): a_i = h(v_i), b = h(w), and the
// necessary inequalities for strict convexity, taken for i >= 2.
struct Ex32Data {
  std::vector<Int> a;
  Int b = 0;
  bool inequalities_hold = false;
  std::vector<std::string> failed;
};
Ex32Data ex3_2_data(const PLFunction& h);
// Brute-force check_sum_open(h, h) on ex3_2 after the ampleness checks.
CheckReport check_ex3_2(const PLFunction& h);

}  // namespace symnorm
