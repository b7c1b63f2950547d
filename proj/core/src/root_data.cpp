#include "symnorm/root_data.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <regex>

namespace symnorm {

namespace {

IntMat cartan_simple(char family, std::size_t l) {
  IntMat a(l, std::vector<Int>(l, 0));
  for (std::size_t i = 0; i < l; ++i) a[i][i] = 2;
  auto chain = [&](std::size_t upto) {
    for (std::size_t i = 0; i + 1 < upto; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  };
  switch (family) {
    case 'A':
      chain(l);
      break;
    case 'B':  // alpha_l short
      chain(l);
      if (l >= 2) a[l - 1][l - 2] = -2;
      break;
    case 'C':
      chain(l);
      if (l >= 2) a[l - 2][l - 1] = -2;
      break;
    case 'D':  // branch at l-2
      chain(l - 1);
      a[l - 3][l - 1] = a[l - 1][l - 3] = -1;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    default:
      throw std::invalid_argument("unknown root system family");
  }
  return a;
}

IntMat factor_cartan(const std::string& f) {
  static const std::regex re("(A|B|C|D|BC|G)([1-9])");
  std::smatch mt;
  if (!std::regex_match(f, mt, re)) throw std::invalid_argument("unknown root system '" + f + "'");
  std::string fam = mt[1];
  std::size_t l = std::stoul(mt[2]);
  bool ok = (fam == "A" && l <= 4) || ((fam == "B" || fam == "C") && l >= 2 && l <= 4) ||
            (fam == "D" && l == 4) || (fam == "BC" && l <= 4) || (fam == "G" && l == 2);
  if (!ok) throw std::invalid_argument("root system '" + f + "' is outside the catalog");
  // BC_l shares the Weyl group of B_l; BC_1 is A_1.
  if (fam == "BC") return cartan_simple(l == 1 ? 'A' : 'B', l);
  return cartan_simple(fam[0], l);
}

}  // namespace

RootSystem make_root_system(const std::string& label) {
  IntMat a;
  std::size_t start = 0;
  while (start <= label.size()) {
    auto x = label.find('x', start);
    std::string part = label.substr(start, x == std::string::npos ? std::string::npos : x - start);
    IntMat b = factor_cartan(part);
    std::size_t off = a.size(), n = off + b.size();
    for (auto& row : a) row.resize(n, 0);
    for (const auto& row : b) {
      std::vector<Int> r(n, 0);
      for (std::size_t j = 0; j < row.size(); ++j) r[off + j] = row[j];
      a.push_back(r);
    }
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return RootSystem{label, a.size(), a};
}

RootSystem make_custom_root_system(const IntMat& cartan, std::string label) {
  const std::size_t l = cartan.size();
  if (l == 0) throw std::invalid_argument("empty Cartan matrix");
  for (std::size_t i = 0; i < l; ++i) {
    if (cartan[i].size() != l) throw DimensionError("Cartan matrix is not square");
    if (cartan[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0) throw std::invalid_argument("Cartan off-diagonal entries must be <= 0");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw std::invalid_argument("Cartan zero pattern must be symmetric");
    }
  }
  if (det(cartan) == 0) throw std::invalid_argument("Cartan matrix is singular");
  return RootSystem{std::move(label), l, cartan};
}

MVec dotted_coords(const RootSystem& rs, const MVec& m) {
  if (m.size() != rs.rank) throw DimensionError("dotted_coords: dimension mismatch");
  return act(rs.cartan, m);
}

MVec g_vector(const RootSystem& rs, std::size_t i) {
  auto inv = inverse(to_rat(rs.cartan));
  if (!inv) throw SingularError("singular Cartan matrix");
  MVec g(rs.rank);
  for (std::size_t r = 0; r < rs.rank; ++r) g[r] = (*inv)[r][i];
  return g;
}

IntMat simple_reflection(const RootSystem& rs, std::size_t j) {
  if (j >= rs.rank) throw std::out_of_range("simple_reflection: index out of range");
  IntMat s = identity_int(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) s[j][i] -= rs.cartan[j][i];
  return s;
}

bool is_dominant(const RootSystem& rs, const MVec& m) {
  for (const auto& x : dotted_coords(rs, m))
    if (x > 0) return false;
  return true;
}

bool is_regular(const RootSystem& rs, const MVec& m) {
  for (const auto& x : dotted_coords(rs, m))
    if (x >= 0) return false;
  return true;
}

std::size_t enumeration_cap(std::size_t fallback) {
  if (const char* s = std::getenv("SYMNORM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

WeylGroup generate_weyl_group(const RootSystem& rs, std::size_t cap) {
  std::vector<IntMat> gens_m, gens_n;
  for (std::size_t j = 0; j < rs.rank; ++j) {
    gens_m.push_back(simple_reflection(rs, j));
    gens_n.push_back(transpose(gens_m.back()));  // s^{-T} = s^T for an involution
  }
  WeylGroup w;
  std::map<IntMat, std::size_t> seen;
  std::deque<std::size_t> queue;
  auto push = [&](IntMat m, IntMat n) {
    if (seen.count(m)) return;
    if (w.on_m.size() >= cap)
      throw CapExceeded("Weyl group larger than cap " + std::to_string(cap));
    seen.emplace(m, w.on_m.size());
    queue.push_back(w.on_m.size());
    w.on_m.push_back(std::move(m));
    w.on_n.push_back(std::move(n));
  };
  push(identity_int(rs.rank), identity_int(rs.rank));
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < rs.rank; ++j)
      push(mul(gens_m[j], w.on_m[cur]), mul(gens_n[j], w.on_n[cur]));
  }
  return w;
}

DominantRep dominant_representative(const RootSystem& rs, const MVec& m) {
  DominantRep r{identity_int(rs.rank), m, {}};
  for (;;) {
    MVec d = dotted_coords(rs, r.m_dom);
    std::size_t j = 0;
    while (j < d.size() && d[j] <= 0) ++j;
    if (j == d.size()) return r;
    IntMat s = simple_reflection(rs, j);
    r.m_dom = act(s, r.m_dom);
    r.w = mul(s, r.w);
    r.word.push_back(j);
  }
}

bool SphericalLattice::contains(const RootSystem* rs, const MVec& m) const {
  if (is_m || (generators.empty() && rs == nullptr)) return is_integral(m);
  if (generators.empty()) return is_integral(dotted_coords(*rs, m));
  const std::size_t l = m.size();
  if (generators.size() != l) throw DimensionError("lattice needs l generators");
  RatMat g(l, std::vector<Rat>(l));
  for (std::size_t c = 0; c < l; ++c) {
    if (generators[c].size() != l) throw DimensionError("lattice generator length");
    for (std::size_t r = 0; r < l; ++r) g[r][c] = generators[c][r];
  }
  auto c = solve(g, m);
  if (!c) throw SingularError("lattice generators are dependent");
  return is_integral(*c);
}

}  // namespace symnorm
