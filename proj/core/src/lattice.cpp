#include "symnorm/lattice.hpp"

#include <numeric>
#include <sstream>

namespace symnorm {

namespace {

void require_len(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

// Gauss-Jordan on an augmented copy; returns the rank and reduces in place.
int reduce(RatMat& a, std::size_t ncols) {
  int r = 0;
  const std::size_t rows = a.size();
  for (std::size_t c = 0; c < ncols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

Rat pair(const MVec& m, const NVec& n) {
  require_len(m.size(), n.size(), "pair");
  Rat s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (n[i] != 0) s += m[i] * Rat(static_cast<long>(n[i]));
  return s;
}

bool is_lattice_basis(const std::vector<NVec>& vs) {
  if (vs.empty()) return true;
  for (const auto& v : vs) require_len(v.size(), vs.size(), "is_lattice_basis");
  Int d = det(IntMat(vs.begin(), vs.end()));
  return d == 1 || d == -1;
}

MVec solve_linear_form(const std::vector<NVec>& rays, const std::vector<Rat>& values) {
  require_len(rays.size(), values.size(), "solve_linear_form");
  if (rays.empty()) throw DimensionError("solve_linear_form: no rays");
  const std::size_t l = rays[0].size();
  require_len(rays.size(), l, "solve_linear_form");
  RatMat a(l, std::vector<Rat>(l));
  for (std::size_t i = 0; i < l; ++i) {
    require_len(rays[i].size(), l, "solve_linear_form");
    for (std::size_t j = 0; j < l; ++j) a[i][j] = Rat(static_cast<long>(rays[i][j]));
  }
  auto x = solve(a, values);
  if (!x) throw SingularError("solve_linear_form: rays are linearly dependent");
  return *x;
}

MVec zero_m(std::size_t l) { return MVec(l, Rat(0)); }
MVec unit_m(std::size_t l, std::size_t i) {
  MVec v(l, Rat(0));
  v[i] = 1;
  return v;
}
NVec unit_n(std::size_t l, std::size_t i) {
  NVec v(l, 0);
  v[i] = 1;
  return v;
}
MVec to_m(const NVec& v) {
  MVec m;
  m.reserve(v.size());
  for (Int x : v) m.emplace_back(static_cast<long>(x));
  return m;
}
MVec add(const MVec& a, const MVec& b) {
  require_len(a.size(), b.size(), "add");
  MVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
MVec sub(const MVec& a, const MVec& b) {
  require_len(a.size(), b.size(), "sub");
  MVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
MVec scale(const MVec& a, const Rat& c) {
  MVec r(a);
  for (auto& x : r) x *= c;
  return r;
}
NVec add(const NVec& a, const NVec& b) {
  require_len(a.size(), b.size(), "add");
  NVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
NVec neg(const NVec& a) {
  NVec r(a);
  for (auto& x : r) x = -x;
  return r;
}
bool is_integral(const MVec& m) {
  for (const auto& x : m)
    if (!is_integer(x)) return false;
  return true;
}
NVec floor_vec(const MVec& m) {
  NVec r;
  r.reserve(m.size());
  for (const auto& x : m) r.push_back(floor_int(x));
  return r;
}

Int gcd_vec(const NVec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}
NVec primitive(const NVec& v) {
  Int g = gcd_vec(v);
  if (g == 0) throw std::domain_error("primitive: zero vector");
  NVec r(v);
  for (auto& x : r) x /= g;
  return r;
}
bool is_primitive(const NVec& v) { return gcd_vec(v) == 1; }

Int det(const IntMat& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) require_len(row.size(), n, "det");
  if (n == 0) return 1;
  // Bareiss elimination over GMP integers.
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a[i][j]);
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  mpz_class d = m[n - 1][n - 1] * sign;
  if (!d.fits_slong_p()) throw std::overflow_error("det out of range");
  return d.get_si();
}

Rat det(const RatMat& a) {
  const std::size_t n = a.size();
  RatMat m(a);
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

std::optional<RatMat> inverse(const RatMat& a) {
  const std::size_t n = a.size();
  RatMat aug(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    require_len(a[i].size(), n, "inverse");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  if (reduce(aug, n) < static_cast<int>(n)) return std::nullopt;
  RatMat inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<MVec> solve(const RatMat& a, const MVec& b) {
  const std::size_t n = a.size();
  require_len(b.size(), n, "solve");
  RatMat aug(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    require_len(a[i].size(), n, "solve");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  if (reduce(aug, n) < static_cast<int>(n)) return std::nullopt;
  MVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

int rank(const RatMat& a) {
  if (a.empty()) return 0;
  RatMat m(a);
  return reduce(m, a[0].size());
}

RatMat to_rat(const IntMat& a) {
  RatMat r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (Int x : a[i]) r[i].emplace_back(static_cast<long>(x));
  return r;
}

IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t(a[0].size(), std::vector<Int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMat identity_int(std::size_t l) {
  IntMat m(l, std::vector<Int>(l, 0));
  for (std::size_t i = 0; i < l; ++i) m[i][i] = 1;
  return m;
}

IntMat mul(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  IntMat c(n, std::vector<Int>(p, 0));
  for (std::size_t i = 0; i < n; ++i) {
    require_len(a[i].size(), k, "mul");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

NVec act(const IntMat& a, const NVec& v) {
  NVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    require_len(a[i].size(), v.size(), "apply");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  }
  return r;
}

MVec act(const IntMat& a, const MVec& v) {
  MVec r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    require_len(a[i].size(), v.size(), "apply");
    for (std::size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0) r[i] += Rat(static_cast<long>(a[i][j])) * v[j];
  }
  return r;
}

MVec act(const RatMat& a, const MVec& v) {
  MVec r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    require_len(a[i].size(), v.size(), "apply");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  }
  return r;
}

IntMat inverse_unimodular(const IntMat& a) {
  auto inv = inverse(to_rat(a));
  if (!inv) throw SingularError("matrix is singular");
  IntMat r(a.size(), std::vector<Int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!is_integer((*inv)[i][j])) throw SingularError("matrix is not unimodular");
      r[i][j] = to_int((*inv)[i][j]);
    }
  return r;
}

// Basis of the right null space of a (rows x ncols) rational matrix.
std::vector<MVec> nullspace(RatMat a, std::size_t ncols) {
  std::vector<long> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < ncols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (long c : pivot_col) is_pivot[c] = true;
  std::vector<MVec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    MVec v(ncols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool LatticeCoset::contains(const MVec& m) const { return is_integral(sub(m, base)); }

MVec LatticeCoset::reduced() const {
  MVec r(base);
  for (auto& x : r) x -= floor_rat(x);
  return r;
}

std::string format(const MVec& m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << to_string(m[i]);
  os << ')';
  return os.str();
}

std::string format(const NVec& n) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
  os << ')';
  return os.str();
}

}  // namespace symnorm
