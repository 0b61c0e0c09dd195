#include "hkit/linalg.hpp"

#include <cmath>
#include <sstream>

#include "hkit/error.hpp"

namespace hkit {

// --- rational scalar helpers (declared in rational.hpp) ------------------------

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error("cannot convert non-finite double to rational");
  return Rational(x);
}

Rational parse_rational(const std::string& s) {
  std::string t = s;
  // strip surrounding whitespace
  const auto b = t.find_first_not_of(" \t");
  const auto e = t.find_last_not_of(" \t");
  if (b == std::string::npos) throw InputError("empty rational literal");
  t = t.substr(b, e - b + 1);
  try {
    Rational q(t);
    return q;
  } catch (const std::exception&) {
    throw InputError("malformed rational literal '" + s + "'");
  }
}

std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Int n = numerator(q), d = denominator(q);
  Int rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rational& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Vec negate(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Rational norm1(const Vec& a) {
  Rational s = 0;
  for (const auto& x : a) s += abs(x);
  return s;
}

Rational norm_inf(const Vec& a) {
  Rational s = 0;
  for (const auto& x : a)
    if (abs(x) > s) s = abs(x);
  return s;
}

Rational norm2_sq(const Vec& a) {
  Rational s = 0;
  for (const auto& x : a) s += x * x;
  return s;
}

std::vector<double> to_doubles(const Vec& a) {
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = to_double(a[i]);
  return r;
}

Vec from_doubles(const std::vector<double>& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = rational_from_double(a[i]);
  return r;
}

int lex_compare(const Vec& a, const Vec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

// --- rational elimination ------------------------------------------------------

int rank(RatMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<Vec> solve_square(RatMatrix a, Vec b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::optional<Vec> solve_normal_equations(const RatMatrix& a, const Vec& b) {
  const std::size_t rows = a.size();
  if (rows == 0) return Vec{};
  const std::size_t cols = a[0].size();
  RatMatrix g(cols, Vec(cols, Rational(0)));
  Vec rhs(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t p = 0; p < cols; ++p) {
      if (a[i][p] == 0) continue;
      for (std::size_t q = 0; q < cols; ++q) g[p][q] += a[i][p] * a[i][q];
      rhs[p] += a[i][p] * b[i];
    }
  }
  return solve_square(std::move(g), std::move(rhs));
}

std::vector<Vec> nullspace(RatMatrix a) {
  const std::size_t rows = a.size();
  if (rows == 0) return {};
  const std::size_t cols = a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v(cols, Rational(0));
    v[free_c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[pivot_col[i]] = -a[i][free_c] / a[i][pivot_col[i]];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// --- integer kernels -------------------------------------------------------------

void make_primitive(IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return;
  for (auto& x : v) x /= g;
}

void make_primitive(IntVec& v, Int& den) {
  Int g = den;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return;
  for (auto& x : v) x /= g;
  den /= g;
}

// Fraction-free forward elimination; returns the permutation sign and the
// pivot positions, leaving the matrix in row-echelon (Bareiss) form.
namespace {

struct BareissEchelon {
  IntMatrix m;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
};

BareissEchelon bareiss_echelon(IntMatrix a) {
  BareissEchelon out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      out.sign = -out.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(a);
  return out;
}

}  // namespace

int int_rank(IntMatrix a) { return static_cast<int>(bareiss_echelon(std::move(a)).pivot_cols.size()); }

std::optional<ScaledIntSolution> bareiss_solve(IntMatrix a, IntVec b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto ech = bareiss_echelon(std::move(a));
  if (ech.pivot_cols.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (ech.pivot_cols[i] != i) return std::nullopt;  // pivot in rhs column: singular
  // Back substitution over rationals on the echelon form.
  Vec x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational s = Rational(ech.m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(ech.m[ii][j]) * x[j];
    x[ii] = s / Rational(ech.m[ii][ii]);
  }
  Int den = 1;
  for (const auto& q : x) den = lcm(den, denominator(q));
  ScaledIntSolution sol;
  sol.den = den;
  sol.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) sol.x[i] = numerator(x[i]) * (den / denominator(x[i]));
  return sol;
}

std::optional<IntVec> bareiss_kernel_vector(IntMatrix a) {
  const std::size_t rows = a.size();
  if (rows == 0) return std::nullopt;
  const std::size_t cols = a[0].size();
  auto ech = bareiss_echelon(std::move(a));
  if (ech.pivot_cols.size() + 1 != cols) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::size_t free_c = 0;
  while (free_c < cols && is_pivot[free_c]) ++free_c;
  // Solve for the pivot entries with the free variable set to 1, exactly.
  Vec x(cols, Rational(0));
  x[free_c] = 1;
  const std::size_t r = ech.pivot_cols.size();
  for (std::size_t ii = r; ii-- > 0;) {
    const std::size_t pc = ech.pivot_cols[ii];
    Rational s = 0;
    for (std::size_t j = pc + 1; j < cols; ++j)
      if (x[j] != 0) s -= Rational(ech.m[ii][j]) * x[j];
    x[pc] = s / Rational(ech.m[ii][pc]);
  }
  Int den = 1;
  for (const auto& q : x) den = lcm(den, denominator(q));
  IntVec v(cols);
  for (std::size_t i = 0; i < cols; ++i) v[i] = numerator(x[i]) * (den / denominator(x[i]));
  make_primitive(v);
  return v;
}

}  // namespace hkit
