#include "hkit/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "hkit/error.hpp"

namespace hkit {

namespace {

template <typename T>
struct Field {
  static bool pos(const T& v) { return v > 0; }
  static bool neg(const T& v) { return v < 0; }
  static bool zero(const T& v) { return v == 0; }
};

template <>
struct Field<double> {
  static constexpr double eps = 1e-11;
  static bool pos(double v) { return v > eps; }
  static bool neg(double v) { return v < -eps; }
  static bool zero(double v) { return v >= -eps && v <= eps; }
};

template <typename T>
struct Program {
  std::vector<T> objective;
  std::vector<std::vector<T>> le_a;
  std::vector<T> le_b;
  std::vector<std::vector<T>> eq_a;
  std::vector<T> eq_b;
  std::vector<char> nonneg;
};

template <typename T>
struct Outcome {
  LPStatus status = LPStatus::Infeasible;
  T value{};
  std::vector<T> solution;
};

// Dense two-phase tableau simplex over an ordered field. All variables of
// the standard form are >= 0; the caller has already split free variables.
template <typename T>
class Tableau {
 public:
  Outcome<T> solve(const Program<T>& p) {
    const std::size_t n = p.objective.size();
    const std::size_t m = p.le_a.size() + p.eq_a.size();
    n_struct_ = n;
    rows_.assign(m, {});
    rhs_.assign(m, T{});
    basis_.assign(m, 0);

    std::size_t slack_count = 0;
    for (std::size_t i = 0; i < p.le_a.size(); ++i)
      if (!Field<T>::neg(p.le_b[i])) ++slack_count;  // plain slack rows
    // Columns: structural, then one slack/surplus per le row, then artificials.
    n_slack_ = p.le_a.size();
    std::size_t next_art = n + n_slack_;
    art_begin_ = next_art;

    std::size_t r = 0;
    for (std::size_t i = 0; i < p.le_a.size(); ++i, ++r) {
      rows_[r].assign(n + n_slack_, T{});
      bool flip = Field<T>::neg(p.le_b[i]);
      for (std::size_t j = 0; j < n; ++j) rows_[r][j] = flip ? -p.le_a[i][j] : p.le_a[i][j];
      rhs_[r] = flip ? -p.le_b[i] : p.le_b[i];
      rows_[r][n + i] = flip ? T(-1) : T(1);
      if (!flip) {
        basis_[r] = n + i;
      } else {
        rows_[r].resize(next_art + 1, T{});
        rows_[r][next_art] = T(1);
        basis_[r] = next_art++;
      }
    }
    for (std::size_t i = 0; i < p.eq_a.size(); ++i, ++r) {
      rows_[r].assign(n + n_slack_, T{});
      bool flip = Field<T>::neg(p.eq_b[i]);
      for (std::size_t j = 0; j < n; ++j) rows_[r][j] = flip ? -p.eq_a[i][j] : p.eq_a[i][j];
      rhs_[r] = flip ? -p.eq_b[i] : p.eq_b[i];
      rows_[r].resize(next_art + 1, T{});
      rows_[r][next_art] = T(1);
      basis_[r] = next_art++;
    }
    n_cols_ = next_art;
    for (auto& row : rows_) row.resize(n_cols_, T{});
    slack_count = 0;  // silence unused in release

    if (n_cols_ > art_begin_) {
      // Phase 1: maximize -sum(artificials).
      obj_.assign(n_cols_, T{});
      obj_value_ = T{};
      for (std::size_t j = art_begin_; j < n_cols_; ++j) obj_[j] = T(-1);
      reduce_objective();
      if (!iterate(art_begin_)) throw Error("phase-1 simplex reported unbounded");
      if (!Field<T>::zero(obj_value_)) {
        Outcome<T> out;
        out.status = LPStatus::Infeasible;
        return out;
      }
      purge_artificials();
    }

    // Phase 2.
    obj_.assign(n_cols_, T{});
    obj_value_ = T{};
    for (std::size_t j = 0; j < n; ++j) obj_[j] = p.objective[j];
    reduce_objective();
    Outcome<T> out;
    if (!iterate(n_cols_)) {
      out.status = LPStatus::Unbounded;
      return out;
    }
    out.status = LPStatus::Optimal;
    out.value = obj_value_;
    out.solution.assign(n, T{});
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n) out.solution[basis_[i]] = rhs_[i];
    return out;
  }

 private:
  void reduce_objective() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const T f = obj_[basis_[i]];
      if (Field<T>::zero(f)) continue;
      for (std::size_t j = 0; j < n_cols_; ++j) obj_[j] -= f * rows_[i][j];
      obj_value_ += f * rhs_[i];
      obj_[basis_[i]] = T{};
    }
  }

  void pivot(std::size_t r, std::size_t jc) {
    const T inv_seed = rows_[r][jc];
    for (std::size_t j = 0; j < n_cols_; ++j) rows_[r][j] = rows_[r][j] / inv_seed;
    rhs_[r] = rhs_[r] / inv_seed;
    rows_[r][jc] = T(1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      const T f = rows_[i][jc];
      if (Field<T>::zero(f)) continue;
      for (std::size_t j = 0; j < n_cols_; ++j) rows_[i][j] -= f * rows_[r][j];
      rows_[i][jc] = T{};
      rhs_[i] -= f * rhs_[r];
    }
    const T g = obj_[jc];
    if (!Field<T>::zero(g)) {
      for (std::size_t j = 0; j < n_cols_; ++j) obj_[j] -= g * rows_[r][j];
      obj_[jc] = T{};
      obj_value_ += g * rhs_[r];
    }
    basis_[r] = jc;
  }

  // Bland's rule: entering = lowest-index improving column; leaving = the
  // minimum-ratio row, ties broken on lowest basic variable index.
  bool iterate(std::size_t col_limit) {
    const std::size_t iter_cap =
        std::numeric_limits<std::size_t>::max() / 2;  // exact arithmetic cannot cycle under Bland
    for (std::size_t it = 0; it < iter_cap; ++it) {
      std::size_t enter = n_cols_;
      for (std::size_t j = 0; j < col_limit; ++j) {
        if (Field<T>::pos(obj_[j])) {
          enter = j;
          break;
        }
      }
      if (enter == n_cols_) return true;
      std::size_t leave = rows_.size();
      T best_num{}, best_den{};
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!Field<T>::pos(rows_[i][enter])) continue;
        if (leave == rows_.size()) {
          leave = i;
          best_num = rhs_[i];
          best_den = rows_[i][enter];
          continue;
        }
        // compare rhs_[i]/rows_[i][enter] vs best_num/best_den (both dens > 0)
        const T lhs = rhs_[i] * best_den;
        const T rhs = best_num * rows_[i][enter];
        if (lhs < rhs || (!(rhs < lhs) && basis_[i] < basis_[leave])) {
          leave = i;
          best_num = rhs_[i];
          best_den = rows_[i][enter];
        }
      }
      if (leave == rows_.size()) return false;  // unbounded
      pivot(leave, enter);
    }
    return true;
  }

  // After phase 1 at value zero, pivot remaining artificial basics onto real
  // columns; rows that admit no pivot are redundant and get dropped.
  void purge_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < art_begin_) {
        ++i;
        continue;
      }
      std::size_t jc = art_begin_;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (!Field<T>::zero(rows_[i][j])) {
          jc = j;
          break;
        }
      }
      if (jc < art_begin_) {
        pivot(i, jc);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (auto& row : rows_) row.resize(art_begin_);
    n_cols_ = art_begin_;
  }

  std::vector<std::vector<T>> rows_;
  std::vector<T> rhs_;
  std::vector<T> obj_;
  T obj_value_{};
  std::vector<std::size_t> basis_;
  std::size_t n_cols_ = 0, n_struct_ = 0, n_slack_ = 0, art_begin_ = 0;
};

// Free variables are split as x = u - v before entering the tableau.
template <typename T>
Outcome<T> solve_split(const Program<T>& p) {
  const std::size_t n = p.objective.size();
  std::vector<std::size_t> neg_col(n, SIZE_MAX);
  std::size_t extra = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (!p.nonneg.empty() && !p.nonneg[j]) neg_col[j] = n + extra++;
  if (p.nonneg.empty())
    for (std::size_t j = 0; j < n; ++j) neg_col[j] = n + extra++;

  Program<T> q;
  q.objective.assign(n + extra, T{});
  q.nonneg.assign(n + extra, 1);
  for (std::size_t j = 0; j < n; ++j) {
    q.objective[j] = p.objective[j];
    if (neg_col[j] != SIZE_MAX) q.objective[neg_col[j]] = -p.objective[j];
  }
  auto widen = [&](const std::vector<std::vector<T>>& rows) {
    std::vector<std::vector<T>> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out[i].assign(n + extra, T{});
      for (std::size_t j = 0; j < n; ++j) {
        out[i][j] = rows[i][j];
        if (neg_col[j] != SIZE_MAX) out[i][neg_col[j]] = -rows[i][j];
      }
    }
    return out;
  };
  q.le_a = widen(p.le_a);
  q.le_b = p.le_b;
  q.eq_a = widen(p.eq_a);
  q.eq_b = p.eq_b;

  Tableau<T> t;
  Outcome<T> wide = t.solve(q);
  if (wide.status != LPStatus::Optimal) return wide;
  Outcome<T> out;
  out.status = LPStatus::Optimal;
  out.value = wide.value;
  out.solution.assign(n, T{});
  for (std::size_t j = 0; j < n; ++j) {
    out.solution[j] = wide.solution[j];
    if (neg_col[j] != SIZE_MAX) out.solution[j] -= wide.solution[neg_col[j]];
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

template <typename T>
Outcome<T> solve_decomposed(const Program<T>& p) {
  const std::size_t n = p.objective.size();
  UnionFind uf(n);
  auto link_rows = [&](const std::vector<std::vector<T>>& rows) {
    for (const auto& row : rows) {
      std::size_t first = SIZE_MAX;
      for (std::size_t j = 0; j < n; ++j) {
        if (Field<T>::zero(row[j])) continue;
        if (first == SIZE_MAX)
          first = j;
        else
          uf.unite(first, j);
      }
    }
  };
  link_rows(p.le_a);
  link_rows(p.eq_a);

  // Constant rows (no variables) are feasibility checks on their own.
  for (std::size_t i = 0; i < p.le_a.size(); ++i) {
    bool all_zero = true;
    for (std::size_t j = 0; j < n && all_zero; ++j) all_zero = Field<T>::zero(p.le_a[i][j]);
    if (all_zero && Field<T>::neg(p.le_b[i])) return {LPStatus::Infeasible, T{}, {}};
  }
  for (std::size_t i = 0; i < p.eq_a.size(); ++i) {
    bool all_zero = true;
    for (std::size_t j = 0; j < n && all_zero; ++j) all_zero = Field<T>::zero(p.eq_a[i][j]);
    if (all_zero && !Field<T>::zero(p.eq_b[i])) return {LPStatus::Infeasible, T{}, {}};
  }

  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of(n, SIZE_MAX);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t root = uf.find(j);
    if (group_of[root] == SIZE_MAX) {
      group_of[root] = groups.size();
      groups.emplace_back();
    }
    group_of[j] = group_of[root];
    groups[group_of[root] == group_of[j] ? group_of[j] : group_of[root]].push_back(j);
  }
  if (groups.size() <= 1) return solve_split(p);

  Outcome<T> out;
  out.status = LPStatus::Optimal;
  out.value = T{};
  out.solution.assign(n, T{});
  bool unbounded = false;
  for (const auto& vars : groups) {
    Program<T> sub;
    sub.objective.reserve(vars.size());
    for (auto j : vars) sub.objective.push_back(p.objective[j]);
    sub.nonneg.reserve(vars.size());
    for (auto j : vars) sub.nonneg.push_back(p.nonneg.empty() ? 0 : p.nonneg[j]);
    auto take_rows = [&](const std::vector<std::vector<T>>& rows, const std::vector<T>& rhs,
                         std::vector<std::vector<T>>& out_rows, std::vector<T>& out_rhs) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        bool mine = false, empty = true;
        for (std::size_t j = 0; j < n; ++j) {
          if (Field<T>::zero(rows[i][j])) continue;
          empty = false;
          if (group_of[j] == group_of[vars[0]]) mine = true;
          break;
        }
        if (empty || !mine) continue;
        std::vector<T> row(vars.size());
        for (std::size_t k = 0; k < vars.size(); ++k) row[k] = rows[i][vars[k]];
        out_rows.push_back(std::move(row));
        out_rhs.push_back(rhs[i]);
      }
    };
    take_rows(p.le_a, p.le_b, sub.le_a, sub.le_b);
    take_rows(p.eq_a, p.eq_b, sub.eq_a, sub.eq_b);
    Outcome<T> sub_out = solve_split(sub);
    if (sub_out.status == LPStatus::Infeasible) return {LPStatus::Infeasible, T{}, {}};
    if (sub_out.status == LPStatus::Unbounded) {
      unbounded = true;
      continue;
    }
    out.value += sub_out.value;
    for (std::size_t k = 0; k < vars.size(); ++k) out.solution[vars[k]] = sub_out.solution[k];
  }
  if (unbounded) return {LPStatus::Unbounded, T{}, {}};
  return out;
}

template <typename T>
Outcome<T> drive(const Program<T>& p, bool decompose) {
  return decompose ? solve_decomposed(p) : solve_split(p);
}

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  if (!lp.nonneg.empty() && lp.nonneg.size() != n)
    throw DimensionMismatch("lp: nonneg flag vector size mismatch");
  for (const auto& r : lp.le_rows)
    if (r.a.size() != n) throw DimensionMismatch("lp: <= row size mismatch");
  for (const auto& r : lp.eq_rows)
    if (r.a.size() != n) throw DimensionMismatch("lp: == row size mismatch");
}

template <typename T, typename Conv>
Program<T> convert(const LinearProgram& lp, const Conv& conv) {
  Program<T> p;
  p.objective.reserve(lp.objective.size());
  for (const auto& c : lp.objective) p.objective.push_back(conv(c));
  p.nonneg = lp.nonneg;
  for (const auto& r : lp.le_rows) {
    std::vector<T> row;
    row.reserve(r.a.size());
    for (const auto& c : r.a) row.push_back(conv(c));
    p.le_a.push_back(std::move(row));
    p.le_b.push_back(conv(r.b));
  }
  for (const auto& r : lp.eq_rows) {
    std::vector<T> row;
    row.reserve(r.a.size());
    for (const auto& c : r.a) row.push_back(conv(c));
    p.eq_a.push_back(std::move(row));
    p.eq_b.push_back(conv(r.b));
  }
  return p;
}

}  // namespace

LPOutcome solve_lp(const LinearProgram& lp, const LPOptions& opts) {
  validate(lp);
  auto p = convert<Rational>(lp, [](const Rational& q) { return q; });
  auto out = drive(p, opts.decompose);
  LPOutcome res;
  res.status = out.status;
  if (out.status == LPStatus::Optimal) {
    res.value = out.value;
    res.solution = std::move(out.solution);
  }
  return res;
}

LPOutcomeApprox solve_lp_approx(const LinearProgram& lp, const LPOptions& opts) {
  validate(lp);
  auto p = convert<double>(lp, [](const Rational& q) { return to_double(q); });
  auto out = drive(p, opts.decompose);
  LPOutcomeApprox res;
  res.status = out.status;
  if (out.status == LPStatus::Optimal) {
    res.value = out.value;
    res.solution = std::move(out.solution);
  }
  return res;
}

LinearProgram dual_of(const LinearProgram& lp) {
  validate(lp);
  const std::size_t n = lp.num_vars();
  const std::size_t mi = lp.le_rows.size();
  const std::size_t me = lp.eq_rows.size();
  LinearProgram dual;
  dual.objective.resize(mi + me);
  for (std::size_t i = 0; i < mi; ++i) dual.objective[i] = -lp.le_rows[i].b;
  for (std::size_t i = 0; i < me; ++i) dual.objective[mi + i] = -lp.eq_rows[i].b;
  dual.nonneg.assign(mi + me, 0);
  for (std::size_t i = 0; i < mi; ++i) dual.nonneg[i] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    LinRow row;
    row.a.resize(mi + me);
    for (std::size_t i = 0; i < mi; ++i) row.a[i] = -lp.le_rows[i].a[j];
    for (std::size_t i = 0; i < me; ++i) row.a[mi + i] = -lp.eq_rows[i].a[j];
    row.b = -lp.objective[j];
    const bool var_nonneg = !lp.nonneg.empty() && lp.nonneg[j];
    if (var_nonneg)
      dual.le_rows.push_back(std::move(row));
    else
      dual.eq_rows.push_back(std::move(row));
  }
  return dual;
}

}  // namespace hkit
