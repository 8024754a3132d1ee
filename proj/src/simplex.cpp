#include "qmt/simplex.hpp"

#include <optional>

#include "qmt/error.hpp"

namespace qmt {

namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t row_count() const { return rows_.size(); }
  std::size_t rhs_column() const { return rows_.empty() ? 0 : rows_.front().size() - 1; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& v : rows_[r]) v *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (sgn(rows_[r][j]) != 0) rows_[i][j] -= f * rows_[r][j];
      }
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Reduced cost of column j for maximizing c.
  Rational reduced_cost(const std::vector<Rational>& c, std::size_t j) const {
    Rational d = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (sgn(c[basis_[i]]) != 0 && sgn(rows_[i][j]) != 0) d -= c[basis_[i]] * rows_[i][j];
    }
    return d;
  }

  Rational value(const std::vector<Rational>& c) const {
    Rational z = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) z += c[basis_[i]] * rows_[i][rhs_column()];
    return z;
  }

  // Maximizes c over the first `usable` columns. Returns false when unbounded.
  bool maximize(const std::vector<Rational>& c, std::size_t usable) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < usable; ++j) {
        if (sgn(reduced_cost(c, j)) > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][*entering]) <= 0) continue;
        Rational ratio = rows_[i][rhs_column()] / rows_[i][*entering];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp, const std::vector<Rational>& objective) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.columns;
  if (lp.b.size() != m) throw InvalidArgument("linear program has mismatched row and right-hand-side counts");
  if (!objective.empty() && objective.size() != n) throw InvalidArgument("objective length differs from column count");
  for (const auto& row : lp.a) {
    if (row.size() != n) throw InvalidArgument("linear program row has the wrong length");
  }

  // Phase I on [A | I | b] with rows negated where b < 0 and one artificial per row.
  std::vector<int> sign(m, 1);
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n + m + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(lp.b[i]) < 0) sign[i] = -1;
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = sign[i] * lp.a[i][j];
    rows[i][n + i] = 1;
    rows[i][n + m] = sign[i] * lp.b[i];
    basis[i] = n + i;
  }
  Tableau t(std::move(rows), std::move(basis));
  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.maximize(phase1, n + m);

  LpResult result;
  if (sgn(t.value(phase1)) < 0) {
    // Simplex multipliers pi = c_B B^-1, read off the artificial columns; y = -pi certifies.
    result.status = LpStatus::infeasible;
    result.farkas.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      Rational pi = 0;
      for (std::size_t r = 0; r < t.row_count(); ++r) pi += phase1[t.basic(r)] * t.at(r, n + i);
      result.farkas[i] = -pi * sign[i];
    }
    return result;
  }

  // Drive zero-level artificials out of the basis; rows where that is impossible are redundant.
  for (std::size_t r = t.row_count(); r-- > 0;) {
    if (t.basic(r) < n) continue;
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j) {
      if (sgn(t.at(r, j)) != 0) col = j;
    }
    if (col) {
      t.pivot(r, *col);
    } else {
      t.drop_row(r);
    }
  }

  std::vector<Rational> c(n + m, Rational(0));
  for (std::size_t j = 0; j < objective.size(); ++j) c[j] = objective[j];
  if (!t.maximize(c, n)) {
    result.status = LpStatus::unbounded;
  } else {
    result.status = LpStatus::optimal;
    result.objective = t.value(c);
  }
  result.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    if (t.basic(r) < n) result.x[t.basic(r)] = t.at(r, t.rhs_column());
  }
  return result;
}

}  // namespace qmt
