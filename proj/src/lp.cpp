#include "qtoric/lp.hpp"

#include <cstddef>
#include <optional>

#include "qtoric/errors.hpp"

namespace qtoric {

namespace {

struct Tableau {
  std::vector<std::vector<BigRat>> rows;  // last entry of each row is the rhs
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    BigRat inv = 1 / rows[r][c];
    for (auto& v : rows[r])
      v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      BigRat f = rows[i][c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (rows[r][j] != 0)
          rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Minimizes cost over columns where allowed[j]; returns false if unbounded.
  bool run(const std::vector<BigRat>& cost, const std::vector<bool>& allowed) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < ncols && !enter; ++j) {
        if (!allowed[j])
          continue;
        BigRat reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (rows[i][j] != 0)
            reduced -= cost[basis[i]] * rows[i][j];
        if (reduced < 0)
          enter = j;
      }
      if (!enter)
        return true;
      std::optional<std::size_t> leave;
      BigRat best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][*enter] <= 0)
          continue;
        BigRat ratio = rows[i][ncols] / rows[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave)
        return false;
      pivot(*leave, *enter);
    }
  }
};

} // namespace

LpResult minimize_free(const std::vector<std::vector<BigRat>>& A,
                       const std::vector<BigRat>& b,
                       const std::vector<BigRat>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  for (const auto& row : A)
    if (row.size() != n)
      throw Error(ErrorCode::InvalidArgument, "LP constraint width mismatch");
  if (b.size() != m)
    throw Error(ErrorCode::InvalidArgument, "LP rhs length mismatch");

  // Columns: p (n), q (n), slack (m), artificial (m); x = p - q.
  Tableau t;
  t.ncols = 2 * n + 2 * m;
  t.rows.assign(m, std::vector<BigRat>(t.ncols + 1, BigRat(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t.rows[i][j] = sign * A[i][j];
      t.rows[i][n + j] = -sign * A[i][j];
    }
    t.rows[i][2 * n + i] = -sign;
    t.rows[i][2 * n + m + i] = 1;
    t.rows[i][t.ncols] = sign * b[i];
    t.basis[i] = 2 * n + m + i;
  }

  std::vector<BigRat> phase1(t.ncols, BigRat(0));
  for (std::size_t i = 0; i < m; ++i)
    phase1[2 * n + m + i] = 1;
  std::vector<bool> all(t.ncols, true);
  t.run(phase1, all);
  BigRat infeas = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= 2 * n + m)
      infeas += t.rows[i][t.ncols];
  LpResult result;
  if (infeas != 0) {
    result.status = LpStatus::infeasible;
    return result;
  }
  // Drive remaining (zero-level) artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < 2 * n + m)
      continue;
    for (std::size_t j = 0; j < 2 * n + m; ++j)
      if (t.rows[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
  }
  std::vector<BigRat> phase2(t.ncols, BigRat(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = c[j];
    phase2[n + j] = -c[j];
  }
  std::vector<bool> allowed(t.ncols, true);
  for (std::size_t i = 0; i < m; ++i)
    allowed[2 * n + m + i] = false;
  if (!t.run(phase2, allowed)) {
    result.status = LpStatus::unbounded;
    return result;
  }
  std::vector<BigRat> values(t.ncols, BigRat(0));
  for (std::size_t i = 0; i < m; ++i)
    values[t.basis[i]] = t.rows[i][t.ncols];
  result.status = LpStatus::optimal;
  result.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    result.x[j] = values[j] - values[n + j];
    result.objective += c[j] * result.x[j];
  }
  return result;
}

} // namespace qtoric
