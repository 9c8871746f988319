#include "gsp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gsp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kRatioTol = 1e-12;
constexpr long kMaxIterations = 2'000'000;
constexpr int kDegenerateStreakLimit = 100;

// Solve M y = b with partial pivoting; M is square and column-major here.
std::vector<double> gauss_solve(std::vector<std::vector<double>> columns,
                                std::vector<double> b) {
  const int m = static_cast<int>(b.size());
  std::vector<int> col_of(m);
  for (int i = 0; i < m; ++i) col_of[i] = i;

  for (int step = 0; step < m; ++step) {
    int best_col = -1;
    int best_row = -1;
    double best = 0.0;
    for (int c = step; c < m; ++c) {
      for (int r = step; r < m; ++r) {
        double v = std::abs(columns[col_of[c]][r]);
        if (v > best) {
          best = v;
          best_col = c;
          best_row = r;
        }
      }
      // Partial pivoting per column is enough; stop at the first usable one.
      if (best > kPivotTol) break;
    }
    if (best <= kPivotTol) throw std::logic_error("singular basis matrix");
    std::swap(col_of[step], col_of[best_col]);
    if (best_row != step) {
      for (int c = 0; c < m; ++c)
        std::swap(columns[c][step], columns[c][best_row]);
      std::swap(b[step], b[best_row]);
    }
    const double pivot = columns[col_of[step]][step];
    for (int r = step + 1; r < m; ++r) {
      const double factor = columns[col_of[step]][r] / pivot;
      if (factor == 0.0) continue;
      for (int c = step; c < m; ++c)
        columns[col_of[c]][r] -= factor * columns[col_of[c]][step];
      b[r] -= factor * b[step];
    }
  }

  std::vector<double> y(m, 0.0);
  for (int step = m - 1; step >= 0; --step) {
    double acc = b[step];
    for (int c = step + 1; c < m; ++c)
      acc -= columns[col_of[c]][step] * y[col_of[c]];
    y[col_of[step]] = acc / columns[col_of[step]][step];
  }
  return y;
}

}  // namespace

SimplexResult simplex_maximize(const DenseLp& lp) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.rows.size());
  const int total = n + m;

  for (double b : lp.rhs)
    if (b < 0.0) throw std::invalid_argument("simplex requires rhs >= 0");

  // Tableau over structural variables and slacks; slacks start basic.
  std::vector<std::vector<double>> tab(m, std::vector<double>(total, 0.0));
  std::vector<double> rhs = lp.rhs;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    std::copy(lp.rows[i].begin(), lp.rows[i].end(), tab[i].begin());
    tab[i][n + i] = 1.0;
    basis[i] = n + i;
  }
  std::vector<double> reduced(total, 0.0);
  for (int j = 0; j < n; ++j) reduced[j] = -lp.objective[j];

  SimplexResult result;
  int degenerate_streak = 0;
  bool bland = false;

  while (true) {
    if (++result.iterations > kMaxIterations) {
      result.status = SimplexResult::Status::IterationLimit;
      return result;
    }

    int entering = -1;
    if (bland) {
      for (int j = 0; j < total; ++j)
        if (reduced[j] < -kPivotTol) {
          entering = j;
          break;
        }
    } else {
      double best = -kPivotTol;
      for (int j = 0; j < total; ++j)
        if (reduced[j] < best) {
          best = reduced[j];
          entering = j;
        }
    }
    if (entering < 0) break;  // optimal

    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (tab[i][entering] <= kPivotTol) continue;
      const double ratio = rhs[i] / tab[i][entering];
      if (ratio < best_ratio - kRatioTol ||
          (ratio < best_ratio + kRatioTol &&
           (leaving < 0 || basis[i] < basis[leaving]))) {
        best_ratio = ratio;
        leaving = i;
      }
    }
    if (leaving < 0) {
      result.status = SimplexResult::Status::Unbounded;
      return result;
    }

    if (best_ratio <= kRatioTol) {
      if (++degenerate_streak >= kDegenerateStreakLimit) bland = true;
    } else {
      degenerate_streak = 0;
      bland = false;
    }

    // Pivot on (leaving, entering).
    const double pivot = tab[leaving][entering];
    for (int j = 0; j < total; ++j) tab[leaving][j] /= pivot;
    rhs[leaving] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leaving) continue;
      const double factor = tab[i][entering];
      if (factor == 0.0) continue;
      for (int j = 0; j < total; ++j) tab[i][j] -= factor * tab[leaving][j];
      rhs[i] -= factor * rhs[leaving];
      if (rhs[i] < 0.0 && rhs[i] > -1e-11) rhs[i] = 0.0;
    }
    const double zfactor = reduced[entering];
    if (zfactor != 0.0)
      for (int j = 0; j < total; ++j) reduced[j] -= zfactor * tab[leaving][j];
    basis[leaving] = entering;
  }

  // Refactorize: recompute the basic values from the original columns.
  std::vector<std::vector<double>> columns(m, std::vector<double>(m, 0.0));
  for (int k = 0; k < m; ++k) {
    const int var = basis[k];
    if (var < n) {
      for (int i = 0; i < m; ++i) columns[k][i] = lp.rows[i][var];
    } else {
      columns[k][var - n] = 1.0;
    }
  }
  const std::vector<double> basic = gauss_solve(std::move(columns), lp.rhs);

  result.x.assign(n, 0.0);
  result.value = 0.0;
  for (int k = 0; k < m; ++k) {
    if (basic[k] < -1e-7) throw std::logic_error("simplex lost primal feasibility");
    if (basis[k] < n) result.x[basis[k]] = std::max(0.0, basic[k]);
  }
  for (int j = 0; j < n; ++j) result.value += lp.objective[j] * result.x[j];
  result.status = SimplexResult::Status::Optimal;
  return result;
}

}  // namespace gsp
