#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

using SparseRow = std::map<std::size_t, BigRational>;
using Matrix = std::vector<std::vector<BigRational>>;

/// Incremental exact Gaussian elimination over Q on sparse rows. Each stored
/// pivot row has a unit entry at its pivot column and no entries to its left.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t columns) : columns_(columns) {}

  /// Adds the equation row . x = rhs.
  void add_row(SparseRow row, BigRational rhs = 0) {
    for (auto it = row.begin(); it != row.end();) {
      if (it->second == 0) {
        it = row.erase(it);
        continue;
      }
      const std::size_t col = it->first;
      auto piv = pivots_.find(col);
      if (piv == pivots_.end()) {
        ++it;
        continue;
      }
      const BigRational factor = it->second;
      for (const auto& [c, v] : piv->second.row) {
        BigRational& dst = row[c];
        dst -= factor * v;
      }
      rhs -= factor * piv->second.rhs;
      row.erase(col);
      it = row.upper_bound(col);
    }
    for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
    if (row.empty()) {
      if (rhs != 0) consistent_ = false;
      return;
    }
    const std::size_t lead = row.begin()->first;
    const BigRational inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    rhs *= inv;
    pivots_.emplace(lead, Pivot{std::move(row), std::move(rhs)});
  }

  bool consistent() const { return consistent_; }
  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }

  /// A particular solution (free variables zero), if the system is consistent.
  std::optional<std::vector<BigRational>> solution() const {
    if (!consistent_) return std::nullopt;
    return back_substitute({}, true);
  }

  /// Basis of the solution space of the homogeneous system.
  std::vector<std::vector<BigRational>> nullspace() const {
    std::vector<std::vector<BigRational>> basis;
    for (std::size_t c = 0; c < columns_; ++c) {
      if (pivots_.count(c)) continue;
      basis.push_back(back_substitute(c, false));
    }
    return basis;
  }

 private:
  struct Pivot {
    SparseRow row;
    BigRational rhs;
  };

  std::vector<BigRational> back_substitute(std::optional<std::size_t> free_col, bool use_rhs) const {
    std::vector<BigRational> x(columns_, BigRational(0));
    if (free_col) x[*free_col] = 1;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const auto& [col, p] = *it;
      BigRational v = use_rhs ? p.rhs : BigRational(0);
      for (const auto& [c, a] : p.row)
        if (c != col) v -= a * x[c];
      x[col] = v;
    }
    return x;
  }

  std::size_t columns_;
  std::map<std::size_t, Pivot> pivots_;
  bool consistent_ = true;
};

inline Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<BigRational>(n, BigRational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), std::vector<BigRational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  Matrix c(a.size(), std::vector<BigRational>(b.empty() ? 0 : b[0].size(), BigRational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw InvalidArgument("matrix shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

inline BigRational determinant(Matrix a) {
  const std::size_t n = a.size();
  BigRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const BigRational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

}  // namespace verlinde
