#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schur/partitions.hpp"

namespace schur {

/// Strictly or weakly ordered word of letters from {1, ..., n}.
using MultiIndex = std::vector<int>;
/// Content vector of length n (letter multiplicities).
using Weight = std::vector<int>;

inline bool strictly_decreasing(const MultiIndex& w) {
  for (size_t k = 1; k < w.size(); ++k)
    if (w[k] >= w[k - 1]) return false;
  return true;
}

/// I-(n, k): strictly decreasing words of length k over {1..n}, in ascending
/// lexicographic order; empty when k > n.
inline std::vector<MultiIndex> decreasing_multiindices(int n, int k) {
  if (k == 0) return {MultiIndex{}};
  if (k > n || k < 0) return {};
  std::vector<MultiIndex> out;
  for (int first = k; first <= n; ++first)
    for (auto& rest : decreasing_multiindices(first - 1, k - 1)) {
      MultiIndex w;
      w.reserve(k);
      w.push_back(first);
      w.insert(w.end(), rest.begin(), rest.end());
      out.push_back(std::move(w));
    }
  return out;
}

inline void require_distinct_in_range(const MultiIndex& w, int n) {
  std::vector<char> seen(n + 1, 0);
  for (int x : w) {
    if (x < 1 || x > n) throw std::invalid_argument("letter out of range");
    if (seen[x]) throw std::invalid_argument("repeated entries");
    seen[x] = 1;
  }
}

/// Complementary letters of w inside {1..n}, in decreasing order.
inline MultiIndex complement_multiindex(const MultiIndex& w, int n) {
  require_distinct_in_range(w, n);
  std::vector<char> seen(n + 1, 0);
  for (int x : w) seen[x] = 1;
  MultiIndex c;
  for (int x = n; x >= 1; --x)
    if (!seen[x]) c.push_back(x);
  return c;
}

/// Sum of the letters of w.
inline int multiindex_weight(const MultiIndex& w) {
  return std::accumulate(w.begin(), w.end(), 0);
}

/// Sign defined by v_w ^ v_{w-hat} = sgn(w) * (v_n ^ ... ^ v_1): the parity of
/// sorting the concatenation (w, w-hat) into decreasing order.
inline int sgn_multiindex(const MultiIndex& w, int n) {
  MultiIndex concat = w;
  MultiIndex hat = complement_multiindex(w, n);
  concat.insert(concat.end(), hat.begin(), hat.end());
  int asc = 0;
  for (size_t s = 0; s < concat.size(); ++s)
    for (size_t t = s + 1; t < concat.size(); ++t)
      if (concat[s] < concat[t]) ++asc;
  return asc % 2 == 0 ? 1 : -1;
}

/// Column-major tableau: column j holds shape[j] letters.  The underlying
/// Young diagram is the conjugate of the shape, so a partition shape means
/// weakly decreasing column lengths.
struct Tableau {
  std::vector<int> shape;
  std::vector<MultiIndex> cols;

  Tableau() = default;
  Tableau(std::vector<int> shape_, std::vector<MultiIndex> cols_)
      : shape(std::move(shape_)), cols(std::move(cols_)) {
    if (shape.size() != cols.size()) throw std::invalid_argument("shape/column mismatch");
    for (size_t j = 0; j < cols.size(); ++j)
      if (static_cast<int>(cols[j].size()) != shape[j])
        throw std::invalid_argument("shape/column mismatch");
  }

  int degree() const { return std::accumulate(shape.begin(), shape.end(), 0); }
  int columns() const { return static_cast<int>(cols.size()); }

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape == b.shape && a.cols == b.cols;
  }
  friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
  friend bool operator<(const Tableau& a, const Tableau& b) {
    if (a.shape != b.shape) return a.shape < b.shape;
    return a.cols < b.cols;
  }
};

/// Row-wise cell listing (top row first), used for display and row checks.
inline std::vector<std::vector<int>> tableau_rows(const Tableau& t) {
  int height = 0;
  for (int a : t.shape) height = std::max(height, a);
  std::vector<std::vector<int>> rows(height);
  for (int i = 0; i < height; ++i)
    for (int j = 0; j < t.columns(); ++j)
      if (i < t.shape[j]) rows[i].push_back(t.cols[j][i]);
  return rows;
}

/// Builds a column-major tableau from row-wise input (rows of a partition
/// diagram, top row first).
inline Tableau tableau_from_rows(const std::vector<std::vector<int>>& rows) {
  int width = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() > rows[i - 1].size())
      throw std::invalid_argument("rows must weakly shorten");
  std::vector<int> shape(width, 0);
  std::vector<MultiIndex> cols(width);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) {
      cols[j].push_back(rows[i][j]);
      shape[j] = static_cast<int>(i) + 1;
    }
  return Tableau(std::move(shape), std::move(cols));
}

inline Weight tableau_content(const Tableau& t, int n) {
  Weight w(n, 0);
  for (auto& col : t.cols)
    for (int x : col) {
      if (x < 1 || x > n) throw std::invalid_argument("letter out of range");
      ++w[x - 1];
    }
  return w;
}

inline bool has_strict_columns(const Tableau& t) {
  for (auto& col : t.cols)
    if (!strictly_decreasing(col)) return false;
  return true;
}

/// Semistandard in the decreasing convention: strictly decreasing down
/// columns and weakly decreasing along rows.
inline bool is_semistandard(const Tableau& t) {
  if (!has_strict_columns(t)) return false;
  for (int j = 1; j < t.columns(); ++j) {
    int common = std::min(t.shape[j - 1], t.shape[j]);
    for (int i = 0; i < common; ++i)
      if (t.cols[j - 1][i] < t.cols[j][i]) return false;
  }
  return true;
}

/// Tab-(shape): all fillings with strictly decreasing columns, ordered
/// lexicographically by column-major reading word (left column most
/// significant).
inline std::vector<Tableau> enumerate_tab_minus(const std::vector<int>& shape, int n) {
  std::vector<std::vector<MultiIndex>> per_col;
  for (int a : shape) {
    per_col.push_back(decreasing_multiindices(n, a));
    if (per_col.back().empty()) return {};
  }
  std::vector<Tableau> out;
  std::vector<MultiIndex> cur(shape.size());
  auto rec = [&](auto&& self, size_t j) -> void {
    if (j == shape.size()) {
      out.push_back(Tableau(shape, cur));
      return;
    }
    for (auto& c : per_col[j]) {
      cur[j] = c;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// STab(alpha) for a partition shape alpha: semistandard fillings.
inline std::vector<Tableau> enumerate_stab(const Partition& alpha, int n) {
  std::vector<int> shape = alpha.parts();
  std::vector<Tableau> out;
  std::vector<MultiIndex> cur(shape.size());
  auto rec = [&](auto&& self, size_t j) -> void {
    if (j == shape.size()) {
      out.push_back(Tableau(shape, cur));
      return;
    }
    // Build column j top-down: strictly decreasing, bounded row-wise by the
    // previous column.
    MultiIndex col(shape[j]);
    auto fill = [&](auto&& fself, int i) -> void {
      if (i == shape[j]) {
        cur[j] = col;
        self(self, j + 1);
        return;
      }
      int hi = i == 0 ? n : col[i - 1] - 1;
      if (j > 0) hi = std::min(hi, cur[j - 1][i]);
      for (int v = hi; v >= shape[j] - i; --v) {
        col[i] = v;
        fself(fself, i + 1);
      }
    };
    fill(fill, 0);
  };
  if (!shape.empty())
    rec(rec, 0);
  else
    out.push_back(Tableau{});
  return out;
}

inline long long count_stab(const Partition& alpha, int n) {
  return static_cast<long long>(enumerate_stab(alpha, n).size());
}

/// Kostka number K_{lambda, nu}: semistandard lambda-diagram tableaux (shape
/// conjugate(lambda) in column-length terms) whose content is nu flipped by
/// i -> n + 1 - i.  Equals the classical count by the flip bijection.
inline long long kostka(const Partition& lambda, const Weight& nu, int n) {
  if (static_cast<int>(nu.size()) > n)
    throw std::invalid_argument("weight longer than n");
  Weight target(n, 0);
  for (size_t i = 0; i < nu.size(); ++i) target[n - 1 - i] = nu[i];
  long long count = 0;
  for (auto& t : enumerate_stab(conjugate(lambda), n))
    if (tableau_content(t, n) == target) ++count;
  return count;
}

/// Complement tableau: column i of the result is the complementary
/// multi-index of column m + 1 - i of t (absent columns count as empty).
inline Tableau complement_tableau(const Tableau& t, int n, int m) {
  if (t.columns() > m) throw std::invalid_argument("tableau has more than m columns");
  if (!has_strict_columns(t)) throw std::invalid_argument("columns must be strictly decreasing");
  std::vector<int> shape(m);
  std::vector<MultiIndex> cols(m);
  for (int i = 0; i < m; ++i) {
    int j = m - 1 - i;
    MultiIndex src = j < t.columns() ? t.cols[j] : MultiIndex{};
    cols[i] = complement_multiindex(src, n);
    shape[i] = static_cast<int>(cols[i].size());
  }
  return Tableau(std::move(shape), std::move(cols));
}

inline int sgn_tableau(const Tableau& t, int n) {
  int s = 1;
  for (auto& col : t.cols) s *= sgn_multiindex(col, n);
  return s;
}

/// Twist statistic: sum over columns j = 1..m-1 of (m - j) times the letter
/// sum of the complement of column j (absent columns count as empty).
inline long long epsilon_stat(const Tableau& t, int n, int m) {
  if (t.columns() > m) throw std::invalid_argument("tableau has more than m columns");
  long long eps = 0;
  long long full = static_cast<long long>(n) * (n + 1) / 2;
  for (int j = 0; j + 1 < m; ++j) {
    long long col_sum = j < t.columns() ? multiindex_weight(t.cols[j]) : 0;
    eps += static_cast<long long>(m - 1 - j) * (full - col_sum);
  }
  return eps;
}

/// The canonical highest-weight filling of the diagram of lambda: column j
/// holds lambda'_j, ..., 2, 1 top to bottom.  Its content is lambda.
inline Tableau highest_weight_tableau(const Partition& lambda) {
  Partition alpha = conjugate(lambda);
  std::vector<int> shape = alpha.parts();
  std::vector<MultiIndex> cols;
  for (int a : shape) {
    MultiIndex col(a);
    for (int i = 0; i < a; ++i) col[i] = a - i;
    cols.push_back(std::move(col));
  }
  return Tableau(std::move(shape), std::move(cols));
}

inline std::string render_tableau(const Tableau& t) {
  std::ostringstream os;
  auto rows = tableau_rows(t);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) os << "\n";
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j) os << " ";
      os << rows[i][j];
    }
  }
  return os.str();
}

} // namespace schur
