#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schur/matrix.hpp"

namespace schur {

/// Sparse matrix stored as coordinate triplets with on-demand row/column
/// indexes.  Used for module action matrices, which are very sparse.
template <class K>
class SparseMat {
public:
  SparseMat() : rows_(0), cols_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int i, int j, K v) {
    if (v.is_zero()) return;
    trip_.push_back({i, j, std::move(v)});
    indexed_ = false;
  }

  /// Merges duplicate coordinates; drops entries that cancel.
  void compress() {
    std::sort(trip_.begin(), trip_.end(), [](const Trip& a, const Trip& b) {
      return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    std::vector<Trip> out;
    for (auto& t : trip_) {
      if (!out.empty() && out.back().i == t.i && out.back().j == t.j)
        out.back().v += t.v;
      else
        out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Trip& t) { return t.v.is_zero(); }),
              out.end());
    trip_ = std::move(out);
    indexed_ = false;
  }

  size_t nonzeros() const { return trip_.size(); }

  bool is_diagonal() const {
    for (auto& t : trip_)
      if (t.i != t.j) return false;
    return true;
  }

  std::vector<K> diagonal(const K& zero) const {
    std::vector<K> d(std::min(rows_, cols_), zero);
    for (auto& t : trip_)
      if (t.i == t.j) d[t.i] += t.v;
    return d;
  }

  const std::vector<std::pair<int, K>>& row(int i) const {
    build_index();
    return rows_idx_[i];
  }
  const std::vector<std::pair<int, K>>& column(int j) const {
    build_index();
    return cols_idx_[j];
  }

  Matrix<K> dense(K zero = K(0)) const {
    Matrix<K> m(rows_, cols_, zero);
    for (auto& t : trip_) m.at(t.i, t.j) += t.v;
    return m;
  }

  static SparseMat from_dense(const Matrix<K>& m) {
    SparseMat s(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) s.add(i, j, m.at(i, j));
    return s;
  }

  /// y = this * x for a dense vector x.
  std::vector<K> apply(const std::vector<K>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("dimension mismatch");
    std::vector<K> y(rows_, K(0));
    for (auto& t : trip_) y[t.i] += t.v * x[t.j];
    return y;
  }

private:
  struct Trip {
    int i, j;
    K v;
  };
  int rows_, cols_;
  std::vector<Trip> trip_;
  mutable bool indexed_ = false;
  mutable std::vector<std::vector<std::pair<int, K>>> rows_idx_, cols_idx_;

  void build_index() const {
    if (indexed_) return;
    rows_idx_.assign(rows_, {});
    cols_idx_.assign(cols_, {});
    for (auto& t : trip_) {
      rows_idx_[t.i].push_back({t.j, t.v});
      cols_idx_[t.j].push_back({t.i, t.v});
    }
    indexed_ = true;
  }
};

/// Solves the simultaneous commutation equations X*P = Q*X over a list of
/// pairs (P a-by-a, Q b-by-b) and returns a basis, in reduced echelon order,
/// of the space of b-by-a matrices X satisfying all of them.
///
/// Diagonal pairs are applied first as support constraints (X_ij survives
/// only when P_jj == Q_ii for every diagonal pair), which keeps the dense
/// elimination small when the pair list contains many projections.
template <class K>
std::vector<Matrix<K>> solve_commutant(
    const std::vector<std::pair<SparseMat<K>, SparseMat<K>>>& pairs, int a, int b,
    const K& zero, const K& one) {
  for (auto& [P, Q] : pairs) {
    if (P.rows() != a || P.cols() != a || Q.rows() != b || Q.cols() != b)
      throw std::invalid_argument("dimension mismatch");
  }

  // Support pruning via diagonal pairs.
  std::vector<char> keep(static_cast<size_t>(a) * b, 1);
  for (auto& [P, Q] : pairs) {
    if (!P.is_diagonal() || !Q.is_diagonal()) continue;
    std::vector<K> pd = P.diagonal(zero);
    std::vector<K> qd = Q.diagonal(zero);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < a; ++j)
        if (!(pd[j] == qd[i])) keep[static_cast<size_t>(i) * a + j] = 0;
  }
  std::vector<int> uid(static_cast<size_t>(a) * b, -1);
  std::vector<std::pair<int, int>> unknowns; // (i, j) with X_ij free so far
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < a; ++j)
      if (keep[static_cast<size_t>(i) * a + j]) {
        uid[static_cast<size_t>(i) * a + j] = static_cast<int>(unknowns.size());
        unknowns.push_back({i, j});
      }
  const int u = static_cast<int>(unknowns.size());

  // Incremental echelon over the constraint rows.
  std::vector<std::vector<K>> ech; // rows, each normalized with leading 1
  std::vector<int> ech_pivot;
  auto insert_row = [&](std::vector<K>& row) {
    for (size_t r = 0; r < ech.size(); ++r) {
      const K& f = row[ech_pivot[r]];
      if (f.is_zero()) continue;
      K c = f; // row -= c * ech[r]
      for (int k = ech_pivot[r]; k < u; ++k) row[k] -= c * ech[r][k];
    }
    int piv = -1;
    for (int k = 0; k < u; ++k)
      if (!row[k].is_zero()) {
        piv = k;
        break;
      }
    if (piv < 0) return;
    K inv = row[piv].inv();
    for (int k = piv; k < u; ++k) row[k] *= inv;
    for (size_t r = 0; r < ech.size(); ++r) {
      K f = ech[r][piv];
      if (f.is_zero()) continue;
      for (int k = piv; k < u; ++k) ech[r][k] -= f * row[k];
    }
    ech.push_back(std::move(row));
    ech_pivot.push_back(piv);
  };

  for (auto& [P, Q] : pairs) {
    if (static_cast<int>(ech.size()) == u) break; // only the zero solution remains
    if (P.is_diagonal() && Q.is_diagonal()) continue;
    // Row key (i, j): sum_l X_il P_lj - sum_k Q_ik X_kj = 0.
    std::map<long long, std::vector<std::pair<int, K>>> acc;
    for (int t = 0; t < u; ++t) {
      auto [i, l] = unknowns[t];
      for (auto& [j, v] : P.row(l))
        acc[static_cast<long long>(i) * a + j].push_back({t, v});
    }
    for (int t = 0; t < u; ++t) {
      auto [k, j] = unknowns[t];
      for (auto& [i, w] : Q.column(k))
        acc[static_cast<long long>(i) * a + j].push_back({t, -w});
    }
    for (auto& [key, terms] : acc) {
      std::vector<K> row(u, zero);
      bool nonzero = false;
      for (auto& [t, v] : terms) {
        row[t] += v;
        nonzero = true;
      }
      if (!nonzero) continue;
      insert_row(row);
      if (static_cast<int>(ech.size()) == u) break;
    }
  }

  // Nullspace of the echelon system, one basis matrix per free unknown.
  std::vector<char> is_pivot(u, 0);
  for (int p : ech_pivot) is_pivot[p] = 1;
  // Rows of ech are not sorted by pivot; sort views for back-substitution.
  std::vector<int> order(ech.size());
  for (size_t r = 0; r < ech.size(); ++r) order[r] = static_cast<int>(r);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return ech_pivot[x] < ech_pivot[y]; });

  std::vector<Matrix<K>> basis;
  for (int fre = 0; fre < u; ++fre) {
    if (is_pivot[fre]) continue;
    Matrix<K> X(b, a, zero);
    X.at(unknowns[fre].first, unknowns[fre].second) = one;
    for (int r : order) {
      const K& c = ech[r][fre];
      if (c.is_zero()) continue;
      X.at(unknowns[ech_pivot[r]].first, unknowns[ech_pivot[r]].second) = -c;
    }
    basis.push_back(std::move(X));
  }
  return basis;
}

/// Dense-input convenience overload.
template <class K>
std::vector<Matrix<K>> solve_commutant(
    const std::vector<std::pair<Matrix<K>, Matrix<K>>>& pairs, int a, int b,
    const K& zero, const K& one) {
  std::vector<std::pair<SparseMat<K>, SparseMat<K>>> sp;
  sp.reserve(pairs.size());
  for (auto& [P, Q] : pairs)
    sp.push_back({SparseMat<K>::from_dense(P), SparseMat<K>::from_dense(Q)});
  return solve_commutant(sp, a, b, zero, one);
}

} // namespace schur
