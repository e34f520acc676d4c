#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schur/matrix.hpp"
#include "schur/partitions.hpp"
#include "schur/sparse.hpp"
#include "schur/tableaux.hpp"

namespace schur {

/// Indexing scheme for the tensor product of exterior powers with column
/// lengths given by `shape`.  Basis elements are the strict-column fillings
/// Tab-(shape), ordered lexicographically by column-major reading word, and
/// encoded as mixed-radix integers with the leftmost column most significant.
/// A column length above n yields the zero module (dimension 0).
class WedgeShape {
public:
  WedgeShape(int n, std::vector<int> shape) : n_(n), shape_(std::move(shape)) {
    if (n_ <= 0) throw std::invalid_argument("n must be positive");
    for (int a : shape_)
      if (a < 0) throw std::invalid_argument("negative column length");
    words_by_len_.resize(n_ + 1);
    rank_by_len_.resize(n_ + 1);
    for (int k = 0; k <= n_; ++k) {
      words_by_len_[k] = decreasing_multiindices(n_, k);
      for (size_t d = 0; d < words_by_len_[k].size(); ++d)
        rank_by_len_[k][words_by_len_[k][d]] = static_cast<int>(d);
    }
    int cols = columns();
    radix_.assign(cols, 0);
    long long dim = 1;
    for (int j = 0; j < cols; ++j) {
      radix_[j] = shape_[j] <= n_ ? static_cast<int>(words_by_len_[shape_[j]].size()) : 0;
      dim *= radix_[j];
    }
    strides_.assign(cols, 1);
    for (int j = cols - 2; j >= 0; --j) strides_[j] = strides_[j + 1] * radix_[j + 1];
    dim_ = static_cast<int>(dim);
    if (dim_ == 0) return;

    // Weight of every basis element, plus the block partition by weight.
    block_of_.assign(dim_, -1);
    local_of_.assign(dim_, -1);
    std::map<Weight, int> block_ids;
    std::vector<int> digit(cols, 0);
    Weight w(n_, 0);
    for (int j = 0; j < cols; ++j)
      for (int x : words_by_len_[shape_[j]][0]) ++w[x - 1];
    for (int idx = 0;; ++idx) {
      auto [it, fresh] = block_ids.try_emplace(w, static_cast<int>(blocks_.size()));
      if (fresh) blocks_.push_back({w, {}});
      block_of_[idx] = it->second;
      local_of_[idx] = static_cast<int>(blocks_[it->second].indices.size());
      blocks_[it->second].indices.push_back(idx);
      // Odometer step, updating the content incrementally.
      int j = cols - 1;
      for (; j >= 0; --j) {
        for (int x : words_by_len_[shape_[j]][digit[j]]) --w[x - 1];
        if (++digit[j] < radix_[j]) break;
        digit[j] = 0;
        for (int x : words_by_len_[shape_[j]][0]) ++w[x - 1];
      }
      if (j < 0) break;
      for (int x : words_by_len_[shape_[j]][digit[j]]) ++w[x - 1];
    }
    block_ids_ = std::move(block_ids);
  }

  int n() const { return n_; }
  const std::vector<int>& shape() const { return shape_; }
  int columns() const { return static_cast<int>(shape_.size()); }
  int dim() const { return dim_; }
  int degree() const { return std::accumulate(shape_.begin(), shape_.end(), 0); }

  const MultiIndex& column_word(int length, int digit) const {
    return words_by_len_[length][digit];
  }
  int column_radix(int length) const { return static_cast<int>(words_by_len_[length].size()); }
  int column_rank(const MultiIndex& w) const {
    int k = static_cast<int>(w.size());
    if (k > n_) throw std::invalid_argument("column longer than n");
    auto it = rank_by_len_[k].find(w);
    if (it == rank_by_len_[k].end())
      throw std::invalid_argument("column is not strictly decreasing in range");
    return it->second;
  }

  std::vector<int> digits_of(int idx) const {
    check_index(idx);
    std::vector<int> d(columns());
    for (int j = 0; j < columns(); ++j) {
      d[j] = static_cast<int>(idx / strides_[j]);
      idx = static_cast<int>(idx % strides_[j]);
    }
    return d;
  }

  Tableau tableau_at(int idx) const {
    std::vector<int> d = digits_of(idx);
    std::vector<MultiIndex> cols(columns());
    for (int j = 0; j < columns(); ++j) cols[j] = words_by_len_[shape_[j]][d[j]];
    return Tableau(shape_, std::move(cols));
  }

  int index_of(const Tableau& t) const {
    if (t.shape != shape_) throw std::invalid_argument("tableau shape mismatch");
    long long idx = 0;
    for (int j = 0; j < columns(); ++j) idx += static_cast<long long>(column_rank(t.cols[j])) * strides_[j];
    return static_cast<int>(idx);
  }

  Weight weight_at(int idx) const {
    check_index(idx);
    return blocks_[block_of_[idx]].weight;
  }

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const Weight& block_weight(int b) const { return blocks_[b].weight; }
  const std::vector<int>& block_indices(int b) const { return blocks_[b].indices; }
  int block_of(int idx) const {
    check_index(idx);
    return block_of_[idx];
  }
  int local_of(int idx) const {
    check_index(idx);
    return local_of_[idx];
  }
  /// Block id for a weight, or -1 when the weight does not occur.
  int block_id(const Weight& w) const {
    auto it = block_ids_.find(w);
    return it == block_ids_.end() ? -1 : it->second;
  }

  /// Basis images under the m-th divided power of the raising (i+1 -> i) or
  /// lowering (i -> i+1) operator for the simple index 1 <= i < n.  Every
  /// image carries coefficient one: the letter flip keeps each column
  /// strictly decreasing in place, and a column holding both letters is
  /// killed.  The result lists one target per m-subset of eligible columns.
  std::vector<int> divided_power_targets(bool raising, int i, int m, int idx) const {
    if (i < 1 || i + 1 > n_) throw std::invalid_argument("simple index out of range");
    if (m < 1) throw std::invalid_argument("divided power order must be positive");
    check_index(idx);
    int from = raising ? i + 1 : i;
    int to = raising ? i : i + 1;
    std::vector<long long> deltas;
    int rem = idx;
    for (int j = 0; j < columns(); ++j) {
      int dj = static_cast<int>(rem / strides_[j]);
      rem = static_cast<int>(rem % strides_[j]);
      const MultiIndex& w = words_by_len_[shape_[j]][dj];
      bool has_to = false;
      int pos = -1;
      for (size_t s = 0; s < w.size(); ++s) {
        if (w[s] == from) pos = static_cast<int>(s);
        if (w[s] == to) has_to = true;
      }
      if (pos >= 0 && !has_to) {
        MultiIndex nw = w;
        nw[pos] = to;
        deltas.push_back(static_cast<long long>(rank_by_len_[shape_[j]].at(nw) - dj) * strides_[j]);
      }
    }
    int t = static_cast<int>(deltas.size());
    std::vector<int> out;
    if (m > t) return out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, long long delta) -> void {
      if (static_cast<int>(pick.size()) == m) {
        out.push_back(static_cast<int>(idx + delta));
        return;
      }
      int need = m - static_cast<int>(pick.size());
      for (int s = start; s + need <= t; ++s) {
        pick.push_back(s);
        self(self, s + 1, delta + deltas[s]);
        pick.pop_back();
      }
    };
    rec(rec, 0, 0);
    return out;
  }

private:
  struct Block {
    Weight weight;
    std::vector<int> indices;
  };

  void check_index(int idx) const {
    if (idx < 0 || idx >= dim_) throw std::out_of_range("basis index out of range");
  }

  int n_ = 0;
  std::vector<int> shape_;
  std::vector<std::vector<MultiIndex>> words_by_len_;
  std::vector<std::map<MultiIndex, int>> rank_by_len_;
  std::vector<int> radix_;
  std::vector<long long> strides_;
  int dim_ = 0;
  std::vector<int> block_of_, local_of_;
  std::vector<Block> blocks_;
  std::map<Weight, int> block_ids_;
};

/// Shared, thread-safe cache: the indexing data depends only on (n, shape).
inline const WedgeShape& wedge_shape(int n, const std::vector<int>& shape) {
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<WedgeShape>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, shape);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(std::move(key), std::make_unique<WedgeShape>(n, shape)).first;
  return *it->second;
}

/// Labels for the integral generating family of the degree-r Schur algebra:
/// divided powers of the simple raising and lowering operators together with
/// the weight idempotents.
struct GenLabel {
  enum Kind { Raise, Lower, Idem };
  Kind kind = Idem;
  int i = 0;
  int m = 0;
  Weight nu;
};

inline std::vector<GenLabel> generator_family(int n, int r) {
  std::vector<GenLabel> fam;
  for (int i = 1; i < n; ++i)
    for (int m = 1; m <= r; ++m) {
      fam.push_back({GenLabel::Raise, i, m, {}});
      fam.push_back({GenLabel::Lower, i, m, {}});
    }
  for (auto& nu : compositions(n, r)) fam.push_back({GenLabel::Idem, 0, 0, nu});
  return fam;
}

template <class K, class Field>
SparseMat<K> generator_matrix(const WedgeShape& ws, const GenLabel& g, const Field& field) {
  SparseMat<K> mat(ws.dim(), ws.dim());
  if (g.kind == GenLabel::Idem) {
    int b = ws.block_id(g.nu);
    if (b >= 0)
      for (int idx : ws.block_indices(b)) mat.add(idx, idx, field.one());
  } else {
    for (int src = 0; src < ws.dim(); ++src)
      for (int dst : ws.divided_power_targets(g.kind == GenLabel::Raise, g.i, g.m, src))
        mat.add(dst, src, field.one());
  }
  mat.compress();
  return mat;
}

/// A module given by the matrices of the generating family, in family order.
/// Matrices follow the column convention: column j of rho(g) holds the image
/// of basis vector j.
template <class K>
struct ModuleRep {
  int dim = 0;
  std::vector<SparseMat<K>> gens;
};

template <class K, class Field>
ModuleRep<K> wedge_rep(const WedgeShape& ws, const Field& field) {
  ModuleRep<K> rep;
  rep.dim = ws.dim();
  for (auto& g : generator_family(ws.n(), ws.degree()))
    rep.gens.push_back(generator_matrix<K>(ws, g, field));
  return rep;
}

/// Basis of intertwiners src -> tgt: matrices X with X rho_src(g) =
/// rho_tgt(g) X for every generator, shape tgt.dim x src.dim.
template <class K>
std::vector<Matrix<K>> hom_space(const ModuleRep<K>& src, const ModuleRep<K>& tgt, const K& zero,
                                 const K& one) {
  if (src.gens.size() != tgt.gens.size())
    throw std::invalid_argument("generator families differ");
  std::vector<std::pair<SparseMat<K>, SparseMat<K>>> pairs;
  pairs.reserve(src.gens.size());
  for (size_t g = 0; g < src.gens.size(); ++g) pairs.push_back({src.gens[g], tgt.gens[g]});
  return solve_commutant(pairs, src.dim, tgt.dim, zero, one);
}

template <class K>
bool intertwines(const Matrix<K>& x, const ModuleRep<K>& src, const ModuleRep<K>& tgt,
                 const K& zero) {
  if (x.rows() != tgt.dim || x.cols() != src.dim) return false;
  if (src.gens.size() != tgt.gens.size()) return false;
  for (size_t g = 0; g < src.gens.size(); ++g) {
    Matrix<K> lhs = x * src.gens[g].dense(zero);
    Matrix<K> rhs = tgt.gens[g].dense(zero) * x;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

/// Minor of g with rows and columns selected by strictly decreasing words of
/// equal length (both read in the given order).  Empty selections give one.
template <class K>
K matrix_minor(const Matrix<K>& g, const MultiIndex& rows, const MultiIndex& cols, const K& one) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor must be square");
  int k = static_cast<int>(rows.size());
  if (k == 0) return one;
  Matrix<K> sub(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) sub.at(a, b) = g.at(rows[a] - 1, cols[b] - 1);
  return sub.det();
}

/// Product over columns of the minors of g: the coefficient of basis element
/// s in the image of basis element t under the action of g.
template <class K>
K bideterminant(const Matrix<K>& g, const Tableau& s, const Tableau& t, const K& one) {
  if (s.shape != t.shape) throw std::invalid_argument("tableau shape mismatch");
  K val = one;
  for (int j = 0; j < s.columns(); ++j) val = val * matrix_minor(g, s.cols[j], t.cols[j], one);
  return val;
}

/// Matrix of the action of g on the whole wedge module: the column-wise
/// Kronecker product of per-column minor matrices.  Multiplicative in g.
template <class K>
Matrix<K> structure_matrix(const WedgeShape& ws, const Matrix<K>& g, const K& zero, const K& one) {
  if (g.rows() != ws.n() || g.cols() != ws.n())
    throw std::invalid_argument("matrix size must match n");
  if (ws.dim() == 0) return Matrix<K>(0, 0, zero);
  Matrix<K> acc = Matrix<K>::identity(1, one);
  for (int j = 0; j < ws.columns(); ++j) {
    int k = ws.shape()[j];
    int radix = ws.column_radix(k);
    Matrix<K> colmat(radix, radix, zero);
    for (int a = 0; a < radix; ++a)
      for (int b = 0; b < radix; ++b)
        colmat.at(a, b) = matrix_minor(g, ws.column_word(k, a), ws.column_word(k, b), one);
    acc = kron(acc, colmat, zero);
  }
  return acc;
}

} // namespace schur
