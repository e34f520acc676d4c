#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include "schur/gf.hpp"
#include "schur/matrix.hpp"
#include "schur/partitions.hpp"
#include "schur/tableaux.hpp"
#include "schur/wedge.hpp"

namespace schur {

/// Cyclic submodule generated by the highest-weight filling inside the wedge
/// module of shape conjugate(lambda), closed under all divided lowering
/// powers.  Vectors are held per weight block in dense local coordinates and
/// kept in fully reduced echelon form, so construction doubles as a
/// dimension check against the standard tableau count.
template <class K, class Field>
class WeylModule {
public:
  WeylModule(const Field& field, int n, Partition la)
      : field_(field), n_(n), la_(std::move(la)) {
    if (la_.length() > n_) throw std::invalid_argument("partition has more than n parts");
    ambient_ = &wedge_shape(n_, conjugate(la_).parts());
    const WedgeShape& amb = *ambient_;

    Tableau hw = highest_weight_tableau(la_);
    int start = amb.index_of(hw);
    int bid = amb.block_of(start);
    std::vector<K> v0(amb.block_indices(bid).size(), field_.zero());
    v0[amb.local_of(start)] = field_.one();

    std::deque<std::pair<int, std::vector<K>>> queue;
    insert(bid, std::move(v0), queue);
    while (!queue.empty()) {
      auto [b, v] = std::move(queue.front());
      queue.pop_front();
      const Weight& nu = amb.block_weight(b);
      const std::vector<int>& idxs = amb.block_indices(b);
      for (int i = 1; i < n_; ++i) {
        for (int m = 1; m <= nu[i - 1]; ++m) {
          Weight tw = nu;
          tw[i - 1] -= m;
          tw[i] += m;
          int tb = amb.block_id(tw);
          if (tb < 0) continue;
          std::vector<K> img(amb.block_indices(tb).size(), field_.zero());
          bool any = false;
          for (size_t s = 0; s < idxs.size(); ++s) {
            if (v[s].is_zero()) continue;
            for (int dst : amb.divided_power_targets(false, i, m, idxs[s])) {
              img[amb.local_of(dst)] += v[s];
              any = true;
            }
          }
          if (any) insert(tb, std::move(img), queue);
        }
      }
    }

    dim_ = 0;
    for (auto& [b, blk] : blocks_) dim_ += static_cast<int>(blk.rows.size());
    long long expect = count_stab(conjugate(la_), n_);
    if (dim_ != expect)
      throw std::runtime_error("cyclic closure does not match the Weyl dimension for " +
                               la_.to_string());
  }

  int n() const { return n_; }
  const Partition& highest_weight() const { return la_; }
  const WedgeShape& ambient() const { return *ambient_; }
  int dim() const { return dim_; }

  /// Weights with nonzero multiplicity, in ambient block order.
  std::vector<Weight> weights() const {
    std::vector<Weight> out;
    for (auto& [b, blk] : blocks_)
      if (!blk.rows.empty()) out.push_back(ambient_->block_weight(b));
    return out;
  }

  int weight_dim(const Weight& nu) const {
    const Block* blk = find_block(nu);
    return blk ? static_cast<int>(blk->rows.size()) : 0;
  }

  /// Contravariant products of the stored basis of the nu weight space.  The
  /// ambient standard basis is orthonormal for the form, which pairs the
  /// highest-weight vector with itself to one.
  Matrix<K> gram_block(const Weight& nu) const {
    const Block* blk = find_block(nu);
    if (!blk) return Matrix<K>(0, 0, field_.zero());
    int d = static_cast<int>(blk->rows.size());
    Matrix<K> g(d, d, field_.zero());
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) {
        K acc = field_.zero();
        for (size_t s = 0; s < blk->rows[a].size(); ++s) acc += blk->rows[a][s] * blk->rows[b][s];
        g.at(a, b) = acc;
        g.at(b, a) = acc;
      }
    return g;
  }

  /// Dimension of the nu weight space of the simple head: the rank of the
  /// contravariant form on the nu weight space.
  int simple_weight_dim(const Weight& nu) const {
    const Block* blk = find_block(nu);
    if (!blk) return 0;
    return gram_block(nu).rank();
  }

private:
  struct Block {
    std::vector<std::vector<K>> rows;
    std::vector<int> pivots;
  };

  const Block* find_block(const Weight& nu) const {
    if (static_cast<int>(nu.size()) != n_) return nullptr;
    int bid = ambient_->block_id(nu);
    if (bid < 0) return nullptr;
    auto it = blocks_.find(bid);
    return it == blocks_.end() ? nullptr : &it->second;
  }

  void insert(int bid, std::vector<K> v, std::deque<std::pair<int, std::vector<K>>>& queue) {
    Block& blk = blocks_[bid];
    for (size_t t = 0; t < blk.rows.size(); ++t) {
      const K& c = v[blk.pivots[t]];
      if (c.is_zero()) continue;
      K f = c;
      for (size_t s = 0; s < v.size(); ++s) v[s] -= f * blk.rows[t][s];
    }
    int piv = -1;
    for (size_t s = 0; s < v.size(); ++s)
      if (!v[s].is_zero()) {
        piv = static_cast<int>(s);
        break;
      }
    if (piv < 0) return;
    K inv = v[piv].inv();
    for (auto& x : v) x = x * inv;
    for (size_t t = 0; t < blk.rows.size(); ++t) {
      const K& c = blk.rows[t][piv];
      if (c.is_zero()) continue;
      K f = c;
      for (size_t s = 0; s < v.size(); ++s) blk.rows[t][s] -= f * v[s];
    }
    blk.pivots.push_back(piv);
    blk.rows.push_back(v);
    queue.push_back({bid, std::move(v)});
  }

  Field field_;
  int n_;
  Partition la_;
  const WedgeShape* ambient_ = nullptr;
  std::map<int, Block> blocks_;
  int dim_ = 0;
};

/// Character of the simple module with highest weight mu, tabulated at the
/// dominant weights only (characters are symmetric in the weight entries).
template <class K, class Field>
std::map<Partition, long long> simple_character(const Field& field, int n, const Partition& mu) {
  WeylModule<K, Field> w(field, n, mu);
  std::map<Partition, long long> ch;
  for (auto& nu : partitions_all(n, mu.sum())) {
    int d = w.simple_weight_dim(nu.padded(n));
    if (d) ch[nu] = d;
  }
  return ch;
}

/// Multiplicities [Delta(lambda) : L(mu)] over GF(p), rows and columns in
/// label order.  Upper unitriangular because the label order refines
/// dominance.
struct DecompositionTable {
  std::uint32_t p = 0;
  int n = 0;
  int r = 0;
  std::vector<Partition> labels;
  std::vector<std::vector<long long>> entries;

  int index_of(const Partition& la) const {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == la) return static_cast<int>(i);
    throw std::invalid_argument("label not in table: " + la.to_string());
  }
  long long at(const Partition& la, const Partition& mu) const {
    return entries[index_of(la)][index_of(mu)];
  }
};

inline DecompositionTable compute_decomposition_matrix(std::uint32_t p, int n, int r,
                                                       int jobs = 1) {
  GfField field(p);
  DecompositionTable t;
  t.p = p;
  t.n = n;
  t.r = r;
  t.labels = partitions_all(n, r);
  size_t count = t.labels.size();
  t.entries.assign(count, std::vector<long long>(count, 0));

  // One Weyl module per label yields both characters; the module is
  // discarded immediately to bound memory.  Labels are independent, so they
  // can be processed by a bounded pool; results land in per-label slots and
  // the solve below stays single-threaded, keeping the output deterministic.
  std::vector<std::map<Partition, long long>> ch_weyl(count), ch_simple(count);
  auto characters_at = [&](size_t i) {
    WeylModule<Gf, GfField> w(field, n, t.labels[i]);
    for (auto& nu : t.labels) {
      Weight key(nu.padded(n));
      long long wd = w.weight_dim(key);
      if (wd != kostka(t.labels[i], key, n))
        throw std::runtime_error("weyl character disagrees with the kostka numbers");
      if (wd) {
        ch_weyl[i][nu] = wd;
        long long sd = w.simple_weight_dim(key);
        if (sd) ch_simple[i][nu] = sd;
      }
    }
  };
  if (jobs <= 1) {
    for (size_t i = 0; i < count; ++i) characters_at(i);
  } else {
    std::atomic<size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&] {
      for (size_t i = next++; i < count; i = next++) {
        try {
          characters_at(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min<int>(jobs, static_cast<int>(count)); ++w)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }

  // Triangular solve: labels run from most dominant down, and each simple
  // character is supported strictly below its head in that order.
  for (size_t i = 0; i < count; ++i) {
    std::map<Partition, long long> residual = ch_weyl[i];
    for (size_t j = i; j < count; ++j) {
      auto it = residual.find(t.labels[j]);
      long long d = it == residual.end() ? 0 : it->second;
      if (j == i && d != 1)
        throw std::runtime_error("decomposition is not unitriangular at " +
                                 t.labels[i].to_string());
      if (d < 0)
        throw std::runtime_error("negative multiplicity in decomposition at " +
                                 t.labels[i].to_string());
      if (d == 0) continue;
      t.entries[i][j] = d;
      for (auto& [nu, m] : ch_simple[j]) residual[nu] -= d * m;
    }
    for (auto& [nu, v] : residual)
      if (v != 0)
        throw std::runtime_error("decomposition residual is nonzero at " +
                                 t.labels[i].to_string());
  }
  return t;
}

/// Cached access: the table depends only on (p, n, r).
inline const DecompositionTable& decomposition_matrix(std::uint32_t p, int n, int r) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, int, int>, std::unique_ptr<DecompositionTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, n, r);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache
             .emplace(key, std::make_unique<DecompositionTable>(compute_decomposition_matrix(p, n, r)))
             .first;
  return *it->second;
}

/// Dimension of the lambda weight space of the simple module L(mu) over
/// GF(p); agrees with the classical Kostka number whenever p > r.
inline long long p_kostka(std::uint32_t p, int n, const Partition& la, const Partition& mu) {
  if (la.sum() != mu.sum()) throw std::invalid_argument("mixed degrees");
  GfField field(p);
  WeylModule<Gf, GfField> w(field, n, mu);
  return w.simple_weight_dim(la.padded(n));
}

/// Full dimension of L(mu) over GF(p): simple character values times the
/// sizes of the permutation orbits of the dominant weights.
inline long long simple_dimension(std::uint32_t p, int n, const Partition& mu) {
  GfField field(p);
  std::map<Partition, long long> ch = simple_character<Gf>(field, n, mu);
  long long dim = 0;
  for (auto& [nu, d] : ch) {
    std::vector<int> padded = nu.padded(n);
    long long num = 1, den = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    std::map<int, int> mult;
    for (int x : padded) ++mult[x];
    for (auto& [x, c] : mult)
      for (int i = 2; i <= c; ++i) den *= i;
    dim += d * (num / den);
  }
  return dim;
}

} // namespace schur
