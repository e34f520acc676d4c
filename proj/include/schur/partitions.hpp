#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schur {

/// Integer partition, stored normalized (weakly decreasing, no trailing
/// zeros).  Trailing zeros in input are accepted and stripped.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  int length() const { return static_cast<int>(parts_.size()); }
  int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  std::vector<int> padded(int n) const {
    if (length() > n) throw std::invalid_argument("partition has more than n parts");
    std::vector<int> p(parts_);
    p.resize(n, 0);
    return p;
  }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  std::string to_string(int pad = 0) const {
    std::ostringstream os;
    os << "(";
    int n = std::max(pad, length());
    for (int i = 0; i < n; ++i) {
      if (i) os << ", ";
      os << part(i);
    }
    os << ")";
    return os.str();
  }

private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& la) {
  std::vector<int> c;
  for (int i = 0; i < la.part(0); ++i) {
    int cnt = 0;
    while (cnt < la.length() && la.part(cnt) > i) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

/// Dominance order: la >= mu iff all prefix sums of la dominate those of mu.
/// Defined only between partitions of the same number.
inline bool dominates(const Partition& la, const Partition& mu) {
  if (la.sum() != mu.sum()) throw std::invalid_argument("dominance needs equal degree");
  int acc_la = 0, acc_mu = 0;
  int n = std::max(la.length(), mu.length());
  for (int i = 0; i < n; ++i) {
    acc_la += la.part(i);
    acc_mu += mu.part(i);
    if (acc_la < acc_mu) return false;
  }
  return true;
}

inline bool dominance_leq(const Partition& mu, const Partition& la) { return dominates(la, mu); }

/// Complement of la inside the n x m rectangle:
/// T_m(la) = (m - la_n, ..., m - la_1) on the n-padded parts.
inline Partition complement_partition(const Partition& la, int n, int m) {
  if (la.length() > n) throw std::invalid_argument("partition has more than n parts");
  if (la.part(0) > m) throw std::invalid_argument("partition does not fit the rectangle");
  std::vector<int> p = la.padded(n);
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = m - p[n - 1 - i];
  return Partition(std::move(c));
}

/// Row order used for decomposition-matrix labels: ascending lexicographic on
/// the reversed n-padded parts.  It refines reverse dominance, so the most
/// dominant label (r, 0, ..., 0) comes first.
inline bool label_less(const Partition& a, const Partition& b, int n) {
  std::vector<int> x = a.padded(n), y = b.padded(n);
  std::reverse(x.begin(), x.end());
  std::reverse(y.begin(), y.end());
  return x < y;
}

namespace detail {
inline void gen_partitions(int remaining, int max_part, int max_len, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(cur));
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}
} // namespace detail

/// All of Lambda+(n, r): partitions of r with at most n parts, in label order.
inline std::vector<Partition> partitions_all(int n, int r) {
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::gen_partitions(r, r, n, cur, out);
  std::sort(out.begin(), out.end(),
            [n](const Partition& a, const Partition& b) { return label_less(a, b, n); });
  return out;
}

/// P+(n, r)_m: partitions of r with at most m parts, each part at most n.
inline std::vector<Partition> partitions_in_box(int n, int r, int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::gen_partitions(r, n, m, cur, out);
  std::sort(out.begin(), out.end(),
            [m](const Partition& a, const Partition& b) { return label_less(a, b, m); });
  return out;
}

/// All length-n compositions of r (weights), lexicographically ascending.
inline std::vector<std::vector<int>> compositions(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (n > 0) rec(rec, 0, r);
  return out;
}

inline void require_same_degree(const std::vector<Partition>& set, int n) {
  if (set.empty()) return;
  int r = set[0].sum();
  for (auto& la : set) {
    if (la.sum() != r) throw std::invalid_argument("mixed degrees");
    if (la.length() > n) throw std::invalid_argument("partition has more than n parts");
  }
}

/// Downward closure of a set under dominance inside Lambda+(n, r).
inline std::vector<Partition> saturated_closure(const std::vector<Partition>& set, int n) {
  require_same_degree(set, n);
  if (set.empty()) return {};
  std::vector<Partition> out;
  for (auto& mu : partitions_all(n, set[0].sum())) {
    for (auto& la : set) {
      if (dominance_leq(mu, la)) {
        out.push_back(mu);
        break;
      }
    }
  }
  return out;
}

inline bool is_saturated(const std::vector<Partition>& set, int n) {
  std::vector<Partition> closure = saturated_closure(set, n);
  if (closure.size() != set.size()) return false;
  std::vector<Partition> sorted = set;
  auto cmp = [n](const Partition& a, const Partition& b) { return label_less(a, b, n); };
  std::sort(sorted.begin(), sorted.end(), cmp);
  return sorted == closure;
}

} // namespace schur
