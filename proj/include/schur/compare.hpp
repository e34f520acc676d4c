#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "schur/laurent.hpp"
#include "schur/matrix.hpp"
#include "schur/partitions.hpp"
#include "schur/tableaux.hpp"
#include "schur/wedge.hpp"
#include "schur/weyl.hpp"

namespace schur {

/// Column lengths of the mirrored shape: column j has length n - alpha_{m+1-j}.
inline std::vector<int> complement_shape(const std::vector<int>& shape, int n) {
  std::vector<int> out(shape.rbegin(), shape.rend());
  for (int& a : out) {
    if (a < 0 || a > n) throw std::invalid_argument("column length outside [0, n]");
    a = n - a;
  }
  return out;
}

/// The mirror isomorphism between a wedge module and its complement, stored
/// symbolically: basis vector S maps to sgn(S) q^{-eps(S)} times the basis
/// vector of the complement tableau.  Exactly one entry per row and per
/// column, so every evaluation at q0 != 0 is invertible.
struct ThetaMap {
  int n = 0;
  int m = 0;
  std::vector<int> source_shape;
  std::vector<int> target_shape;
  std::vector<int> target_of;    // source index -> complement index (a bijection)
  std::vector<int> sign;         // sgn(S)
  std::vector<long long> eps;    // eps(S)

  int dim() const { return static_cast<int>(target_of.size()); }

  Laurent entry(int src) const { return Laurent::monomial(sign[src], -static_cast<int>(eps[src])); }

  /// Matrix of the map in the column convention, evaluated at q0.
  template <class K, class Field>
  Matrix<K> matrix(const Field& field, const K& q0) const {
    Matrix<K> out(dim(), dim(), field.zero());
    for (int s = 0; s < dim(); ++s) out.at(target_of[s], s) = entry(s).eval(q0);
    return out;
  }

  /// Matrix of the inverse map; monomial entries invert termwise.
  template <class K, class Field>
  Matrix<K> inverse_matrix(const Field& field, const K& q0) const {
    Matrix<K> out(dim(), dim(), field.zero());
    for (int s = 0; s < dim(); ++s)
      out.at(s, target_of[s]) = Laurent::monomial(sign[s], static_cast<int>(eps[s])).eval(q0);
    return out;
  }
};

inline ThetaMap theta_matrix(const Partition& alpha, int n, int m) {
  std::vector<int> shape = alpha.padded(m);
  for (int a : shape)
    if (a > n) throw std::invalid_argument("part exceeds n");
  const WedgeShape& src = wedge_shape(n, shape);
  const WedgeShape& tgt = wedge_shape(n, complement_shape(shape, n));
  ThetaMap th;
  th.n = n;
  th.m = m;
  th.source_shape = src.shape();
  th.target_shape = tgt.shape();
  for (int s = 0; s < src.dim(); ++s) {
    Tableau t = src.tableau_at(s);
    th.target_of.push_back(tgt.index_of(complement_tableau(t, n, m)));
    th.sign.push_back(sgn_tableau(t, n));
    th.eps.push_back(epsilon_stat(t, n, m));
  }
  return th;
}

/// Transport of an intertwiner to the complementary degree:
/// psi = theta_beta . phi . theta_alpha^{-1}, evaluated at q = 1.  Throws if
/// phi fails the commutant equations; the transported matrix is re-checked
/// against the commutant in degree n*m - r before being returned.
template <class K, class Field>
Matrix<K> conjugate_hom(const Matrix<K>& phi, const Partition& alpha, const Partition& beta,
                        int n, int m, const Field& field) {
  std::vector<int> sa = alpha.padded(m);
  std::vector<int> sb = beta.padded(m);
  const WedgeShape& wa = wedge_shape(n, sa);
  const WedgeShape& wb = wedge_shape(n, sb);
  if (wa.degree() != wb.degree()) throw std::invalid_argument("mixed degrees");
  if (phi.rows() != wb.dim() || phi.cols() != wa.dim())
    throw std::invalid_argument("dimension mismatch");
  ModuleRep<K> ra = wedge_rep<K>(wa, field);
  ModuleRep<K> rb = wedge_rep<K>(wb, field);
  if (!intertwines(phi, ra, rb, field.zero()))
    throw std::invalid_argument("matrix is not an intertwiner");

  K one = field.one();
  Matrix<K> ta = theta_matrix(alpha, n, m).template inverse_matrix<K>(field, one);
  Matrix<K> tb = theta_matrix(beta, n, m).template matrix<K>(field, one);
  Matrix<K> psi = tb * phi * ta;

  const WedgeShape& ca = wedge_shape(n, complement_shape(sa, n));
  const WedgeShape& cb = wedge_shape(n, complement_shape(sb, n));
  ModuleRep<K> qa = wedge_rep<K>(ca, field);
  ModuleRep<K> qb = wedge_rep<K>(cb, field);
  if (!intertwines(psi, qa, qb, field.zero()))
    throw std::runtime_error("transported matrix fails the commutant check");
  return psi;
}

/// Matrix of the pairing wedge^alpha x wedge^(n-alpha) -> (top wedge)^m in
/// the tableau bases: entry (S, T) is sgn(S) q^{-eps(S)} when T is the
/// complement of S and zero otherwise.  Monomial of full rank |Tab-(alpha)|.
template <class K, class Field>
Matrix<K> phi_pairing_matrix(const Partition& alpha, int n, int m, const Field& field,
                             const K& q0) {
  ThetaMap th = theta_matrix(alpha, n, m);
  Matrix<K> out(th.dim(), th.dim(), field.zero());
  for (int s = 0; s < th.dim(); ++s) out.at(s, th.target_of[s]) = th.entry(s).eval(q0);
  return out;
}

/// The pairing, flattened to a map out of the tensor product along the
/// mixed-radix index (S, T) -> S * dim + T, so it can be checked against the
/// commutant equations for the concatenated shape.
template <class K, class Field>
bool phi_pairing_intertwines(const Partition& alpha, int n, int m, const Field& field) {
  std::vector<int> sa = alpha.padded(m);
  std::vector<int> shape = sa;
  std::vector<int> comp = complement_shape(sa, n);
  shape.insert(shape.end(), comp.begin(), comp.end());
  const WedgeShape& wt = wedge_shape(n, shape);
  const WedgeShape& wd = wedge_shape(n, std::vector<int>(m, n));
  Matrix<K> pair = phi_pairing_matrix(alpha, n, m, field, field.one());
  int d = pair.rows();
  Matrix<K> flat(1, wt.dim(), field.zero());
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t) flat.at(0, s * d + t) = pair.at(s, t);
  ModuleRep<K> rt = wedge_rep<K>(wt, field);
  ModuleRep<K> rd = wedge_rep<K>(wd, field);
  return intertwines(flat, rt, rd, field.zero());
}

/// Laurent weights of the distinguished vector: every strictly decreasing
/// word i of length r gets q^{-|i|}.  Defined only for r <= n.
inline std::map<MultiIndex, Laurent> mu_coefficients(int r, int n) {
  if (r > n) throw std::invalid_argument("degree exceeds n");
  std::map<MultiIndex, Laurent> out;
  for (const MultiIndex& w : decreasing_multiindices(n, r))
    out[w] = Laurent::q(-static_cast<int>(multiindex_weight(w)));
  return out;
}

/// Structure-matrix identity A(g) . sgn . Ahat(g)^T . sgn = det(g)^m . I,
/// where Ahat is the structure matrix of the complement shape reindexed by
/// complement tableaux and sgn is the diagonal of tableau signs.  Holds for
/// every g, including singular ones.
template <class K, class Field>
bool verify_gram_identity(const Partition& alpha, int n, int m, const Matrix<K>& g,
                          const Field& field) {
  std::vector<int> sa = alpha.padded(m);
  const WedgeShape& wa = wedge_shape(n, sa);
  const WedgeShape& wc = wedge_shape(n, complement_shape(sa, n));
  Matrix<K> a = structure_matrix(wa, g, field.zero(), field.one());
  Matrix<K> b = structure_matrix(wc, g, field.zero(), field.one());
  ThetaMap th = theta_matrix(alpha, n, m);
  int d = wa.dim();

  // lhs = a . sgn . ahat^T . sgn with ahat(s, t) = b(comp(s), comp(t)); the
  // diagonal sign factors are folded into the operands to keep one product.
  Matrix<K> left = a;
  Matrix<K> right(d, d, field.zero());
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t) {
      if (th.sign[t] < 0) left.at(s, t) = -left.at(s, t);
      right.at(s, t) = b.at(th.target_of[t], th.target_of[s]);
      if (th.sign[t] < 0) right.at(s, t) = -right.at(s, t);
    }
  Matrix<K> lhs = left * right;
  Matrix<K> rhs = Matrix<K>::identity(d, field.one()) * g.det().pow(m);
  return lhs == rhs;
}

/// Block-diagonal sum of modules sharing one generator family.
template <class K>
ModuleRep<K> direct_sum(const std::vector<ModuleRep<K>>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  size_t ngens = parts[0].gens.size();
  ModuleRep<K> out;
  for (const auto& p : parts) {
    if (p.gens.size() != ngens) throw std::invalid_argument("generator families differ");
    out.dim += p.dim;
  }
  for (size_t g = 0; g < ngens; ++g) {
    SparseMat<K> m(out.dim, out.dim);
    int off = 0;
    for (const auto& p : parts) {
      for (int i = 0; i < p.dim; ++i)
        for (const auto& [j, v] : p.gens[g].row(i)) m.add(off + i, off + j, v);
      off += p.dim;
    }
    m.compress();
    out.gens.push_back(std::move(m));
  }
  return out;
}

namespace detail {

template <class K>
std::vector<K> flatten(const Matrix<K>& m) {
  std::vector<K> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

template <class K>
int span_rank(const std::vector<std::vector<K>>& rows, const K& zero) {
  if (rows.empty()) return 0;
  Matrix<K> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), zero);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m.rank();
}

}  // namespace detail

/// Verifies that conjugation by the block-diagonal mirror map is an algebra
/// isomorphism between the endomorphism algebras of the two direct sums
/// sum_{alpha in xs} wedge^alpha in degrees r and n*m - r: equal dimensions,
/// every transported basis element back in the complement commutant with the
/// same span, and transport compatible with composition.
template <class Field>
bool verify_endo_iso(const std::vector<Partition>& xs, int n, int m, const Field& field) {
  using K = decltype(field.zero());
  if (xs.empty()) throw std::invalid_argument("empty index set");
  int r = xs[0].sum();
  std::vector<ModuleRep<K>> parts, cparts;
  std::vector<Matrix<K>> thetas, ithetas;
  K one = field.one();
  for (const Partition& al : xs) {
    if (al.sum() != r) throw std::invalid_argument("mixed degrees");
    std::vector<int> shape = al.padded(m);
    parts.push_back(wedge_rep<K>(wedge_shape(n, shape), field));
    cparts.push_back(wedge_rep<K>(wedge_shape(n, complement_shape(shape, n)), field));
    ThetaMap th = theta_matrix(al, n, m);
    thetas.push_back(th.matrix<K>(field, one));
    ithetas.push_back(th.inverse_matrix<K>(field, one));
  }
  ModuleRep<K> sum_r = direct_sum(parts);
  ModuleRep<K> sum_c = direct_sum(cparts);
  std::vector<Matrix<K>> basis_r = hom_space(sum_r, sum_r, field.zero(), one);
  std::vector<Matrix<K>> basis_c = hom_space(sum_c, sum_c, field.zero(), one);
  if (basis_r.size() != basis_c.size()) return false;

  Matrix<K> th(sum_r.dim, sum_r.dim, field.zero());
  Matrix<K> thinv(sum_r.dim, sum_r.dim, field.zero());
  int off = 0;
  for (size_t k = 0; k < xs.size(); ++k) {
    int d = parts[k].dim;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        th.at(off + i, off + j) = thetas[k].at(i, j);
        thinv.at(off + i, off + j) = ithetas[k].at(i, j);
      }
    off += d;
  }

  std::vector<std::vector<K>> transported, target;
  std::vector<Matrix<K>> psi;
  for (const Matrix<K>& phi : basis_r) {
    Matrix<K> im = th * phi * thinv;
    if (!intertwines(im, sum_c, sum_c, field.zero())) return false;
    transported.push_back(detail::flatten(im));
    psi.push_back(std::move(im));
  }
  for (const Matrix<K>& phi : basis_c) target.push_back(detail::flatten(phi));

  int k = static_cast<int>(basis_r.size());
  if (detail::span_rank(transported, field.zero()) != k) return false;
  std::vector<std::vector<K>> joint = transported;
  joint.insert(joint.end(), target.begin(), target.end());
  if (detail::span_rank(joint, field.zero()) != k) return false;

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Matrix<K> prod = th * (basis_r[a] * basis_r[b]) * thinv;
      if (prod != psi[a] * psi[b]) return false;
    }
  return true;
}

/// Outcome of one exhaustive cell-by-cell comparison.
struct Report {
  std::string check;
  std::map<std::string, long long> parameters;
  long long cells_tested = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares decomposition numbers in degrees r and n*m - r under the box
/// complement: [Delta(la) : L(mu)] must equal the entry at the complemented
/// labels whenever both labels fit in the n x m box.
inline Report complement_decomposition_check(int n, int r, int m, std::uint32_t p) {
  if (n * m < r) throw std::invalid_argument("box too small for the degree");
  Report rep;
  rep.check = "complement";
  rep.parameters = {{"n", n}, {"r", r}, {"m", m}, {"p", p}};
  const DecompositionTable& d1 = decomposition_matrix(p, n, r);
  const DecompositionTable& d2 = decomposition_matrix(p, n, n * m - r);
  for (const Partition& la : d1.labels) {
    if (la.part(0) > m) continue;
    Partition cla = complement_partition(la, n, m);
    for (const Partition& mu : d1.labels) {
      if (mu.part(0) > m) continue;
      Partition cmu = complement_partition(mu, n, m);
      ++rep.cells_tested;
      long long lhs = d1.at(la, mu);
      long long rhs = d2.at(cla, cmu);
      if (lhs != rhs)
        rep.mismatches.push_back("[" + la.to_string(n) + " : " + mu.to_string(n) + "] = " +
                                 std::to_string(lhs) + " but [" + cla.to_string(n) + " : " +
                                 cmu.to_string(n) + "] = " + std::to_string(rhs));
    }
  }
  return rep;
}

/// A saturated label set together with its complement image, kept aligned
/// index by index.  The image is verified to be saturated and the bijection
/// to preserve dominance in both directions.
struct TruncationIndex {
  int n = 0;
  int m = 0;
  std::vector<Partition> pi;
  std::vector<Partition> pi_hat;
};

inline TruncationIndex truncation_index(const std::vector<Partition>& pi, int n, int m) {
  if (pi.empty()) throw std::invalid_argument("empty index set");
  if (!is_saturated(pi, n)) throw std::invalid_argument("index set is not saturated");
  TruncationIndex t;
  t.n = n;
  t.m = m;
  t.pi = pi;
  for (const Partition& la : pi) t.pi_hat.push_back(complement_partition(la, n, m));
  if (!is_saturated(t.pi_hat, n)) throw std::runtime_error("complement image is not saturated");
  for (size_t a = 0; a < t.pi.size(); ++a)
    for (size_t b = 0; b < t.pi.size(); ++b)
      if (dominates(t.pi[a], t.pi[b]) != dominates(t.pi_hat[a], t.pi_hat[b]))
        throw std::runtime_error("complement does not preserve dominance");
  return t;
}

/// Two-step complement chain from degree r + n down to degree r: start from
/// the full-first-column labels, complement in an (r+1)-wide box, then in an
/// r-wide box.  The composite removes the first column and lands on all of
/// the degree-r labels.
struct BlmChain {
  int n = 0;
  int r = 0;
  std::vector<Partition> pi;
  TruncationIndex step1;
  TruncationIndex step2;
  std::vector<Partition> final_set;
};

inline BlmChain blm_chain(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("bad parameters");
  std::vector<int> hook(static_cast<size_t>(n), 1);
  hook[0] = r + 1;
  BlmChain ch;
  ch.n = n;
  ch.r = r;
  ch.pi = saturated_closure({Partition(hook)}, n);
  ch.step1 = truncation_index(ch.pi, n, r + 1);
  ch.step2 = truncation_index(ch.step1.pi_hat, n, r);
  ch.final_set = ch.step2.pi_hat;

  for (size_t k = 0; k < ch.pi.size(); ++k) {
    std::vector<int> stripped;
    for (int i = 0; i < ch.pi[k].length(); ++i)
      if (ch.pi[k].part(i) > 1) stripped.push_back(ch.pi[k].part(i) - 1);
    if (ch.final_set[k] != Partition(stripped))
      throw std::runtime_error("composite complement does not remove the first column");
  }

  std::vector<Partition> got = ch.final_set;
  std::vector<Partition> want = partitions_all(n, r);
  auto by_label = [n](const Partition& a, const Partition& b) { return label_less(a, b, n); };
  std::sort(got.begin(), got.end(), by_label);
  std::sort(want.begin(), want.end(), by_label);
  if (got != want) throw std::runtime_error("chain does not land on the full label set");
  return ch;
}

/// First-row removal: when la and mu share their first part, the
/// decomposition number equals the one for the truncated labels in the
/// smaller degree.
inline Report row_removal_check(int n, int r, std::uint32_t p) {
  Report rep;
  rep.check = "row-removal";
  rep.parameters = {{"n", n}, {"r", r}, {"p", p}};
  const DecompositionTable& d = decomposition_matrix(p, n, r);
  for (const Partition& la : d.labels)
    for (const Partition& mu : d.labels) {
      if (la.part(0) != mu.part(0)) continue;
      int head = la.part(0);
      std::vector<int> la2(la.parts().begin() + (la.length() > 0 ? 1 : 0), la.parts().end());
      std::vector<int> mu2(mu.parts().begin() + (mu.length() > 0 ? 1 : 0), mu.parts().end());
      const DecompositionTable& dd = decomposition_matrix(p, n, r - head);
      ++rep.cells_tested;
      long long lhs = d.at(la, mu);
      long long rhs = dd.at(Partition(la2), Partition(mu2));
      if (lhs != rhs)
        rep.mismatches.push_back("[" + la.to_string(n) + " : " + mu.to_string(n) + "] = " +
                                 std::to_string(lhs) + " but the row-removed entry is " +
                                 std::to_string(rhs));
    }
  return rep;
}

/// First-column removal: when la and mu both have n non-zero parts, the
/// decomposition number equals the one for la - (1^n), mu - (1^n) in degree
/// r - n.
inline Report column_removal_check(int n, int r, std::uint32_t p) {
  Report rep;
  rep.check = "column-removal";
  rep.parameters = {{"n", n}, {"r", r}, {"p", p}};
  const DecompositionTable& d = decomposition_matrix(p, n, r);
  for (const Partition& la : d.labels)
    for (const Partition& mu : d.labels) {
      if (la.length() < n || mu.length() < n) continue;
      std::vector<int> la2, mu2;
      for (int i = 0; i < n; ++i) {
        la2.push_back(la.part(i) - 1);
        mu2.push_back(mu.part(i) - 1);
      }
      const DecompositionTable& dd = decomposition_matrix(p, n, r - n);
      ++rep.cells_tested;
      long long lhs = d.at(la, mu);
      long long rhs = dd.at(Partition(la2), Partition(mu2));
      if (lhs != rhs)
        rep.mismatches.push_back("[" + la.to_string(n) + " : " + mu.to_string(n) + "] = " +
                                 std::to_string(lhs) + " but the column-removed entry is " +
                                 std::to_string(rhs));
    }
  return rep;
}

}  // namespace schur
