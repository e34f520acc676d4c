#pragma once

#include <algorithm>
#include <random>
#include <set>

#include "schur/compare.hpp"
#include "schur/rational.hpp"

namespace schur {

/// Every shape in the n x m box, all degrees, in degree-major label order.
inline std::vector<Partition> box_shapes(int n, int m) {
  std::vector<Partition> out;
  for (int r = 0; r <= n * m; ++r)
    for (const Partition& al : partitions_in_box(n, r, m)) out.push_back(al);
  return out;
}

inline Tableau strip_empty_columns(const Tableau& t) {
  std::vector<int> shape = t.shape;
  std::vector<MultiIndex> cols = t.cols;
  while (!shape.empty() && shape.back() == 0) {
    shape.pop_back();
    cols.pop_back();
  }
  return Tableau(std::move(shape), std::move(cols));
}

/// The box complement restricts to a bijection on semistandard fillings:
/// counts of STab agree for mirrored shapes and every complement is again
/// semistandard.  Exhaustive over shapes in the n x m box up to degree rmax.
inline Report tableau_mirror_check(int n, int m, int rmax) {
  Report rep;
  rep.check = "tableau-mirror";
  rep.parameters = {{"n", n}, {"m", m}, {"rmax", rmax}};
  for (int r = 0; r <= std::min(rmax, n * m); ++r)
    for (const Partition& alpha : partitions_in_box(n, r, m)) {
      Partition chat(complement_shape(alpha.padded(m), n));
      std::vector<Tableau> stab = enumerate_stab(alpha, n);
      std::vector<Tableau> cstab = enumerate_stab(chat, n);
      ++rep.cells_tested;
      if (stab.size() != cstab.size()) {
        rep.mismatches.push_back("|STab" + alpha.to_string() + "| = " +
                                 std::to_string(stab.size()) + " but |STab" + chat.to_string() +
                                 "| = " + std::to_string(cstab.size()));
        continue;
      }
      std::sort(cstab.begin(), cstab.end());
      std::set<Tableau> images;
      for (const Tableau& s : stab) {
        ++rep.cells_tested;
        Tableau hat = strip_empty_columns(complement_tableau(s, n, m));
        if (!is_semistandard(hat) ||
            !std::binary_search(cstab.begin(), cstab.end(), hat) ||
            !images.insert(hat).second)
          rep.mismatches.push_back("complement of a semistandard " + alpha.to_string() +
                                   "-filling is not a fresh semistandard " + chat.to_string() +
                                   "-filling");
      }
    }
  return rep;
}

namespace detail {

template <class Field, class Sampler>
Report gram_check_over(int n, int m, long long samples, std::uint64_t seed, const Field& field,
                       Sampler sample, Report rep) {
  using K = decltype(field.zero());
  std::mt19937_64 rng(seed);
  for (const Partition& alpha : box_shapes(n, m))
    for (long long s = 0; s < samples; ++s) {
      Matrix<K> g(n, n, field.zero());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = sample(rng);
      ++rep.cells_tested;
      if (!verify_gram_identity(alpha, n, m, g, field))
        rep.mismatches.push_back("identity fails for shape " + alpha.to_string() +
                                 " at sample " + std::to_string(s));
    }
  return rep;
}

}  // namespace detail

/// Seeded sweep of the structure-matrix identity over every shape in the
/// n x m box; p = 0 runs over the rationals with small integer entries.
inline Report gram_check(int n, int m, std::uint32_t p, long long samples, std::uint64_t seed) {
  Report rep;
  rep.check = "gram";
  rep.parameters = {{"n", n},
                    {"m", m},
                    {"p", p},
                    {"samples", samples},
                    {"seed", static_cast<long long>(seed)}};
  if (p == 0) {
    RatField field;
    auto sample = [](std::mt19937_64& rng) { return Rat(static_cast<long long>(rng() % 9) - 4); };
    return detail::gram_check_over(n, m, samples, seed, field, sample, std::move(rep));
  }
  GfField field(p);
  auto sample = [&field, p](std::mt19937_64& rng) {
    return field.from_int(static_cast<long long>(rng() % p));
  };
  return detail::gram_check_over(n, m, samples, seed, field, sample, std::move(rep));
}

namespace detail {

template <class Field>
Report hom_transport_over(int n, int r, int m, const Field& field, Report rep) {
  using K = decltype(field.zero());
  std::vector<Partition> box = partitions_in_box(n, r, m);
  for (const Partition& alpha : box)
    for (const Partition& beta : box) {
      ModuleRep<K> sa = wedge_rep<K>(wedge_shape(n, alpha.padded(m)), field);
      ModuleRep<K> sb = wedge_rep<K>(wedge_shape(n, beta.padded(m)), field);
      ModuleRep<K> ca = wedge_rep<K>(wedge_shape(n, complement_shape(alpha.padded(m), n)), field);
      ModuleRep<K> cb = wedge_rep<K>(wedge_shape(n, complement_shape(beta.padded(m), n)), field);
      std::vector<Matrix<K>> basis = hom_space(sa, sb, field.zero(), field.one());
      std::vector<Matrix<K>> cbasis = hom_space(ca, cb, field.zero(), field.one());
      ++rep.cells_tested;
      std::string pair = alpha.to_string() + " -> " + beta.to_string();
      if (basis.size() != cbasis.size()) {
        rep.mismatches.push_back("hom dimension differs across the mirror for " + pair);
        continue;
      }
      for (const Matrix<K>& phi : basis) {
        ++rep.cells_tested;
        try {
          conjugate_hom(phi, alpha, beta, n, m, field);
        } catch (const std::exception& e) {
          rep.mismatches.push_back("transport fails for " + pair + ": " + e.what());
        }
      }
    }
  return rep;
}

}  // namespace detail

/// Hom-space dimensions match across the mirror for every shape pair in
/// P+(n,r)_m, and each basis intertwiner transports back into the commutant.
inline Report hom_transport_check(int n, int r, int m, std::uint32_t p) {
  Report rep;
  rep.check = "hom-iso";
  rep.parameters = {{"n", n}, {"r", r}, {"m", m}, {"p", p}};
  if (p == 0) return detail::hom_transport_over(n, r, m, RatField(), std::move(rep));
  return detail::hom_transport_over(n, r, m, GfField(p), std::move(rep));
}

/// Endomorphism algebra transport for the full box in one degree.
inline Report endo_check(int n, int r, int m, std::uint32_t p) {
  Report rep;
  rep.check = "endo";
  rep.parameters = {{"n", n}, {"r", r}, {"m", m}, {"p", p}};
  std::vector<Partition> box = partitions_in_box(n, r, m);
  if (box.empty()) throw std::invalid_argument("no shapes fit the box");
  ++rep.cells_tested;
  bool ok = p == 0 ? verify_endo_iso(box, n, m, RatField())
                   : verify_endo_iso(box, n, m, GfField(p));
  if (!ok)
    rep.mismatches.push_back("endomorphism algebras differ across the mirror in degree " +
                             std::to_string(r));
  return rep;
}

/// Multiplicities of Young modules in permutation modules match across the
/// mirror: dim L(mu)_lambda in degree r against the complemented labels in
/// degree n*m - r.
inline Report pkostka_mirror_check(int n, int r, int m, std::uint32_t p) {
  if (n * m < r) throw std::invalid_argument("box too small for the degree");
  Report rep;
  rep.check = "pkostka";
  rep.parameters = {{"n", n}, {"r", r}, {"m", m}, {"p", p}};
  // Labels live in the row convention of complement_partition: at most n
  // parts, each at most m.
  for (const Partition& la : partitions_in_box(m, r, n)) {
    Partition cla = complement_partition(la, n, m);
    for (const Partition& mu : partitions_in_box(m, r, n)) {
      Partition cmu = complement_partition(mu, n, m);
      ++rep.cells_tested;
      long long lhs = p_kostka(p, n, la, mu);
      long long rhs = p_kostka(p, n, cla, cmu);
      if (lhs != rhs)
        rep.mismatches.push_back("(M^" + la.to_string(n) + " : Y^" + mu.to_string(n) + ") = " +
                                 std::to_string(lhs) + " but the mirrored multiplicity is " +
                                 std::to_string(rhs));
    }
  }
  return rep;
}

/// Degree-shift chain as a report: the two-step complement from degree
/// r + n must remove the first column and land on the full degree-r label
/// set; any violated invariant is reported instead of thrown.
inline Report blm_check(int n, int r) {
  Report rep;
  rep.check = "blm";
  rep.parameters = {{"n", n}, {"r", r}};
  try {
    BlmChain ch = blm_chain(n, r);
    rep.cells_tested = static_cast<long long>(ch.pi.size());
  } catch (const std::exception& e) {
    rep.mismatches.push_back(e.what());
  }
  return rep;
}

}  // namespace schur
