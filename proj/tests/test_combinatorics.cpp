#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "schur/partitions.hpp"
#include "schur/tableaux.hpp"

using namespace schur;

namespace {

// Cycle-parity sign of the word (w, w-hat) relative to the decreasing word
// (n, ..., 1).  Independent of the inversion-counting implementation.
int sign_by_cycles(const MultiIndex& w, int n) {
  MultiIndex concat = w;
  MultiIndex hat = complement_multiindex(w, n);
  concat.insert(concat.end(), hat.begin(), hat.end());
  std::vector<int> sigma(n);
  for (int s = 0; s < n; ++s) sigma[s] = n - concat[s];
  std::vector<char> vis(n, 0);
  int cycles = 0;
  for (int s = 0; s < n; ++s) {
    if (vis[s]) continue;
    ++cycles;
    int t = s;
    while (!vis[t]) {
      vis[t] = 1;
      t = sigma[t];
    }
  }
  return (n - cycles) % 2 == 0 ? 1 : -1;
}

std::vector<Partition> parse_labels(const std::vector<std::vector<int>>& raw) {
  std::vector<Partition> out;
  for (auto& p : raw) out.push_back(Partition(p));
  return out;
}

} // namespace

TEST_CASE("partition normalization and accessors") {
  Partition la({4, 2, 1, 0, 0});
  REQUIRE(la.length() == 3);
  REQUIRE(la.sum() == 7);
  REQUIRE(la.part(0) == 4);
  REQUIRE(la.part(5) == 0);
  REQUIRE(la.padded(4) == std::vector<int>({4, 2, 1, 0}));
  REQUIRE(Partition({5}).to_string(3) == "(5, 0, 0)");
  REQUIRE(Partition{}.sum() == 0);

  REQUIRE_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  REQUIRE_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  REQUIRE_THROWS_AS(Partition({2, 1, 1}).padded(2), std::invalid_argument);
}

TEST_CASE("conjugate partition") {
  REQUIRE(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
  REQUIRE(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
  REQUIRE(conjugate(Partition{}) == Partition{});
  for (auto& la : partitions_all(3, 6)) REQUIRE(conjugate(conjugate(la)) == la);
}

TEST_CASE("dominance order") {
  REQUIRE(dominates(Partition({3, 1}), Partition({2, 2})));
  REQUIRE_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
  // Incomparable pair.
  REQUIRE_FALSE(dominates(Partition({4, 1, 1}), Partition({3, 3})));
  REQUIRE_FALSE(dominates(Partition({3, 3}), Partition({4, 1, 1})));
  REQUIRE(dominates(Partition({3, 1}), Partition({3, 1})));
  REQUIRE_THROWS_AS(dominates(Partition({3, 1}), Partition({2, 2, 1})), std::invalid_argument);
}

TEST_CASE("rectangle complement of partitions") {
  // Worked 4 x 5 example.
  REQUIRE(complement_partition(Partition({4, 2, 1}), 4, 5) == Partition({5, 4, 3, 1}));
  REQUIRE(complement_partition(Partition({4, 2, 1}), 4, 4) == Partition({4, 3, 2}));
  REQUIRE(complement_partition(Partition{}, 3, 2) == Partition({2, 2, 2}));

  REQUIRE_THROWS_AS(complement_partition(Partition({4, 2, 1}), 2, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(complement_partition(Partition({4, 2, 1}), 4, 3), std::invalid_argument);

  // Involution and order preservation over every shape in small boxes.
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      std::vector<Partition> box;
      for (int r = 0; r <= n * m; ++r)
        for (auto& la : partitions_all(n, r))
          if (la.part(0) <= m) box.push_back(la);
      for (auto& la : box) {
        Partition c = complement_partition(la, n, m);
        REQUIRE(c.sum() == n * m - la.sum());
        REQUIRE(complement_partition(c, n, m) == la);
      }
      for (auto& la : box)
        for (auto& mu : box) {
          if (la.sum() != mu.sum()) continue;
          REQUIRE(dominates(la, mu) ==
                  dominates(complement_partition(la, n, m), complement_partition(mu, n, m)));
        }
    }
}

TEST_CASE("label order lists partitions most dominant first") {
  std::vector<Partition> expected5 =
      parse_labels({{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}});
  REQUIRE(partitions_all(3, 5) == expected5);

  std::vector<Partition> expected10 = parse_labels({{10},
                                                    {9, 1},
                                                    {8, 2},
                                                    {7, 3},
                                                    {6, 4},
                                                    {5, 5},
                                                    {8, 1, 1},
                                                    {7, 2, 1},
                                                    {6, 3, 1},
                                                    {5, 4, 1},
                                                    {6, 2, 2},
                                                    {5, 3, 2},
                                                    {4, 4, 2},
                                                    {4, 3, 3}});
  REQUIRE(partitions_all(3, 10) == expected10);

  // The order refines dominance, which makes triangular solves well posed.
  for (auto& a : expected10)
    for (auto& b : expected10)
      if (a != b && dominates(a, b)) REQUIRE(label_less(a, b, 3));

  REQUIRE(partitions_all(1, 4) == parse_labels({{4}}));
  REQUIRE(partitions_all(3, 0).size() == 1);
  REQUIRE(partitions_all(3, 0)[0] == Partition{});
}

TEST_CASE("partitions in a box") {
  std::vector<Partition> box = partitions_in_box(3, 5, 5);
  REQUIRE(box == parse_labels({{3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}}));
  for (auto& la : box) {
    REQUIRE(la.part(0) <= 3);
    REQUIRE(la.length() <= 5);
  }
  REQUIRE(partitions_in_box(3, 5, 2).size() == 1); // only (3, 2) fits
}

TEST_CASE("compositions enumerate all weights") {
  auto comps = compositions(3, 5);
  REQUIRE(comps.size() == 21);
  REQUIRE(comps.front() == std::vector<int>({0, 0, 5}));
  REQUIRE(comps.back() == std::vector<int>({5, 0, 0}));
  REQUIRE(std::is_sorted(comps.begin(), comps.end()));
  for (auto& c : comps) REQUIRE(c[0] + c[1] + c[2] == 5);
}

TEST_CASE("saturated closure under dominance") {
  std::vector<Partition> closure = saturated_closure({Partition({3})}, 3);
  REQUIRE(closure == parse_labels({{3}, {2, 1}, {1, 1, 1}}));
  REQUIRE(is_saturated(closure, 3));
  REQUIRE_FALSE(is_saturated({Partition({2, 1})}, 3));

  // Hook-generated set in degree 5: labels below (3, 1, 1) are exactly the
  // partitions with a full first column.
  REQUIRE(saturated_closure({Partition({3, 1, 1})}, 3) ==
          parse_labels({{3, 1, 1}, {2, 2, 1}}));
  REQUIRE_THROWS_AS(saturated_closure({Partition({3}), Partition({2})}, 3),
                    std::invalid_argument);
}

TEST_CASE("strictly decreasing multi-indices") {
  auto i42 = decreasing_multiindices(4, 2);
  REQUIRE(i42.size() == 6);
  REQUIRE(i42 == std::vector<MultiIndex>(
                     {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}}));
  REQUIRE(decreasing_multiindices(3, 0) == std::vector<MultiIndex>({{}}));
  REQUIRE(decreasing_multiindices(2, 3).empty());

  // Binomial counts.
  for (int n = 1; n <= 6; ++n) {
    long long total = 0;
    for (int k = 0; k <= n; ++k) total += static_cast<long long>(decreasing_multiindices(n, k).size());
    REQUIRE(total == (1LL << n));
  }
}

TEST_CASE("multi-index complement and sign") {
  REQUIRE(complement_multiindex({3, 1}, 4) == MultiIndex({4, 2}));
  REQUIRE(complement_multiindex({}, 3) == MultiIndex({3, 2, 1}));
  REQUIRE_THROWS_AS(complement_multiindex({2, 2}, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(complement_multiindex({5}, 4), std::invalid_argument);

  // Hand values for n = 2: v_2 ^ v_1 is the reference orientation.
  REQUIRE(sgn_multiindex({2}, 2) == 1);
  REQUIRE(sgn_multiindex({1}, 2) == -1);
  REQUIRE(sgn_multiindex({2, 1}, 2) == 1);

  // The full decreasing word is the reference orientation for every n.
  for (int n = 1; n <= 6; ++n) {
    MultiIndex full(n);
    for (int i = 0; i < n; ++i) full[i] = n - i;
    REQUIRE(sgn_multiindex(full, n) == 1);
    REQUIRE(sgn_multiindex({}, n) == 1);
  }

  // Cross-check against cycle parity on everything up to n = 6.
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (auto& w : decreasing_multiindices(n, k))
        REQUIRE(sgn_multiindex(w, n) == sign_by_cycles(w, n));
}

TEST_CASE("tableau construction and rows") {
  Tableau s = tableau_from_rows({{4, 3, 3, 2}, {3, 2}, {1}});
  REQUIRE(s.shape == std::vector<int>({3, 2, 1, 1}));
  REQUIRE(s.cols[0] == MultiIndex({4, 3, 1}));
  REQUIRE(s.cols[1] == MultiIndex({3, 2}));
  REQUIRE(s.cols[2] == MultiIndex({3}));
  REQUIRE(s.cols[3] == MultiIndex({2}));
  REQUIRE(s.degree() == 7);
  REQUIRE(tableau_rows(s) ==
          std::vector<std::vector<int>>({{4, 3, 3, 2}, {3, 2}, {1}}));
  REQUIRE(render_tableau(s) == "4 3 3 2\n3 2\n1");
  REQUIRE(tableau_content(s, 4) == Weight({1, 2, 3, 1}));
  REQUIRE(has_strict_columns(s));
  REQUIRE(is_semistandard(s));

  REQUIRE_THROWS_AS(tableau_from_rows({{1, 2}, {3, 4, 5}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Tableau({2}, {{1}}), std::invalid_argument);
}

TEST_CASE("tableau complement matches the worked 4 x 5 example") {
  Tableau s = tableau_from_rows({{4, 3, 3, 2}, {3, 2}, {1}});
  Tableau expected = tableau_from_rows({{4, 4, 4, 4, 2}, {3, 3, 2, 1}, {2, 1, 1}, {1}});
  Tableau c = complement_tableau(s, 4, 5);
  REQUIRE(c == expected);

  // The complement diagram is the rectangle complement of the original.
  REQUIRE(Partition(c.shape) == conjugate(complement_partition(Partition({4, 2, 1}), 4, 5)));

  // Applying the complement twice returns the original, padded to m columns.
  Tableau back = complement_tableau(c, 4, 5);
  REQUIRE(back.shape == std::vector<int>({3, 2, 1, 1, 0}));
  for (int j = 0; j < 4; ++j) REQUIRE(back.cols[j] == s.cols[j]);
  REQUIRE(back.cols[4].empty());

  REQUIRE_THROWS_AS(complement_tableau(s, 4, 3), std::invalid_argument);
}

TEST_CASE("tableau complement content and semistandardness") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int r = 0; r <= n * m; ++r)
        for (auto& la : partitions_in_box(m, r, n)) {
          Partition alpha = conjugate(la);
          auto stab = enumerate_stab(alpha, n);
          std::set<Tableau> images;
          for (auto& t : stab) {
            Tableau c = complement_tableau(t, n, m);
            REQUIRE(is_semistandard(c));
            Weight w = tableau_content(t, n), wc = tableau_content(c, n);
            for (int x = 0; x < n; ++x) REQUIRE(wc[x] == m - w[x]);
            images.insert(c);
          }
          // Injective, hence a bijection onto the complementary shape.
          REQUIRE(images.size() == stab.size());
          Partition beta = conjugate(complement_partition(la, n, m));
          REQUIRE(images.size() == static_cast<size_t>(count_stab(beta, n)));
        }
}

TEST_CASE("column fillings of a shape") {
  auto basis = enumerate_tab_minus({2, 1}, 3);
  REQUIRE(basis.size() == 9);
  REQUIRE(basis.front().cols == std::vector<MultiIndex>({{2, 1}, {1}}));
  REQUIRE(basis.back().cols == std::vector<MultiIndex>({{3, 2}, {3}}));
  REQUIRE(std::is_sorted(basis.begin(), basis.end()));
  for (auto& t : basis) REQUIRE(has_strict_columns(t));

  // Full columns admit a single filling; overfull columns admit none.
  REQUIRE(enumerate_tab_minus({3, 3}, 3).size() == 1);
  REQUIRE(enumerate_tab_minus({4}, 3).empty());
  REQUIRE(enumerate_tab_minus({}, 3).size() == 1);
}

TEST_CASE("semistandard counts") {
  // Weakly decreasing words of length 5 over three letters.
  REQUIRE(count_stab(conjugate(Partition({5})), 3) == 21);
  long long words = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= a; ++b)
      for (int c = 1; c <= b; ++c)
        for (int d = 1; d <= c; ++d)
          for (int e = 1; e <= d; ++e) ++words;
  REQUIRE(words == 21);

  // Independent filter over all strict-column fillings.
  for (auto& la : partitions_all(3, 4)) {
    Partition alpha = conjugate(la);
    if (alpha.part(0) > 3) continue;
    long long brute = 0;
    for (auto& t : enumerate_tab_minus(alpha.parts(), 3))
      if (is_semistandard(t)) ++brute;
    REQUIRE(count_stab(alpha, 3) == brute);
  }
  REQUIRE(count_stab(Partition{}, 3) == 1);
}

TEST_CASE("kostka numbers") {
  REQUIRE(kostka(Partition({2, 1}), {1, 1, 1}, 3) == 2);
  REQUIRE(kostka(Partition({2, 1}), {2, 1, 0}, 3) == 1);
  REQUIRE(kostka(Partition({2, 1}), {0, 1, 2}, 3) == 1);
  REQUIRE(kostka(Partition({5}), {2, 2, 1}, 3) == 1);
  REQUIRE_THROWS_AS(kostka(Partition({2}), {1, 1, 0, 0}, 3), std::invalid_argument);

  // Brute-force oracle: filter strict-column fillings by row condition and
  // content.
  for (auto& la : partitions_all(3, 4)) {
    Partition alpha = conjugate(la);
    if (alpha.part(0) > 3) continue;
    for (auto& nu : compositions(3, 4)) {
      Weight target(3, 0);
      for (int i = 0; i < 3; ++i) target[3 - 1 - i] = nu[i];
      long long brute = 0;
      for (auto& t : enumerate_tab_minus(alpha.parts(), 3))
        if (is_semistandard(t) && tableau_content(t, 3) == target) ++brute;
      REQUIRE(kostka(la, nu, 3) == brute);
    }
  }

  for (auto& la : partitions_all(3, 5)) {
    // The dominant weight space is one dimensional.
    REQUIRE(kostka(la, la.padded(3), 3) == 1);
    // Contents of semistandard tableaux sweep out all weights with
    // multiplicity summing to the full count.
    long long sum = 0;
    for (auto& nu : compositions(3, 5)) sum += kostka(la, nu, 3);
    REQUIRE(sum == count_stab(conjugate(la), 3));
  }
}

TEST_CASE("highest weight filling") {
  Tableau h = highest_weight_tableau(Partition({4, 2, 1}));
  REQUIRE(h.shape == std::vector<int>({3, 2, 1, 1}));
  REQUIRE(h.cols[0] == MultiIndex({3, 2, 1}));
  REQUIRE(h.cols[1] == MultiIndex({2, 1}));
  REQUIRE(h.cols[2] == MultiIndex({1}));
  REQUIRE(h.cols[3] == MultiIndex({1}));
  REQUIRE(is_semistandard(h));
  REQUIRE(tableau_content(h, 4) == Weight({4, 2, 1, 0}));

  for (auto& la : partitions_all(3, 6)) {
    Tableau t = highest_weight_tableau(la);
    REQUIRE(tableau_content(t, 3) == Weight(la.padded(3)));
    REQUIRE(is_semistandard(t));
  }
}

TEST_CASE("twist statistic") {
  // Full rectangles have no missing letters, so the statistic vanishes.
  Tableau rect = tableau_from_rows({{2, 2, 2}, {1, 1, 1}});
  REQUIRE(epsilon_stat(rect, 2, 3) == 0);

  // Single-column tableaux are never twisted.
  Tableau col = tableau_from_rows({{3}, {2}});
  REQUIRE(epsilon_stat(col, 3, 1) == 0);

  // n = 2, m = 2: the only contribution is the missing letter of column one.
  Tableau single = tableau_from_rows({{2}});
  REQUIRE(epsilon_stat(single, 2, 2) == 1);
  Tableau two = tableau_from_rows({{2, 1}});
  REQUIRE(epsilon_stat(two, 2, 2) == 1);

  // Worked 4 x 5 example: contributions 4*2 + 3*5 + 2*7 + 1*8.
  Tableau s = tableau_from_rows({{4, 3, 3, 2}, {3, 2}, {1}});
  REQUIRE(epsilon_stat(s, 4, 5) == 45);

  REQUIRE_THROWS_AS(epsilon_stat(s, 4, 3), std::invalid_argument);
}

TEST_CASE("rectangle complement of label sets") {
  // Images of the degree-5 labels inside the 3 x 5 rectangle, in order.
  std::vector<Partition> src = partitions_all(3, 5);
  std::vector<Partition> expected =
      parse_labels({{5, 5}, {5, 4, 1}, {5, 3, 2}, {4, 4, 2}, {4, 3, 3}});
  for (size_t i = 0; i < src.size(); ++i)
    REQUIRE(complement_partition(src[i], 3, 5) == expected[i]);

  // The image order agrees with the label order in degree 10.
  for (size_t i = 0; i + 1 < expected.size(); ++i)
    REQUIRE(label_less(expected[i], expected[i + 1], 3));
}
