#include <catch2/catch_amalgamated.hpp>

#include "schur/rational.hpp"
#include "schur/weyl.hpp"

using namespace schur;

namespace {

DecompositionTable table_from(std::uint32_t p, int n, int r,
                              const std::vector<std::vector<long long>>& rows) {
  DecompositionTable t;
  t.p = p;
  t.n = n;
  t.r = r;
  t.labels = partitions_all(n, r);
  t.entries = rows;
  return t;
}

} // namespace

TEST_CASE("weyl module dimensions in degree five") {
  GfField f2(2);
  std::map<std::vector<int>, int> expected = {
      {{5}, 21}, {{4, 1}, 24}, {{3, 2}, 15}, {{3, 1, 1}, 6}, {{2, 2, 1}, 3}};
  for (auto& [parts, dim] : expected) {
    WeylModule<Gf, GfField> w(f2, 3, Partition(parts));
    REQUIRE(w.dim() == dim);
    REQUIRE(w.dim() == count_stab(conjugate(Partition(parts)), 3));
  }
  REQUIRE_THROWS_AS((WeylModule<Gf, GfField>(f2, 2, Partition({1, 1, 1}))),
                    std::invalid_argument);
}

TEST_CASE("weyl characters match kostka numbers") {
  GfField f3(3);
  for (auto& la : partitions_all(3, 5)) {
    WeylModule<Gf, GfField> w(f3, 3, la);
    long long total = 0;
    for (auto& nu : compositions(3, 5)) {
      long long wd = w.weight_dim(nu);
      REQUIRE(wd == kostka(la, nu, 3));
      total += wd;
    }
    REQUIRE(total == w.dim());
    // The dominant weight space is a line spanned by the generator.
    REQUIRE(w.weight_dim(la.padded(3)) == 1);
    REQUIRE(w.simple_weight_dim(la.padded(3)) == 1);
  }
}

TEST_CASE("contravariant form is nondegenerate in characteristic zero") {
  RatField fq;
  for (auto& la : partitions_all(3, 4)) {
    WeylModule<Rat, RatField> w(fq, 3, la);
    for (auto& nu : partitions_all(3, 4))
      REQUIRE(w.simple_weight_dim(nu.padded(3)) == w.weight_dim(nu.padded(3)));
  }
}

TEST_CASE("gram blocks are symmetric with unit highest entry") {
  GfField f2(2);
  WeylModule<Gf, GfField> w(f2, 3, Partition({2}));
  // Weight (1,1,0) holds the single vector v12 + v21 of self-pairing two.
  Matrix<Gf> g = w.gram_block({1, 1, 0});
  REQUIRE(g.rows() == 1);
  REQUIRE(g.at(0, 0).is_zero());
  Matrix<Gf> top = w.gram_block({2, 0, 0});
  REQUIRE(top.rows() == 1);
  REQUIRE(top.at(0, 0) == f2.one());
  REQUIRE(w.gram_block({7, 7, 7}).rows() == 0);
}

TEST_CASE("simple characters in characteristic two") {
  GfField f2(2);
  auto ch2 = simple_character<Gf>(f2, 3, Partition({2}));
  REQUIRE(ch2.size() == 1);
  REQUIRE(ch2.at(Partition({2})) == 1);

  // L((3)) drops the (1,1,1) weight but keeps (2,1).
  auto ch3 = simple_character<Gf>(f2, 3, Partition({3}));
  REQUIRE(ch3.size() == 2);
  REQUIRE(ch3.at(Partition({3})) == 1);
  REQUIRE(ch3.at(Partition({2, 1})) == 1);
  REQUIRE(ch3.count(Partition({1, 1, 1})) == 0);
}

TEST_CASE("decomposition matrices in low degree") {
  auto& d2 = decomposition_matrix(2, 3, 2);
  REQUIRE(d2.entries == std::vector<std::vector<long long>>({{1, 1}, {0, 1}}));

  auto& d3 = decomposition_matrix(2, 3, 3);
  REQUIRE(d3.labels == std::vector<Partition>({Partition({3}), Partition({2, 1}),
                                               Partition({1, 1, 1})}));
  REQUIRE(d3.entries ==
          std::vector<std::vector<long long>>({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));

  REQUIRE(decomposition_matrix(2, 3, 0).entries ==
          std::vector<std::vector<long long>>({{1}}));
  REQUIRE(decomposition_matrix(5, 3, 1).entries ==
          std::vector<std::vector<long long>>({{1}}));
}

TEST_CASE("decomposition matrices in degree five") {
  DecompositionTable expect2 = table_from(2, 3, 5,
                                          {{1, 0, 1, 1, 0},
                                           {0, 1, 0, 0, 0},
                                           {0, 0, 1, 1, 1},
                                           {0, 0, 0, 1, 1},
                                           {0, 0, 0, 0, 1}});
  auto& d2 = decomposition_matrix(2, 3, 5);
  REQUIRE(d2.labels == expect2.labels);
  REQUIRE(d2.entries == expect2.entries);

  DecompositionTable expect5 = table_from(5, 3, 5,
                                          {{1, 1, 0, 0, 0},
                                           {0, 1, 0, 1, 0},
                                           {0, 0, 1, 0, 0},
                                           {0, 0, 0, 1, 0},
                                           {0, 0, 0, 0, 1}});
  auto& d5 = decomposition_matrix(5, 3, 5);
  REQUIRE(d5.entries == expect5.entries);

  REQUIRE(d2.at(Partition({5}), Partition({3, 1, 1})) == 1);
  REQUIRE(d2.at(Partition({5}), Partition({2, 2, 1})) == 0);
  REQUIRE_THROWS_AS(d2.at(Partition({4}), Partition({5})), std::invalid_argument);
}

TEST_CASE("large primes give the identity matrix") {
  for (int r = 2; r <= 6; ++r) {
    auto& d = decomposition_matrix(7, 3, r);
    for (size_t i = 0; i < d.labels.size(); ++i)
      for (size_t j = 0; j < d.labels.size(); ++j)
        REQUIRE(d.entries[i][j] == (i == j ? 1 : 0));
  }
}

TEST_CASE("decomposition rows account for the full Weyl dimension") {
  for (std::uint32_t p : {2u, 5u}) {
    auto& d = decomposition_matrix(p, 3, 5);
    for (size_t i = 0; i < d.labels.size(); ++i) {
      long long total = 0;
      for (size_t j = 0; j < d.labels.size(); ++j) {
        if (j < i) REQUIRE(d.entries[i][j] == 0);
        if (j == i) REQUIRE(d.entries[i][j] == 1);
        if (d.entries[i][j])
          total += d.entries[i][j] * simple_dimension(p, 3, d.labels[j]);
      }
      REQUIRE(total == count_stab(conjugate(d.labels[i]), 3));
    }
  }
}

TEST_CASE("p-restricted kostka numbers") {
  // Above the degree the modular and classical counts agree.
  for (auto& la : partitions_all(3, 4))
    for (auto& mu : partitions_all(3, 4))
      REQUIRE(p_kostka(7, 3, la, mu) == kostka(mu, la.padded(3), 3));

  // In characteristic two the bottom weight of L((3)) vanishes.
  REQUIRE(p_kostka(2, 3, Partition({1, 1, 1}), Partition({3})) == 0);
  REQUIRE(p_kostka(2, 3, Partition({2, 1}), Partition({3})) == 1);
  REQUIRE(kostka(Partition({3}), {1, 1, 1}, 3) == 1);

  REQUIRE_THROWS_AS(p_kostka(2, 3, Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("decomposition tables are cached") {
  const DecompositionTable* a = &decomposition_matrix(3, 3, 4);
  const DecompositionTable* b = &decomposition_matrix(3, 3, 4);
  REQUIRE(a == b);
  REQUIRE_THROWS_AS(compute_decomposition_matrix(4, 3, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(compute_decomposition_matrix(0, 3, 2), std::invalid_argument);
}
