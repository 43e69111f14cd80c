#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "weylkit/errors.hpp"
#include "weylkit/freudenthal.hpp"
#include "weylkit/weyl_group.hpp"

using namespace weylkit;

namespace {

Weight w(int rank, std::initializer_list<std::pair<int, int>> terms) {
  Weight out = Weight::zero(rank);
  for (auto [node, k] : terms) out = out + Weight::fundamental(rank, node).scaled(k);
  return out;
}

Weight random_dominant(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> coeff(0, 2);
  std::bernoulli_distribution on(0.25);
  std::vector<BigInt> c;
  for (int i = 0; i < rank; ++i) c.emplace_back(on(rng) ? coeff(rng) : 0);
  return Weight(std::move(c));
}

// Brute-force character of tensor constructions on the natural module: the
// weights of Sym^k or Lambda^k are counted by enumerating monomials, with no
// use of the library's root data.
using Character = std::map<std::vector<int>, long>;

std::vector<std::vector<int>> natural_weights(Family f, int l) {
  std::vector<std::vector<int>> out;
  const int n = f == Family::A ? l + 1 : l;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    out.push_back(e);
    if (f != Family::A) {
      e[i] = -1;
      out.push_back(e);
    }
  }
  if (f == Family::B) out.push_back(std::vector<int>(n, 0));
  return out;
}

void enumerate(const std::vector<std::vector<int>>& basis, int k, bool alternating, std::size_t start,
               std::vector<int>& acc, Character& out) {
  if (k == 0) {
    ++out[acc];
    return;
  }
  for (std::size_t i = start; i < basis.size(); ++i) {
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += basis[i][c];
    enumerate(basis, k - 1, alternating, alternating ? i + 1 : i, acc, out);
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] -= basis[i][c];
  }
}

Character power(Family f, int l, int k, bool alternating) {
  Character out;
  if (k < 0) return out;
  auto basis = natural_weights(f, l);
  std::vector<int> acc(basis.front().size(), 0);
  enumerate(basis, k, alternating, 0, acc, out);
  return out;
}

Character minus(Character a, const Character& b) {
  for (const auto& [x, m] : b) {
    a[x] -= m;
    if (a[x] == 0) a.erase(x);
  }
  return a;
}

bool dominant_euclidean(Family f, const std::vector<int>& x) {
  const int n = static_cast<int>(x.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (f == Family::D && i + 2 == n) return x[i] >= std::abs(x[i + 1]);
    if (x[i] < x[i + 1]) return false;
  }
  return f == Family::A || f == Family::D || x[n - 1] >= 0;
}

// Dynkin labels in the reversed labelling, written out per family.
Weight labels(Family f, int l, const std::vector<int>& x) {
  std::vector<BigInt> a(l);
  if (f == Family::A) {
    for (int i = 0; i < l; ++i) a[i] = x[i] - x[i + 1];
    return Weight(std::move(a));
  }
  auto xe = [&](int i) { return x[i - 1]; };  // 1-based
  for (int i = 2; i <= l; ++i) a[i - 1] = xe(l - i + 1) - xe(l - i + 2);
  if (f == Family::B) a[0] = 2 * xe(l);
  if (f == Family::C) a[0] = xe(l);
  if (f == Family::D) {
    a[0] = xe(l - 1) + xe(l);
    a[1] = xe(l - 1) - xe(l);
  }
  return Weight(std::move(a));
}

void expect_matches(const LieType& t, const Weight& lambda, const Character& ch) {
  auto table = multiplicity_table(t, lambda);
  std::size_t dominant = 0;
  for (const auto& [x, m] : ch) {
    ASSERT_GT(m, 0);
    if (!dominant_euclidean(t.family(), x)) continue;
    ++dominant;
    Weight mu = labels(t.family(), t.rank(), x);
    EXPECT_EQ(table->multiplicity(mu), m) << t.name() << " " << lambda.to_string() << " at " << mu.to_string();
  }
  EXPECT_EQ(table->rows().size(), dominant) << t.name() << " " << lambda.to_string();
}

}  // namespace

TEST(DominantLattice, Examples) {
  LieType b(Family::B, 12);
  auto vec = dominant_lattice(b, Weight::fundamental(12, 12));
  EXPECT_EQ(vec.members, (std::vector<Weight>{Weight::fundamental(12, 12), Weight::zero(12)}));

  auto l3 = dominant_lattice(b, w(12, {{12, 3}}));
  std::vector<Weight> got = l3.members;
  std::vector<Weight> expected{w(12, {{12, 3}}), w(12, {{11, 1}, {12, 1}}), w(12, {{10, 1}}), w(12, {{12, 2}}),
                               w(12, {{11, 1}}), w(12, {{12, 1}}), Weight::zero(12)};
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(l3.members.front(), w(12, {{12, 3}}));
  EXPECT_TRUE(std::is_sorted(l3.depths.begin(), l3.depths.end()));

  auto zero = dominant_lattice(LieType(Family::A, 7), Weight::zero(7));
  EXPECT_EQ(zero.members.size(), 1u);
  EXPECT_THROW(dominant_lattice(b, Weight::fundamental(12, 1).scaled(-1)), ValidationError);
}

TEST(DominantLattice, ClosureMatchesBoxOracle) {
  std::mt19937 rng(17);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int l = std::max(2, minimum_rank(f)); l <= kBoxOracleMaxRank; ++l) {
      LieType t(f, l);
      for (int k = 0; k < 4; ++k) {
        std::uniform_int_distribution<int> coeff(0, l <= 4 ? 2 : 1);
        std::vector<BigInt> c;
        for (int i = 0; i < l; ++i) c.emplace_back(coeff(rng));
        Weight lambda(std::move(c));
        auto closure = dominant_lattice(t, lambda).members;
        auto box = dominant_lattice_box(t, lambda).members;
        std::sort(closure.begin(), closure.end());
        std::sort(box.begin(), box.end());
        EXPECT_EQ(closure, box) << t.name() << " " << lambda.to_string();
      }
    }
  }
  EXPECT_THROW(dominant_lattice_box(LieType(Family::B, 7), Weight::fundamental(7, 7)), ValidationError);
}

TEST(Multiplicity, Examples) {
  LieType b(Family::B, 12), c(Family::C, 12);
  EXPECT_EQ(multiplicity(b, w(12, {{12, 3}}), w(12, {{10, 1}})), 1);
  EXPECT_EQ(multiplicity(b, w(12, {{12, 3}}), w(12, {{12, 1}})), 12);
  EXPECT_EQ(multiplicity(b, w(12, {{10, 1}}), w(12, {{12, 1}})), 11);
  EXPECT_EQ(multiplicity(c, w(12, {{10, 1}}), w(12, {{12, 1}})), 10);
  EXPECT_EQ(multiplicity(c, w(12, {{9, 2}}), w(12, {{9, 2}})), 1);
  // Outside the cone, and in the wrong coset of the root lattice.
  EXPECT_EQ(multiplicity(b, w(12, {{12, 1}}), w(12, {{12, 2}})), 0);
  EXPECT_EQ(multiplicity(c, w(12, {{12, 2}}), w(12, {{12, 1}})), 0);
}

TEST(MultiplicityTable, Examples) {
  LieType d(Family::D, 12);
  auto table = multiplicity_table(d, w(12, {{11, 1}, {12, 1}}));
  ASSERT_EQ(table->rows().size(), 3u);
  EXPECT_EQ(table->multiplicity(w(12, {{11, 1}, {12, 1}})), 1);
  EXPECT_EQ(table->multiplicity(w(12, {{10, 1}})), 2);
  EXPECT_EQ(table->multiplicity(w(12, {{12, 1}})), 22);

  EXPECT_EQ(multiplicity_table(LieType(Family::C, 12), w(12, {{12, 4}}))->multiplicity(Weight::zero(12)), 78);
  // The printed B value is l(l-1)/2 = 66; Sym^4 - Sym^2 of the 25-dimensional module gives 78.
  EXPECT_EQ(multiplicity_table(LieType(Family::B, 12), w(12, {{12, 4}}))->multiplicity(Weight::zero(12)), 78);

  for (const auto& row : table->rows()) EXPECT_EQ(row.orbit_length, orbit_length(d, row.mu));
  EXPECT_EQ(table->dimension(), dim_weyl_product(d, table->highest()));
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dim_weyl_module(LieType(Family::B, 12), w(12, {{12, 3}})), 2900);
  EXPECT_EQ(dim_weyl_module(LieType(Family::C, 12), w(12, {{10, 1}})), 2000);
  EXPECT_EQ(dim_weyl_module(LieType(Family::C, 12), w(12, {{9, 1}})), 10350);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    EXPECT_EQ(dim_weyl_module(LieType(f, 12), Weight::zero(12)), 1);
  }
  EXPECT_EQ(dim_weyl_product(LieType(Family::A, 15), w(15, {{1, 1}})), 16);
  EXPECT_EQ(dim_weyl_product(LieType(Family::A, 15), w(15, {{1, 1}, {15, 1}})), 255);
  EXPECT_EQ(dim_weyl_product(LieType(Family::D, 12), w(12, {{1, 1}})), 2048);
  EXPECT_EQ(dim_weyl_product(LieType(Family::B, 16), w(16, {{1, 1}})), 65536);
}

TEST(Dimension, TypeAThreeParameterWeight) {
  // Char-0 dimension of lambda_{l-2} + lambda_l is 3 binom(l+2, 4).
  for (int l = 12; l <= 16; ++l) {
    LieType t(Family::A, l);
    Weight lambda = w(l, {{l - 2, 1}, {l, 1}});
    EXPECT_EQ(dim_weyl_module(t, lambda), 3 * binomial(l + 2, 4)) << l;
    EXPECT_EQ(dim_weyl_product(t, lambda), 3 * binomial(l + 2, 4)) << l;
  }
}

TEST(Dimension, SumEqualsProductForRandomWeights) {
  std::mt19937 rng(101);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int k = 0; k < 12; ++k) {
      int l = 4 + static_cast<int>(rng() % 6);
      LieType t(f, l);
      Weight lambda = random_dominant(rng, l);
      EXPECT_EQ(dim_weyl_module(t, lambda), dim_weyl_product(t, lambda)) << t.name() << " " << lambda.to_string();
    }
  }
}

TEST(Multiplicity, WeylInvariance) {
  std::mt19937 rng(29);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    LieType t(f, 5);
    Weight lambda = w(5, {{1, 1}, {3, 1}, {5, 1}});
    auto table = multiplicity_table(t, lambda);
    for (const auto& row : table->rows()) {
      Weight x = row.mu;
      for (int step = 0; step < 8; ++step) x = reflect(t, x, 1 + static_cast<int>(rng() % 5));
      EXPECT_EQ(multiplicity(t, lambda, x), row.multiplicity) << t.name() << " " << x.to_string();
    }
  }
}

TEST(Multiplicity, HighestWeightHasMultiplicityOne) {
  std::mt19937 rng(8);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int k = 0; k < 5; ++k) {
      LieType t(f, 7);
      Weight lambda = random_dominant(rng, 7);
      auto table = multiplicity_table(t, lambda);
      EXPECT_EQ(table->rows().front().mu, lambda);
      EXPECT_EQ(table->rows().front().multiplicity, 1);
      for (const auto& row : table->rows()) EXPECT_GE(row.multiplicity, 1);
    }
  }
}

TEST(BruteForceOracle, SymmetricPowers) {
  for (int l : {5, 8, 12}) {
    for (int k = 1; k <= 4; ++k) {
      expect_matches(LieType(Family::A, l), w(l, {{1, k}}), power(Family::A, l, k, false));
      expect_matches(LieType(Family::C, l), w(l, {{l, k}}), power(Family::C, l, k, false));
      expect_matches(LieType(Family::B, l), w(l, {{l, k}}),
                     minus(power(Family::B, l, k, false), power(Family::B, l, k - 2, false)));
      expect_matches(LieType(Family::D, l), w(l, {{l, k}}),
                     minus(power(Family::D, l, k, false), power(Family::D, l, k - 2, false)));
    }
  }
}

TEST(BruteForceOracle, ExteriorPowers) {
  for (int l : {6, 9, 12}) {
    for (int k = 1; k <= 4; ++k) {
      expect_matches(LieType(Family::A, l), w(l, {{k, 1}}), power(Family::A, l, k, true));
      expect_matches(LieType(Family::B, l), w(l, {{l - k + 1, 1}}), power(Family::B, l, k, true));
      expect_matches(LieType(Family::D, l), w(l, {{l - k + 1, 1}}), power(Family::D, l, k, true));
      expect_matches(LieType(Family::C, l), w(l, {{l - k + 1, 1}}),
                     minus(power(Family::C, l, k, true), power(Family::C, l, k - 2, true)));
    }
  }
}

TEST(BruteForceOracle, AdjointOfA) {
  const int l = 9;
  Character ch;
  for (int i = 0; i <= l; ++i) {
    for (int j = 0; j <= l; ++j) {
      std::vector<int> x(l + 1, 0);
      ++x[i];
      --x[j];
      ++ch[x];
    }
  }
  --ch[std::vector<int>(l + 1, 0)];
  expect_matches(LieType(Family::A, l), w(l, {{1, 1}, {l, 1}}), ch);
}
