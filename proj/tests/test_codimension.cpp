#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pauli_super/codimension.hpp"
#include "pauli_super/super_p.hpp"

using namespace pauli_super;

namespace {

struct Fixture {
  GradedSuperalgebra alg;
  StructureTable table;
  explicit Fixture(unsigned q) : alg(build_p_algebra(q)), table(build_structure_table(alg)) {}
};

const Fixture& p2() {
  static const Fixture f(1);
  return f;
}

// c_n^G of P(2), n = 1..14, from the DP; n <= 5 re-derived by brute force below.
const char* const kGoldenCodims[] = {"7",       "24",       "126",       "768",        "4800",        "29382",        "179466",
                                     "1101672", "6785208",  "41939166",  "260126130",  "1618280808",  "10094291064", "63112482978"};

std::vector<MultiDegree> all_of_total(std::size_t d, unsigned n) {
  std::vector<MultiDegree> out;
  std::vector<unsigned> c(d, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == d) {
      c[i] = left;
      out.emplace_back(c);
      return;
    }
    for (unsigned x = 0; x <= left; ++x) {
      c[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, n);
  return out;
}

// Literal oracle: every ordering of the letters, every full bracketing of
// each ordering, evaluated with exact matrices. Exponential; tiny totals only.
bool literal_feasible(const MultiDegree& v, const GradedSuperalgebra& alg) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (unsigned k = 0; k < v[i]; ++k) letters.push_back(static_cast<int>(i));
  struct Val {
    IntMatrix m;
    int p;
  };
  auto all_trees = [&](auto&& self, std::size_t lo, std::size_t hi) -> std::vector<Val> {
    if (hi - lo == 1) {
      const auto& e = alg.element(static_cast<std::size_t>(letters[lo]));
      return {{e.mat, e.parity}};
    }
    std::vector<Val> out;
    for (std::size_t mid = lo + 1; mid < hi; ++mid)
      for (const auto& l : self(self, lo, mid))
        for (const auto& r : self(self, mid, hi)) out.push_back({supercommutator(l.m, r.m, l.p, r.p), l.p ^ r.p});
    return out;
  };
  do {
    for (const auto& val : all_trees(all_trees, 0, letters.size()))
      if (!val.m.is_zero()) return true;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return false;
}

}  // namespace

TEST(MultiDegree, DegreeOf) {
  const auto& alg = p2().alg;
  EXPECT_EQ(degree_of(MultiDegree::zero(7), alg), GradingGroupElement::identity(1));
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(degree_of(MultiDegree::unit(7, i), alg), alg.element(i).g);
    MultiDegree twice = MultiDegree::zero(7);
    twice.counts[i] = 2;
    EXPECT_TRUE(degree_of(twice, alg).is_identity());
  }
  EXPECT_THROW(degree_of(MultiDegree::zero(6), alg), DimensionError);
}

TEST(MultiDegree, ZDegree) {
  const auto& alg = p2().alg;
  EXPECT_EQ(z_degree_of(MultiDegree::zero(7), alg), 0);
  EXPECT_EQ(z_degree_of(MultiDegree::unit(7, 0), alg), 1);
  EXPECT_EQ(z_degree_of(MultiDegree({1, 0, 0, 1, 0, 0, 0}), alg), 0);
  EXPECT_EQ(z_degree_of(MultiDegree({0, 0, 0, 2, 5, 0, 0}), alg), -2);
}

TEST(Multinomial, MatchesFactorialFormula) {
  EXPECT_EQ(multinomial(MultiDegree::unit(5, 2)), 1);
  EXPECT_EQ(multinomial(MultiDegree({1, 1})), 2);
  auto fact = [](unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
  };
  EXPECT_EQ(fact(10) / (fact(2) * fact(3) * fact(5)), 2520);
  EXPECT_EQ(multinomial(MultiDegree({2, 3, 5})), 2520);

  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    std::vector<unsigned> c(1 + rng() % 7);
    for (auto& x : c) x = rng() % 12;
    const MultiDegree v(c);
    BigInt den = 1;
    for (unsigned x : c) den *= fact(x);
    EXPECT_EQ(multinomial(v), fact(v.total()) / den) << v.to_string();
  }
}

TEST(Feasibility, SmallCases) {
  FeasibilityTable ft(p2().alg, p2().table);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_TRUE(ft.feasible(MultiDegree::unit(7, i)));
  // two odd_symmetric letters
  EXPECT_FALSE(ft.feasible(MultiDegree({1, 1, 0, 0, 0, 0, 0})));
  EXPECT_FALSE(ft.feasible(MultiDegree({2, 0, 0, 0, 0, 0, 0})));
  EXPECT_FALSE(ft.feasible(MultiDegree::zero(7)));
  // s0 (odd_symmetric) with s3 (odd_skew): [e_{a0}, e_{a0 a1 b1}] != 0
  EXPECT_TRUE(ft.feasible(MultiDegree({1, 0, 0, 1, 0, 0, 0})));
  EXPECT_THROW(ft.feasible(MultiDegree::zero(3)), DimensionError);
}

TEST(Feasibility, LiteralOracleAgreesWithMemoizedOracle) {
  const auto& alg = p2().alg;
  for (unsigned n = 1; n <= 4; ++n)
    for (const auto& v : all_of_total(7, n)) ASSERT_EQ(brute_force_feasible(v, alg), literal_feasible(v, alg)) << v.to_string();
}

TEST(Feasibility, DpMatchesBruteForceUpToTotal4) {
  FeasibilityTable ft(p2().alg, p2().table);
  for (unsigned n = 1; n <= 4; ++n)
    for (const auto& v : all_of_total(7, n)) ASSERT_EQ(ft.feasible(v), brute_force_feasible(v, p2().alg)) << v.to_string();
}

TEST(Feasibility, DpMatchesBruteForceAtT4) {
  const Fixture f(2);
  FeasibilityTable ft(f.alg, f.table);
  std::mt19937_64 rng(31);
  for (unsigned n = 1; n <= 3; ++n) {
    const auto all = all_of_total(31, n);
    for (int k = 0; k < 150; ++k) {
      const auto& v = all[rng() % all.size()];
      ASSERT_EQ(ft.feasible(v), brute_force_feasible(v, f.alg)) << v.to_string();
    }
  }
  EXPECT_EQ(graded_codimension(1, ft).codimension, 31);
  EXPECT_THROW(ft.extend_to(7), ResourceError);
}

TEST(Feasibility, PruningIsSound) {
  FeasibilityTable ft(p2().alg, p2().table);
  for (unsigned n = 1; n <= 10; ++n)
    for (const auto& v : ft.feasible_at(n)) {
      const long z = z_degree_of(v, p2().alg);
      EXPECT_TRUE(z >= -1 && z <= 1) << v.to_string();
      const auto idx = p2().alg.index_of(degree_of(v, p2().alg));
      ASSERT_TRUE(idx.has_value());
      EXPECT_EQ(p2().alg.element(*idx).z_deg, z);
      EXPECT_EQ(ft.degree_index(v), idx);
    }
}

TEST(Feasibility, ThreadCountDoesNotChangeResults) {
  FeasibilityTable one(p2().alg, p2().table), many(p2().alg, p2().table);
  one.extend_to(9, 1);
  many.extend_to(9, 4);
  for (unsigned n = 1; n <= 9; ++n) EXPECT_EQ(one.feasible_at(n), many.feasible_at(n));
}

TEST(BruteForce, GuardsAndTrivialCases) {
  const auto& alg = p2().alg;
  EXPECT_TRUE(brute_force_feasible(MultiDegree::unit(7, 4), alg));
  EXPECT_FALSE(brute_force_feasible(MultiDegree({0, 0, 0, 0, 2, 0, 0}), alg));
  EXPECT_THROW(brute_force_feasible(MultiDegree({8, 0, 0, 0, 0, 0, 0}), alg), ResourceError);
}

// Every monomial value lies in the one-dimensional L_{degree_of(v)}.
TEST(BruteForce, ZeroOneLaw) {
  const auto& alg = p2().alg;
  for (unsigned n = 1; n <= 4; ++n)
    for (const auto& v : all_of_total(7, n)) {
      const auto values = brute_force_values(v, alg);
      if (values.empty()) continue;
      const auto idx = alg.index_of(degree_of(v, alg));
      ASSERT_TRUE(idx.has_value()) << v.to_string();
      for (const auto& m : values) {
        const auto s = integer_ratio(m, alg.element(*idx).mat);
        ASSERT_TRUE(s.has_value());
        EXPECT_NE(*s, 0);
      }
    }
}

TEST(GradedCodimension, BruteForceSummationForSmallN) {
  FeasibilityTable ft(p2().alg, p2().table);
  for (unsigned n = 1; n <= 5; ++n) {
    BigInt brute = 0;
    for (const auto& v : all_of_total(7, n))
      if (brute_force_feasible(v, p2().alg)) brute += multinomial(v);
    EXPECT_EQ(graded_codimension(n, ft).codimension, brute) << n;
    EXPECT_EQ(brute, BigInt(kGoldenCodims[n - 1]));
  }
}

TEST(GradedCodimension, GoldenRunAndBounds) {
  FeasibilityTable ft(p2().alg, p2().table);
  BigInt prev = 0;
  for (unsigned n = 1; n <= 14; ++n) {
    const auto row = graded_codimension(n, ft);
    EXPECT_EQ(row.codimension, BigInt(kGoldenCodims[n - 1])) << n;
    EXPECT_LE(row.codimension, boost::multiprecision::pow(BigInt(7), n + 1));
    EXPECT_GE(row.codimension, prev);
    prev = row.codimension;
  }
  EXPECT_EQ(graded_codimension(1, p2().alg), 7);
  EXPECT_THROW(graded_codimension(0, ft), std::invalid_argument);
}

TEST(Witness, TreesEvaluateToNonzeroElements) {
  const auto& alg = p2().alg;
  FeasibilityTable ft(alg, p2().table);

  const auto leaf = witness_monomial(MultiDegree::unit(7, 2), ft);
  ASSERT_TRUE(leaf);
  EXPECT_EQ(leaf->to_string(), "x3");

  const MultiDegree pair({1, 0, 0, 1, 0, 0, 0});
  const auto two = witness_monomial(pair, ft);
  ASSERT_TRUE(two);
  EXPECT_EQ(two->nodes.size(), 3u);
  EXPECT_TRUE(two->to_string() == "[x1,x4]" || two->to_string() == "[x4,x1]") << two->to_string();

  EXPECT_FALSE(witness_monomial(MultiDegree({1, 1, 0, 0, 0, 0, 0}), ft));

  for (unsigned n = 1; n <= 6; ++n)
    for (const auto& v : ft.feasible_at(n)) {
      const auto tree = witness_monomial(v, ft);
      ASSERT_TRUE(tree);
      EXPECT_EQ(tree->multidegree(7), v);
      const IntMatrix val = evaluate_tree(*tree, alg);
      const auto s = integer_ratio(val, alg.element(*alg.index_of(degree_of(v, alg))).mat);
      ASSERT_TRUE(s.has_value()) << tree->to_string();
      EXPECT_NE(*s, 0) << tree->to_string();
    }
}
