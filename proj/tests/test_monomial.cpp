#include <gtest/gtest.h>

#include <random>

#include "qcoord/config.hpp"
#include "qcoord/errors.hpp"
#include "qcoord/monomial.hpp"

using namespace qcoord;

namespace {

Weight brute_weight(const Word& w, int n) {
  std::vector<int> c(static_cast<std::size_t>(n * n) + 1, 0);
  c[0] = static_cast<int>(w.size());
  for (Letter l : w.letters) {
    for (int f = 0; f < n * n; ++f) {
      if (l == f) ++c[static_cast<std::size_t>(f) + 1];
    }
  }
  return Weight{c};
}

Word random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), let(0, n * n - 1);
  Word w;
  for (int k = len(rng); k > 0; --k) w.letters.push_back(static_cast<Letter>(let(rng)));
  return w;
}

}  // namespace

TEST(Weight, Examples) {
  EXPECT_EQ(weight(Word::from_indices(2, {{1, 2}, {1, 1}}), 2).components, (std::vector<int>{2, 1, 1, 0, 0}));
  EXPECT_EQ(weight(Word{}, 2).components, (std::vector<int>{0, 0, 0, 0, 0}));
  const Word w = Word::from_indices(2, {{2, 1}, {2, 1}, {1, 2}});
  EXPECT_EQ(weight(w, 2), brute_weight(w, 2));
  EXPECT_EQ(weight(w, 2).components, (std::vector<int>{3, 0, 1, 2, 0}));
}

TEST(Weight, MatchesBruteForceAndIsAdditive) {
  std::mt19937 rng(5);
  for (int n = 1; n <= 3; ++n) {
    for (int it = 0; it < 200; ++it) {
      const Word a = random_word(rng, n, 6), b = random_word(rng, n, 6);
      EXPECT_EQ(weight(a, n), brute_weight(a, n));
      EXPECT_EQ(weight(a.concat(b), n), weight(a, n) + weight(b, n));
      EXPECT_EQ(weight(collect(a, n)), weight(a, n));
    }
  }
}

TEST(LexCompare, Examples) {
  EXPECT_EQ(lex_compare(Weight{{2, 1, 1, 0, 0}}, Weight{{2, 0, 2, 0, 0}}), std::strong_ordering::greater);
  EXPECT_EQ(lex_compare(Weight{{1, 1, 0, 0, 0}}, Weight{{2, 0, 0, 0, 2}}), std::strong_ordering::less);
  EXPECT_EQ(lex_compare(Weight{{1, 0, 1, 0, 0}}, Weight{{1, 0, 1, 0, 0}}), std::strong_ordering::equal);
  EXPECT_THROW(lex_compare(Weight{{1, 0}}, Weight{{1, 0, 0, 0, 0}}), DimensionError);
}

TEST(LexCompare, TotalOrderOnRandomTriples) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(0, 2);
  auto rw = [&] {
    Weight w{std::vector<int>(5)};
    for (auto& c : w.components) c = d(rng);
    return w;
  };
  for (int it = 0; it < 500; ++it) {
    const Weight a = rw(), b = rw(), c = rw();
    const auto ab = lex_compare(a, b), ba = lex_compare(b, a);
    EXPECT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
    EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
    if (ab == std::strong_ordering::less && lex_compare(b, c) == std::strong_ordering::less) {
      EXPECT_EQ(lex_compare(a, c), std::strong_ordering::less);
    }
  }
}

TEST(Regions, MembershipByInequality) {
  EXPECT_EQ(region({2, 3}, 3), Region::kBelow);
  EXPECT_EQ(region({2, 2}, 3), Region::kOn);
  EXPECT_EQ(region({2, 1}, 3), Region::kAbove);
  EXPECT_EQ(region({1, 1}, 1), Region::kOn);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const Region expected = j > n + 1 - i ? Region::kBelow : j == n + 1 - i ? Region::kOn : Region::kAbove;
        EXPECT_EQ(region({i, j}, n), expected);
      }
    }
  }
}

TEST(OppositeOrder, BlocksAreOrdered) {
  for (int n = 1; n <= 4; ++n) {
    const GenOrder o = make_opposite_order(n, GenOrder::row_major(n));
    EXPECT_EQ(o.kind(), OrderKind::kOppositeConstrained);
    for (int a = 0; a < n * n; ++a) {
      for (int b = 0; b < n * n; ++b) {
        const GenIndex ga = GenIndex::from_flat(a, n), gb = GenIndex::from_flat(b, n);
        if (static_cast<int>(region(ga, n)) < static_cast<int>(region(gb, n))) {
          EXPECT_LT(o.rank(ga), o.rank(gb));
        }
      }
    }
  }
  const GenOrder o2 = make_opposite_order(2, GenOrder::row_major(2));
  EXPECT_EQ(o2.rank(GenIndex{2, 2}), 0);
  EXPECT_EQ(o2.rank(GenIndex{1, 1}), 3);
}

TEST(OppositeOrder, ValidatorRejectsViolations) {
  EXPECT_THROW(GenOrder::from_sequence(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}, OrderKind::kOppositeConstrained),
               ConstraintError);
  EXPECT_NO_THROW(GenOrder::from_sequence(2, {{2, 2}, {2, 1}, {1, 2}, {1, 1}}, OrderKind::kOppositeConstrained));
  EXPECT_THROW(GenOrder::from_sequence(2, {{2, 2}, {2, 2}, {1, 2}, {1, 1}}), ConstraintError);
}

TEST(Config, OppositeFlavorNeedsConstrainedOrder) {
  AlgebraConfig c = AlgebraConfig::standard(2, Variant::kGLn);
  c.flavor = BasisFlavor::kOpposite;
  EXPECT_THROW(c.validate(), ConstraintError);
  EXPECT_NO_THROW(AlgebraConfig::opposite(3, Variant::kSLn));
}

TEST(Monomial, FormatFollowsOrder) {
  const NormalMonomial m = collect(Word::from_indices(2, {{2, 2}, {1, 1}, {1, 1}}), 2, -1);
  EXPECT_EQ(format_monomial(m, GenOrder::row_major(2)), "t[1,1]^2 t[2,2] D^-1");
  EXPECT_EQ(format_monomial(m, make_opposite_order(2, GenOrder::row_major(2))), "t[2,2] t[1,1]^2 D^-1");
  EXPECT_EQ(format_monomial(NormalMonomial(2), GenOrder::row_major(2)), "1");
}

TEST(Monomial, CanonicalOrderRefinesWeight) {
  std::mt19937 rng(13);
  for (int it = 0; it < 300; ++it) {
    const NormalMonomial a = collect(random_word(rng, 2, 5), 2);
    const NormalMonomial b = collect(random_word(rng, 2, 5), 2);
    const auto w = lex_compare(weight(a), weight(b));
    if (w != std::strong_ordering::equal) EXPECT_EQ(a <=> b, w);
  }
}

TEST(Monomial, InversionCount) {
  const GenOrder o = GenOrder::row_major(2);
  EXPECT_EQ(inversion_count(Word::from_indices(2, {{2, 2}, {1, 2}, {1, 1}}), o), 3);
  EXPECT_EQ(inversion_count(Word::from_indices(2, {{1, 1}, {1, 1}}), o), 0);
}
