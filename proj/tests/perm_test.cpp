#include <gtest/gtest.h>

#include "gtoc/perm.hpp"
#include "test_util.hpp"

namespace gtoc {
namespace {

using testing::P;

TEST(Permutation, ParsesDigitAndCommaForms) {
  EXPECT_EQ(P("3412").images(), (std::vector<int>{3, 4, 1, 2}));
  const Permutation big = P("10,1,2,3,4,5,6,7,8,9");
  EXPECT_EQ(big.size(), 10);
  EXPECT_EQ(big(1), 10);
  EXPECT_EQ(big.to_string(), "10,1,2,3,4,5,6,7,8,9");
  EXPECT_EQ(P("3412").to_string(), "3412");
}

TEST(Permutation, RejectsMalformedInput) {
  EXPECT_THROW(P("3413"), InvalidArgument);
  EXPECT_THROW(P("0123"), InvalidArgument);
  EXPECT_THROW(P("12a"), InvalidArgument);
  EXPECT_THROW(P(""), InvalidArgument);
  EXPECT_THROW(P("1,,2"), InvalidArgument);
  EXPECT_THROW(Permutation::identity(17), InvalidArgument);
  EXPECT_NO_THROW(Permutation::identity(16));
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(P("312"), P("123")), P("312"));
  EXPECT_EQ(compose(P("231"), P("312")), P("123"));
  // (3412)(2)=4, (3412)(1)=3, (3412)(3)=1, (3412)(4)=2
  EXPECT_EQ(compose(P("3412"), simple_reflection(1, 4)), P("4312"));
  EXPECT_THROW(compose(P("12"), P("123")), InvalidArgument);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(Permutation::identity(5)), Permutation::identity(5));
  EXPECT_EQ(inverse(P("3412")), P("3412"));
  EXPECT_EQ(compose(P("3412"), P("3412")), Permutation::identity(4));
  EXPECT_EQ(inverse(P("2314")), P("3124"));
}

TEST(Length, Examples) {
  EXPECT_EQ(length(Permutation::identity(6)), 0);
  EXPECT_EQ(length(P("4321")), 6);
  EXPECT_EQ(length(P("32154")), 4);
  // 32154 = s1 s2 s1 s4
  Permutation w = Permutation::identity(5);
  for (int i : {1, 2, 1, 4}) w = compose(w, simple_reflection(i, 5));
  EXPECT_EQ(w, P("32154"));
}

TEST(PrefixSorted, Examples) {
  EXPECT_EQ(prefix_sorted(P("312"), 2).values(), (std::vector<int>{1, 3}));
  EXPECT_EQ(prefix_sorted(P("312"), 3).values(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(prefix_sorted(P("53142"), 5).values(), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_THROW(prefix_sorted(P("312"), 0), InvalidArgument);
  EXPECT_THROW(prefix_sorted(P("312"), 4), InvalidArgument);
}

TEST(ApplyTransposition, Examples) {
  EXPECT_EQ(apply_transposition(1, 2, Permutation::identity(3)), P("213"));
  EXPECT_EQ(apply_transposition(2, 4, P("3412")), P("3214"));
  EXPECT_THROW(apply_transposition(2, 2, P("3412")), InvalidArgument);
  EXPECT_THROW(apply_transposition(1, 5, P("3412")), InvalidArgument);
}

TEST(SimpleReflection, Examples) {
  EXPECT_EQ(simple_reflection(1, 3), P("213"));
  EXPECT_EQ(simple_reflection(4, 5), P("12354"));
  EXPECT_THROW(simple_reflection(0, 3), InvalidArgument);
  EXPECT_THROW(simple_reflection(3, 3), InvalidArgument);
}

TEST(PermProperties, TranspositionsFlipParity) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const int diff = length(apply_transposition(w(i), w(j), w)) - length(w);
          EXPECT_NE(diff % 2, 0) << w.to_string();
        }
      }
    }
  }
}

TEST(PermProperties, RightSimpleReflectionChangesLengthByOne) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int i = 1; i < n; ++i) {
        const int expected = length(w) + (w(i) < w(i + 1) ? 1 : -1);
        ASSERT_EQ(length(compose(w, simple_reflection(i, n))), expected);
      }
    }
  }
}

TEST(PermProperties, PrefixesAreNested) {
  for (const auto& w : all_permutations(6)) {
    for (int d = 1; d < 6; ++d) {
      const SortedTuple small = prefix_sorted(w, d);
      const SortedTuple big = prefix_sorted(w, d + 1);
      for (int v : small.values()) ASSERT_TRUE(big.contains(v));
    }
  }
}

TEST(PermProperties, InverseIsAnInvolution) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      ASSERT_EQ(inverse(inverse(w)), w);
      ASSERT_TRUE(compose(w, inverse(w)).is_identity());
    }
  }
}

TEST(AllPermutations, LexicographicAndComplete) {
  const auto s4 = all_permutations(4);
  EXPECT_EQ(s4.size(), 24u);
  EXPECT_TRUE(std::is_sorted(s4.begin(), s4.end()));
  EXPECT_EQ(s4.front(), P("1234"));
  EXPECT_EQ(s4.back(), P("4321"));
}

}  // namespace
}  // namespace gtoc
