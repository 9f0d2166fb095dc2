#include <gtest/gtest.h>

#include "peiffer/fixtures.hpp"

using namespace peiffer;

namespace
{

// The simplicial identities evaluated element by element.
bool identities_hold(SimplicialGroupTrunc const &s)
{
  for (unsigned n = 0; n <= s.max_level; ++n)
    for (ElemId x = 0; x < s.level(n)->order(); ++x) {
      for (unsigned i = 0; n >= 2 && i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j)
          if (s.d(n - 1, i)(s.d(n, j)(x)) != s.d(n - 1, j - 1)(s.d(n, i)(x)))
            return false;
      if (n < s.max_level)
        for (unsigned j = 0; j <= n; ++j) {
          auto y = s.s(n, j)(x);
          if (s.d(n + 1, j)(y) != x || s.d(n + 1, j + 1)(y) != x)
            return false;
          for (unsigned i = 0; i <= n + 1; ++i) {
            if (i < j && n >= 1 &&
                s.d(n + 1, i)(y) != s.s(n - 1, j - 1)(s.d(n, i)(x)))
              return false;
            if (i > j + 1 && n >= 1 &&
                s.d(n + 1, i)(y) != s.s(n - 1, j)(s.d(n, i - 1)(x)))
              return false;
          }
          for (unsigned i = 0; n + 1 < s.max_level && i <= j; ++i)
            if (s.s(n + 1, i)(y) != s.s(n + 1, j + 1)(s.s(n, i)(x)))
              return false;
        }
    }
  return true;
}

std::size_t brute_moore_order(SimplicialGroupTrunc const &s, unsigned n)
{
  std::size_t k = 0;
  for (ElemId x = 0; x < s.level(n)->order(); ++x) {
    bool in = true;
    for (unsigned i = 0; i < n; ++i)
      in = in && s.d(n, i)(x) == FiniteGroup::identity();
    k += in;
  }
  return k;
}

} // namespace

TEST(Simplicial, ConstantGroup)
{
  auto s = constant_simplicial(symmetric3(), 3);
  EXPECT_TRUE(verify_simplicial(s).ok());
  EXPECT_TRUE(identities_hold(s));
  EXPECT_EQ(moore(s, 0).order(), 6u);
  for (unsigned n = 1; n <= 3; ++n)
    EXPECT_TRUE(moore(s, n).is_trivial());
}

TEST(Simplicial, NerveOfC3InS3)
{
  auto x = c3_in_s3();
  auto s = nerve(x, 3);
  EXPECT_TRUE(verify_simplicial(s).ok());
  EXPECT_TRUE(identities_hold(s));
  std::size_t expected = 6;
  for (unsigned n = 0; n <= 3; ++n) {
    EXPECT_EQ(s.level(n)->order(), expected);
    expected *= 3;
    EXPECT_EQ(moore(s, n).order(), brute_moore_order(s, n));
  }
  EXPECT_EQ(moore(s, 1).order(), 3u);
  EXPECT_TRUE(moore(s, 2).is_trivial());
  EXPECT_TRUE(order_factorization(s).ok());
}

TEST(Simplicial, MooreCrossedModuleRecoversInput)
{
  auto x = c3_in_s3();
  auto s = nerve(x, 2);
  auto y = moore_crossed_module(s);
  EXPECT_EQ(y.M->order(), 3u);
  EXPECT_EQ(y.P->order(), 6u);
  EXPECT_TRUE(check_crossed_module(y).ok());
  EXPECT_TRUE(is_isomorphic(x, y));
}

TEST(Simplicial, DiagonalOfGrid)
{
  auto g = d4_grid();
  auto s = diagonal(g);
  EXPECT_TRUE(verify_simplicial(s).ok());
  EXPECT_TRUE(identities_hold(s));
  EXPECT_EQ(moore(s, 0).order(), 8u);
  EXPECT_EQ(moore(s, 1).order(), brute_moore_order(s, 1));
  EXPECT_EQ(moore(s, 2).order(), brute_moore_order(s, 2));
  EXPECT_FALSE(moore(s, 2).is_trivial());
  EXPECT_TRUE(order_factorization(s).ok());
}

TEST(Simplicial, RejectsBrokenFace)
{
  auto s = constant_simplicial(symmetric3(), 2);
  auto const &G = s.level(1);
  auto t = element(G, Permutation::from_cycles(3, {{0, 1}}));
  auto inner = Homomorphism::from_function(G, G, [&](ElemId x) { return G->conj(t, x); });
  s.faces[1][0] = compose(s.faces[1][0], inner);
  EXPECT_FALSE(identities_hold(s));
  EXPECT_FALSE(verify_simplicial(s).ok());
}

TEST(Simplicial, LevelAccessErrors)
{
  auto s = constant_simplicial(symmetric3(), 2);
  EXPECT_THROW(s.level(3), TruncationExceeded);
  EXPECT_THROW(s.d(0, 0), TruncationExceeded);
  EXPECT_THROW(s.d(1, 2), IndexOutOfRange);
  EXPECT_THROW(s.s(2, 0), TruncationExceeded);
}
