#include <gtest/gtest.h>

#include <functional>

#include "peiffer/surjections.hpp"

using namespace peiffer;

namespace
{

// alpha_i : [k] -> [k-1] repeats i.
unsigned alpha(unsigned i, unsigned j)
{ return j <= i ? j : j - 1; }

// The word alpha_{w_0} o ... o alpha_{w_k} on [n] evaluated letter by letter.
std::vector<unsigned> evaluate_word(std::vector<unsigned> const &w, unsigned n)
{
  std::vector<unsigned> f(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    auto v = j;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      v = alpha(*it, v);
    f[j] = v;
  }
  return f;
}

// Every composable word of the given length on [n].
void for_each_word(unsigned n, unsigned len,
                   std::function<void(std::vector<unsigned> const &)> const &fn)
{
  std::vector<unsigned> w(len);
  std::function<void(unsigned)> rec = [&](unsigned k) {
    if (k == len) {
      fn(w);
      return;
    }
    auto level = n - (len - 1 - k);
    for (unsigned i = 0; i < level; ++i) {
      w[k] = i;
      rec(k + 1);
    }
  };
  rec(0);
}

unsigned binom(unsigned n, unsigned r)
{
  unsigned v = 1;
  for (unsigned k = 1; k <= r; ++k)
    v = v * (n - r + k) / k;
  return v;
}

} // namespace

TEST(Surjections, EnumerateCounts)
{
  for (unsigned n = 0; n <= 5; ++n) {
    auto all = enumerate_S(n);
    EXPECT_EQ(all.size(), 1u << n);
    std::vector<unsigned> by_len(n + 1, 0);
    for (auto const &s : all)
      ++by_len[s.length()];
    for (unsigned r = 0; r <= n; ++r)
      EXPECT_EQ(by_len[r], binom(n, r));
  }
}

TEST(Surjections, EnumerateSmallLevels)
{
  auto s0 = enumerate_S(0);
  ASSERT_EQ(s0.size(), 1u);
  EXPECT_TRUE(s0[0].is_empty());
  std::vector<std::string> s2;
  for (auto const &s : enumerate_S(2))
    s2.push_back(s.to_string());
  EXPECT_EQ(s2, (std::vector<std::string>{"()", "(1)", "(0)", "(1,0)"}));
}

TEST(Surjections, TupleIsMonotoneSurjection)
{
  for (unsigned n = 0; n <= 4; ++n)
    for (auto const &s : enumerate_S(n)) {
      auto f = s.as_function();
      EXPECT_EQ(f.front(), 0u);
      EXPECT_EQ(f.back(), s.target());
      for (unsigned j = 1; j <= n; ++j)
        EXPECT_TRUE(f[j] == f[j - 1] || f[j] == f[j - 1] + 1);
      // The tuple is the word alpha_{i_1} ... alpha_{i_r} itself.
      EXPECT_EQ(f, evaluate_word(s.ascending(), n));
    }
}

TEST(Surjections, CanonicalizeAgreesWithEvaluation)
{
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned len = 0; len <= n; ++len)
      for_each_word(n, len, [&](std::vector<unsigned> const &w) {
        auto c = canonicalize(w, n);
        EXPECT_EQ(c.length(), len);
        EXPECT_EQ(c.as_function(), evaluate_word(w, n));
        EXPECT_EQ(canonicalize(c.ascending(), n), c);
      });
}

TEST(Surjections, CanonicalizeExamples)
{
  EXPECT_TRUE(canonicalize({}, 3).is_empty());
  // alpha_1 alpha_0 = alpha_0 alpha_2, displayed (2,0).
  EXPECT_EQ(canonicalize({1, 0}, 3).to_string(), "(2,0)");
  // alpha_0 alpha_2 is already increasing from the right.
  EXPECT_EQ(canonicalize({0, 2}, 3).to_string(), "(2,0)");
  // alpha_1 alpha_1 on [3] becomes alpha_1 alpha_2.
  EXPECT_EQ(canonicalize({1, 1}, 3).to_string(), "(2,1)");
  EXPECT_THROW(canonicalize({2, 2}, 3), InvalidWord);
  EXPECT_THROW(canonicalize({0, 0, 0}, 2), InvalidWord);
}

TEST(Surjections, LeqIsPartialOrder)
{
  for (unsigned n = 0; n <= 4; ++n) {
    auto all = enumerate_S(n);
    for (auto const &a : all) {
      EXPECT_TRUE(leq(a, a));
      for (auto const &b : all) {
        bool pointwise = true;
        for (unsigned i = 0; i <= n; ++i)
          pointwise = pointwise && a(i) >= b(i);
        EXPECT_EQ(leq(a, b), pointwise);
        if (leq(a, b) && leq(b, a))
          EXPECT_EQ(a, b);
        for (auto const &c : all)
          if (leq(a, b) && leq(b, c))
            EXPECT_TRUE(leq(a, c));
      }
    }
  }
}

TEST(Surjections, LeqExamples)
{
  auto e1 = SurjectionTuple::empty(1);
  auto z1 = SurjectionTuple::parse(1, "(0)");
  EXPECT_TRUE(leq(e1, z1));
  EXPECT_FALSE(leq(z1, e1));
  auto e2 = SurjectionTuple::empty(2);
  auto a0 = SurjectionTuple::parse(2, "(0)");
  auto a1 = SurjectionTuple::parse(2, "(1)");
  EXPECT_TRUE(leq(e2, a0));
  EXPECT_TRUE(leq(e2, a1));
  // alpha_1 = (0,1,1) lies above alpha_0 = (0,0,1) pointwise.
  EXPECT_TRUE(leq(a1, a0));
  EXPECT_FALSE(leq(a0, a1));
  EXPECT_THROW(leq(e1, e2), LevelMismatch);
}

TEST(Surjections, ParseAndDisplay)
{
  for (unsigned n = 0; n <= 4; ++n)
    for (auto const &s : enumerate_S(n))
      EXPECT_EQ(SurjectionTuple::parse(n, s.to_string()), s);
  EXPECT_EQ(SurjectionTuple::parse(3, "(2, 0)").ascending(),
            (std::vector<unsigned>{0, 2}));
  EXPECT_THROW(SurjectionTuple::parse(3, "(0,2)"), InvalidWord);
  EXPECT_THROW(SurjectionTuple::parse(2, "(2)"), IndexOutOfRange);
  EXPECT_THROW(SurjectionTuple::parse(2, "0"), ParseError);
  EXPECT_THROW(SurjectionTuple::parse(2, "(a)"), ParseError);
}

TEST(Surjections, PairIndices)
{
  EXPECT_EQ(enumerate_S(2, 1).size(), 8u);
  auto p = parse_pair(1, 2, "((0),(1,0))");
  EXPECT_EQ(p.first.to_string(), "(0)");
  EXPECT_EQ(p.second.to_string(), "(1,0)");
  EXPECT_EQ(parse_pair(1, 1, "((),())").to_string(), "((),())");
  for (auto const &a : enumerate_S(1, 2))
    for (auto const &b : enumerate_S(1, 2))
      EXPECT_EQ(leq(a, b), leq(a.first, b.first) && leq(a.second, b.second));
  EXPECT_THROW(parse_pair(1, 1, "(0)"), ParseError);
}
