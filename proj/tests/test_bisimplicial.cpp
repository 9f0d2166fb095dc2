#include <gtest/gtest.h>

#include <set>

#include "peiffer/fixtures.hpp"

using namespace peiffer;

namespace
{

std::size_t brute_moore_order(BisimplicialGroupTrunc const &g, unsigned n, unsigned m)
{
  std::size_t k = 0;
  for (ElemId x = 0; x < g.level(n, m)->order(); ++x) {
    bool in = true;
    for (unsigned i = 0; i < n; ++i)
      in = in && g.dh(n, m, i)(x) == FiniteGroup::identity();
    for (unsigned j = 0; j < m; ++j)
      in = in && g.dv(n, m, j)(x) == FiniteGroup::identity();
    k += in;
  }
  return k;
}

// Horizontal and vertical operators commute, checked element by element.
bool operators_commute(BisimplicialGroupTrunc const &g)
{
  for (unsigned p = 1; p <= g.max_p; ++p)
    for (unsigned q = 1; q <= g.max_q; ++q)
      for (ElemId x = 0; x < g.level(p, q)->order(); ++x)
        for (unsigned i = 0; i <= p; ++i)
          for (unsigned j = 0; j <= q; ++j)
            if (g.dh(p, q - 1, i)(g.dv(p, q, j)(x)) != g.dv(p - 1, q, j)(g.dh(p, q, i)(x)))
              return false;
  return true;
}

// A (p+1) x (q+1) matrix over D4 lies in the D4 grid iff entries in a
// column agree mod <r^2,s> and entries in a row agree mod <r>.
std::size_t brute_grid_order(unsigned p, unsigned q)
{
  auto d4 = dihedral4();
  auto H = d4_klein(d4);
  auto V = d4_rotations(d4);
  std::size_t cells = (p + 1) * (q + 1), count = 0;
  std::vector<ElemId> a(cells, 0);
  while (true) {
    bool ok = true;
    for (unsigned i = 0; i <= p && ok; ++i)
      for (unsigned j = 0; j <= q && ok; ++j) {
        auto x = a[i * (q + 1) + j];
        if (i > 0)
          ok = H.contains(d4->mul(x, d4->inv(a[(i - 1) * (q + 1) + j])));
        if (ok && j > 0)
          ok = V.contains(d4->mul(x, d4->inv(a[i * (q + 1) + j - 1])));
      }
    count += ok;
    std::size_t k = 0;
    while (k < cells && ++a[k] == 8)
      a[k++] = 0;
    if (k == cells)
      return count;
  }
}

} // namespace

TEST(Bisimplicial, FixturesVerify)
{
  for (auto const &g : {constant_s3_grid(), external_product_grid(), d4_grid()}) {
    auto rep = verify_bisimplicial(g);
    EXPECT_TRUE(rep.ok()) << rep.to_text();
    EXPECT_TRUE(operators_commute(g));
  }
}

TEST(Bisimplicial, D4GridOrdersMatchMatrixCount)
{
  auto g = d4_grid(2, 1);
  for (unsigned p = 0; p <= 2; ++p)
    for (unsigned q = 0; q <= 1; ++q)
      EXPECT_EQ(g.level(p, q)->order(), brute_grid_order(p, q)) << p << "," << q;
  EXPECT_EQ(g.level(0, 0)->order(), 8u);
  EXPECT_EQ(g.level(1, 1)->order(), 256u);
}

TEST(Bisimplicial, MooreCellsMatchBruteForce)
{
  for (auto const &g : {external_product_grid(), d4_grid()})
    for (unsigned n = 0; n <= 2; ++n)
      for (unsigned m = 0; m <= 2; ++m)
        EXPECT_EQ(moore_subgroup(g, n, m).order(), brute_moore_order(g, n, m));
  auto g = d4_grid();
  EXPECT_EQ(moore_subgroup(g, 0, 1).order(), 4u);
  EXPECT_EQ(moore_subgroup(g, 1, 0).order(), 4u);
  EXPECT_EQ(moore_subgroup(g, 1, 1).order(), 2u);
  EXPECT_TRUE(moore_subgroup(g, 2, 2).is_trivial());
}

TEST(Bisimplicial, OrderFactorization)
{
  for (auto const &g : {constant_s3_grid(), external_product_grid(), d4_grid()}) {
    auto rep = order_factorization_check(g);
    EXPECT_TRUE(rep.ok()) << rep.to_text();
    // Independent product over S(n) x S(m).
    for (unsigned n = 0; n <= g.max_p; ++n)
      for (unsigned m = 0; m <= g.max_q; ++m) {
        std::size_t prod = 1;
        for (auto const &a : enumerate_S(n))
          for (auto const &b : enumerate_S(m))
            prod *= brute_moore_order(g, a.target(), b.target());
        EXPECT_EQ(prod, g.level(n, m)->order());
      }
  }
  auto ep = external_product_grid();
  EXPECT_EQ(ep.level(1, 1)->order(), 324u);
  EXPECT_EQ(brute_moore_order(ep, 0, 0), 36u);
  EXPECT_EQ(brute_moore_order(ep, 1, 0), 3u);
  EXPECT_EQ(brute_moore_order(ep, 0, 1), 3u);
  EXPECT_EQ(brute_moore_order(ep, 1, 1), 1u);
}

TEST(Bisimplicial, DegeneracyCompositesAreInjective)
{
  auto g = d4_grid();
  for (unsigned n = 0; n <= 2; ++n)
    for (auto const &a : enumerate_S(n))
      for (unsigned other = 0; other <= 2; ++other) {
        auto h = degeneracy_composite(g, Direction::horizontal, a, other);
        auto v = degeneracy_composite(g, Direction::vertical, a, other);
        EXPECT_TRUE(h.is_injective());
        EXPECT_TRUE(v.is_injective());
        if (a.length() == 2)
          for (ElemId x = 0; x < g.level(0, other)->order(); ++x)
            EXPECT_EQ(h(x), g.sh(1, other, 1)(g.sh(0, other, 0)(x)));
      }
}

TEST(Bisimplicial, KernelIntersection)
{
  auto g = d4_grid();
  auto k = kernel_intersection(g, 1, 2, Direction::vertical, {0, 2}, true);
  for (ElemId x = 0; x < g.level(1, 2)->order(); ++x) {
    bool in = g.dv(1, 2, 0)(x) == 0 && g.dv(1, 2, 2)(x) == 0 && g.dh(1, 2, 0)(x) == 0;
    EXPECT_EQ(k.contains(x), in);
  }
  EXPECT_THROW(kernel_intersection(g, 1, 2, Direction::vertical, {3}, false),
               IndexOutOfRange);
}

TEST(Bisimplicial, RowsAndColumnsAreSimplicial)
{
  auto g = d4_grid();
  for (unsigned k = 0; k <= 2; ++k) {
    EXPECT_TRUE(verify_simplicial(row(g, k)).ok());
    EXPECT_TRUE(verify_simplicial(column(g, k)).ok());
  }
}

TEST(Bisimplicial, BrokenFaceFailsExactly)
{
  auto rep = verify_bisimplicial(broken_face_grid());
  auto names = rep.failures();
  std::set<std::string> fails(names.begin(), names.end());
  std::set<std::string> expected = {
    "vertical d_j s_j = d_{j+1} s_j = id from (0,0)",
    "sh_i dv_j = dv_j sh_i from (0,1)",
    "dh_i dv_j = dv_j dh_i from (1,1)",
  };
  EXPECT_EQ(fails, expected);
  for (auto const &c : rep.checks)
    if (c.failed())
      EXPECT_FALSE(c.witnesses.empty()) << c.name;
}

TEST(Bisimplicial, LevelAccessErrors)
{
  auto g = d4_grid(1, 1);
  EXPECT_THROW(g.level(2, 0), TruncationExceeded);
  EXPECT_THROW(g.sh(1, 0, 0), TruncationExceeded);
  EXPECT_THROW(g.dv(0, 1, 2), IndexOutOfRange);
}
