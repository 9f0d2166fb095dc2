#include <gtest/gtest.h>

#include <set>

#include "peiffer/fixtures.hpp"

using namespace peiffer;

namespace
{

// Every element as a raw image vector, found by brute-force closure.
std::set<std::vector<unsigned>> brute_closure(std::vector<Permutation> const &gens,
                                              unsigned degree)
{
  std::set<std::vector<unsigned>> seen{Permutation::identity(degree).to_vector()};
  std::vector<Permutation> todo{Permutation::identity(degree)};
  while (!todo.empty()) {
    auto p = todo.back();
    todo.pop_back();
    for (auto const &g : gens) {
      auto q = g * p;
      if (seen.insert(q.to_vector()).second)
        todo.push_back(q);
    }
  }
  return seen;
}

Permutation cyc(unsigned n, std::initializer_list<std::initializer_list<unsigned>> c)
{ return Permutation::from_cycles(n, c); }

} // namespace

TEST(Permutation, ComposesRightToLeft)
{
  auto a = cyc(3, {{0, 1}});
  auto b = cyc(3, {{1, 2}});
  auto ab = a * b;
  for (unsigned i = 0; i < 3; ++i)
    EXPECT_EQ(ab[i], a[b[i]]);
  EXPECT_EQ(ab.to_cycle_string(), "(0 1 2)");
}

TEST(Permutation, InverseAndIdentity)
{
  auto p = cyc(5, {{0, 3, 1}, {2, 4}});
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_TRUE((p.inverse() * p).is_identity());
  EXPECT_FALSE(p.is_identity());
}

TEST(Permutation, RejectsNonBijections)
{
  EXPECT_THROW(Permutation::from_images(std::vector<int>{0, 0, 1}), BadPermutation);
  EXPECT_THROW(Permutation::from_images(std::vector<int>{0, 3, 1}), BadPermutation);
  EXPECT_THROW(cyc(3, {{0, 5}}), BadPermutation);
}

TEST(FiniteGroup, ClosureMatchesBruteForce)
{
  std::vector<std::pair<std::vector<Permutation>, unsigned>> cases = {
    {{cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})}, 3},
    {{cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})}, 4},
    {{cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})}, 4},
    {{cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4}, {0, 1}})}, 6},
    {{}, 2},
  };
  for (auto const &[gens, deg] : cases) {
    auto g = closure(gens, deg);
    auto oracle = brute_closure(gens, deg);
    ASSERT_EQ(g->order(), oracle.size());
    std::set<std::vector<unsigned>> got;
    for (ElemId e = 0; e < g->order(); ++e)
      got.insert(g->element(e).to_vector());
    EXPECT_EQ(got, oracle);
    EXPECT_TRUE(g->element(0).is_identity());
  }
}

TEST(FiniteGroup, ArithmeticAgreesWithPermutations)
{
  auto g = dihedral4();
  for (ElemId a = 0; a < g->order(); ++a) {
    EXPECT_EQ(g->element(g->inv(a)), g->element(a).inverse());
    for (ElemId b = 0; b < g->order(); ++b) {
      auto pa = g->element(a), pb = g->element(b);
      EXPECT_EQ(g->element(g->mul(a, b)), pa * pb);
      EXPECT_EQ(g->element(g->commutator(a, b)),
                pa * pb * pa.inverse() * pb.inverse());
      EXPECT_EQ(g->element(g->conj(a, b)), pa * pb * pa.inverse());
    }
  }
}

TEST(FiniteGroup, OrderCap)
{
  EXPECT_THROW(closure({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1}})}, 5, 100),
               OrderCapExceeded);
  EXPECT_EQ(closure({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1}})}, 5, 120)->order(), 120u);
}

TEST(Homomorphism, EdgeCheckAgreesWithAllPairs)
{
  auto s3 = symmetric3();
  auto c2 = closure({cyc(2, {{0, 1}})}, 2);
  // sign: r -> 1, t -> (0 1)
  auto sign = Homomorphism::from_generator_images(
    s3, c2, {Permutation::identity(2), cyc(2, {{0, 1}})});
  EXPECT_TRUE(sign.verify_all_pairs());
  EXPECT_EQ(kernel(sign).order(), 3u);
  // r -> (0 1) is not a homomorphism on S3 since r has order 3.
  EXPECT_THROW(Homomorphism::from_generator_images(
                 s3, c2, {cyc(2, {{0, 1}}), Permutation::identity(2)}),
               HomomorphismInvalid);
}

TEST(Homomorphism, FromMapRejectsNonHomomorphisms)
{
  auto d4 = dihedral4();
  auto r = element(d4, Permutation::from_cycles(4, {{0, 1, 2, 3}}));
  // Fixes r and sends everything else to 1; r r = r^2 is then sent to 1.
  std::vector<ElemId> map(d4->order(), FiniteGroup::identity());
  map[r] = r;
  EXPECT_THROW(Homomorphism::from_map(d4, d4, map), HomomorphismInvalid);
  std::vector<ElemId> id(d4->order());
  for (ElemId e = 0; e < id.size(); ++e)
    id[e] = e;
  EXPECT_NO_THROW(Homomorphism::from_map(d4, d4, id));
}

TEST(Subgroup, CommutatorAndNormalClosure)
{
  auto s3 = symmetric3();
  auto all = Subgroup::whole(s3);
  auto derived = commutator_subgroup(all, all);
  // Brute force: every commutator of S3 generates A3.
  std::set<ElemId> comms;
  for (ElemId a = 0; a < 6; ++a)
    for (ElemId b = 0; b < 6; ++b)
      comms.insert(s3->commutator(a, b));
  EXPECT_EQ(comms.size(), 3u);
  EXPECT_EQ(derived.order(), 3u);
  for (auto c : comms)
    EXPECT_TRUE(derived.contains(c));
  EXPECT_TRUE(derived.is_normal());

  std::vector<ElemId> t{element(s3, cyc(3, {{0, 1}}))};
  EXPECT_EQ(Subgroup::generated(s3, t).order(), 2u);
  EXPECT_FALSE(Subgroup::generated(s3, t).is_normal());
  EXPECT_EQ(normal_closure(s3, t).order(), 6u);
}

TEST(Subgroup, IntersectAndEmbed)
{
  auto d4 = dihedral4();
  auto rot = d4_rotations(d4);
  auto kl = d4_klein(d4);
  auto both = intersect(rot, kl);
  EXPECT_EQ(both.order(), 2u);
  for (ElemId e = 0; e < d4->order(); ++e)
    EXPECT_EQ(both.contains(e), rot.contains(e) && kl.contains(e));

  auto em = embed(kl);
  EXPECT_EQ(em.group->order(), 4u);
  EXPECT_TRUE(em.inclusion.is_injective());
  for (auto e : kl.elements())
    EXPECT_EQ(em.to_parent(em.from_parent(e)), e);
  EXPECT_THROW(Subgroup::from_elements(d4, {0, 1}), Error);
}

TEST(DirectProduct, PairsAndProjections)
{
  auto s3 = symmetric3();
  auto d4 = dihedral4();
  auto dp = direct_product(s3, d4);
  EXPECT_EQ(dp.group->order(), 48u);
  for (ElemId x = 0; x < 6; ++x)
    for (ElemId y = 0; y < 8; ++y) {
      auto z = dp.pair(x, y);
      EXPECT_EQ(dp.proj_left(z), x);
      EXPECT_EQ(dp.proj_right(z), y);
    }
}

TEST(Isomorphism, DistinguishesSmallGroups)
{
  auto c4 = closure({cyc(4, {{0, 1, 2, 3}})}, 4);
  auto v4 = closure({cyc(4, {{0, 1}}), cyc(4, {{2, 3}})}, 4);
  auto v4b = closure({cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})}, 4);
  EXPECT_FALSE(is_isomorphic(c4, v4));
  EXPECT_TRUE(is_isomorphic(v4, v4b));
  auto s3b = closure({cyc(6, {{0, 1}, {2, 3}, {4, 5}}), cyc(6, {{0, 2, 4}, {1, 5, 3}})}, 6);
  ASSERT_EQ(s3b->order(), 6u);
  auto f = find_isomorphism(symmetric3(), s3b);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(f->is_bijective());
  EXPECT_TRUE(f->verify_all_pairs());

  std::size_t autos = 0;
  auto d4 = dihedral4();
  for_each_isomorphism(d4, d4, [&](Homomorphism const &) { ++autos; return true; });
  EXPECT_EQ(autos, 8u);
}

TEST(GroupAction, ConjugationAndPullback)
{
  auto d4 = dihedral4();
  auto act = GroupAction::conjugation(d4);
  for (ElemId p = 0; p < 8; ++p)
    for (ElemId x = 0; x < 8; ++x)
      EXPECT_EQ(act(p, x), d4->mul(d4->mul(p, x), d4->inv(p)));
  auto autos = act.generator_automorphisms();
  auto rebuilt = GroupAction::from_generators(d4, d4, autos);
  for (ElemId p = 0; p < 8; ++p)
    for (ElemId x = 0; x < 8; ++x)
      EXPECT_EQ(rebuilt(p, x), act(p, x));

  auto em = embed(d4_rotations(d4));
  auto pb = GroupAction::pullback(act, em.inclusion);
  for (ElemId q = 0; q < em.group->order(); ++q)
    for (ElemId x = 0; x < 8; ++x)
      EXPECT_EQ(pb(q, x), act(em.to_parent(q), x));
}
