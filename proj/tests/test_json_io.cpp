#include <gtest/gtest.h>

#include "peiffer/fixtures.hpp"
#include "peiffer/json_io.hpp"

using namespace peiffer;

namespace
{

std::string fixture(std::string const &name)
{ return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

bool same_maps(std::vector<std::vector<Homomorphism>> const &a,
               std::vector<std::vector<Homomorphism>> const &b)
{
  if (a.size() != b.size())
    return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].size() != b[k].size())
      return false;
    for (std::size_t i = 0; i < a[k].size(); ++i)
      if (a[k][i].map() != b[k][i].map())
        return false;
  }
  return true;
}

void expect_same_grid(BisimplicialGroupTrunc const &a, BisimplicialGroupTrunc const &b)
{
  ASSERT_EQ(a.max_p, b.max_p);
  ASSERT_EQ(a.max_q, b.max_q);
  for (std::size_t k = 0; k < a.levels.size(); ++k) {
    ASSERT_EQ(a.levels[k]->order(), b.levels[k]->order());
    for (ElemId e = 0; e < a.levels[k]->order(); ++e)
      ASSERT_EQ(a.levels[k]->element(e), b.levels[k]->element(e));
  }
  EXPECT_TRUE(same_maps(a.dh_maps, b.dh_maps));
  EXPECT_TRUE(same_maps(a.sh_maps, b.sh_maps));
  EXPECT_TRUE(same_maps(a.dv_maps, b.dv_maps));
  EXPECT_TRUE(same_maps(a.sv_maps, b.sv_maps));
}

} // namespace

TEST(JsonIo, GroupAndHomomorphismRoundTrip)
{
  auto d4 = dihedral4();
  auto g = group_from_json(json::parse(to_json(*d4).dump()));
  EXPECT_EQ(g->order(), 8u);
  EXPECT_TRUE(is_isomorphic(g, d4));

  auto x = c3_in_s3();
  auto f = hom_from_json(json::parse(to_json(x.boundary).dump()));
  EXPECT_EQ(f.domain()->order(), 3u);
  EXPECT_EQ(f.codomain()->order(), 6u);
  EXPECT_TRUE(f.is_injective());
}

TEST(JsonIo, GridRoundTrip)
{
  for (auto const &g : {constant_s3_grid(), external_product_grid(), d4_grid()})
    expect_same_grid(from_grid_spec(json::parse(to_json(g).dump())), g);
}

TEST(JsonIo, SimplicialRoundTrip)
{
  auto s = nerve(c3_in_s3(), 3);
  auto t = simplicial_from_json(json::parse(to_json(s).dump()));
  EXPECT_EQ(t.max_level, 3u);
  EXPECT_TRUE(verify_simplicial(t).ok());
  for (unsigned n = 0; n <= 3; ++n)
    EXPECT_EQ(moore(t, n).order(), moore(s, n).order());
}

TEST(JsonIo, CrossedStructuresRoundTrip)
{
  auto x = c3_in_s3();
  EXPECT_TRUE(is_isomorphic(crossed_module_from_json(to_json(x)), x));
  auto sq = d4_normal_pair_square();
  EXPECT_TRUE(is_isomorphic(crossed_square_from_json(to_json(sq)), sq));
  auto cone = mapping_cone(sq);
  EXPECT_TRUE(is_isomorphic(two_crossed_from_json(to_json(cone)), cone));
}

TEST(JsonIo, CommittedFixturesLoad)
{
  expect_same_grid(from_grid_spec(read_json_file(fixture("d4_grid"))), d4_grid());
  expect_same_grid(from_grid_spec(read_json_file(fixture("external_product"))),
                   external_product_grid());
  expect_same_grid(from_grid_spec(read_json_file(fixture("constant_s3"))),
                   constant_s3_grid());
  EXPECT_TRUE(check_crossed_module(
                crossed_module_from_json(read_json_file(fixture("c3_s3")))).ok());
  EXPECT_TRUE(check_crossed_square(
                crossed_square_from_json(read_json_file(fixture("d4_normal_pair")))).ok());
  EXPECT_TRUE(check_two_crossed_module(
                two_crossed_from_json(read_json_file(fixture("d4_cone")))).ok());
  auto nerve_fx = simplicial_from_json(read_json_file(fixture("nerve_c3_s3")));
  EXPECT_TRUE(verify_simplicial(nerve_fx).ok());
}

TEST(JsonIo, BrokenFaceIsRejectedByGridSpec)
{
  auto j = read_json_file(fixture("broken_face"));
  EXPECT_NO_THROW(bisimplicial_from_json(j));
  EXPECT_THROW(from_grid_spec(j), IdentityViolation);
}

TEST(JsonIo, MalformedInput)
{
  EXPECT_THROW(read_json_file(fixture("does_not_exist")), ParseError);
  EXPECT_THROW(group_from_json(json::parse(R"({"kind":"group","degree":3})")),
               ParseError);
  EXPECT_THROW(group_from_json(json::parse(R"({"degree":3,"generators":[[0,0,1]]})")),
               BadPermutation);
  EXPECT_THROW(group_from_json(json::parse(R"({"degree":3,"generators":[[1,0]]})")),
               ParseError);
  EXPECT_THROW(crossed_module_from_json(to_json(*symmetric3())), ParseError);
  auto x = to_json(c3_in_s3());
  x["boundary"] = json::array({json::array({1, 0, 2})});
  EXPECT_THROW(crossed_module_from_json(x), HomomorphismInvalid);
}

TEST(JsonIo, ReportCarriesWitnesses)
{
  auto rep = check_crossed_module(with_trivial_action(c3_in_s3()));
  auto j = json::parse(to_json(rep).dump());
  EXPECT_EQ(j["summary"]["fail"], 1);
  bool found = false;
  for (auto const &c : j["checks"])
    if (c["name"] == "CM1") {
      found = true;
      EXPECT_EQ(c["status"], "FAIL");
      EXPECT_FALSE(c["witnesses"].empty());
    }
  EXPECT_TRUE(found);
  EXPECT_FALSE(j.contains("wall_seconds"));
}
