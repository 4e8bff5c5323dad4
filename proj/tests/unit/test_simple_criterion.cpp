#include <map>
#include <set>

#include "grouper/simple_criterion.hpp"

#include "../helpers.hpp"

using namespace grouper;
using testing_support::el;
using testing_support::error_code;
using testing_support::group;

namespace
{

GroupHom first_embedding(GroupPtr const &h, GroupPtr const &g, HomEngine &engine)
{
  for (auto const &f : engine.homs(h, g)->homs())
    if (f.is_injective())
      return f;
  throw std::logic_error("no embedding");
}

} // anonymous namespace

TEST(StructuralFlags, SpecExamples)
{
  HomEngine engine;
  auto a5 = structural_flags(group("alternating:5"), engine);
  EXPECT_TRUE(a5.simple);
  EXPECT_TRUE(a5.perfect);
  EXPECT_FALSE(a5.complete); // outer automorphism from S_5

  auto s3 = structural_flags(group("symmetric:3"), engine);
  EXPECT_FALSE(s3.simple);
  EXPECT_FALSE(s3.perfect);
  EXPECT_TRUE(s3.complete);

  auto z6 = structural_flags(group("cyclic:6"), engine);
  EXPECT_FALSE(z6.simple);
  EXPECT_FALSE(z6.perfect);
  EXPECT_FALSE(z6.complete);

  EXPECT_TRUE(structural_flags(group("cyclic:5"), engine).simple);
  EXPECT_FALSE(structural_flags(group("trivial"), engine).simple);
  EXPECT_TRUE(structural_flags(group("symmetric:4"), engine).complete);
}

TEST(SubgroupsIsomorphicTo, SpecExamples)
{
  HomEngine engine;
  EXPECT_EQ(subgroups_isomorphic_to(group("symmetric:5"), group("alternating:5"), engine).size(), 1u);
  EXPECT_EQ(subgroups_isomorphic_to(group("symmetric:3"), group("cyclic:2"), engine).size(), 3u);
  EXPECT_TRUE(subgroups_isomorphic_to(group("symmetric:3"), group("cyclic:5"), engine).empty());
  // A_4 has one Klein four-subgroup, S_4 has four
  auto klein = group("product:cyclic:2,cyclic:2");
  EXPECT_EQ(subgroups_isomorphic_to(group("alternating:4"), klein, engine).size(), 1u);
  EXPECT_EQ(subgroups_isomorphic_to(group("symmetric:4"), klein, engine).size(), 4u);
}

TEST(AutomorphismOrbits, PartitionCopies)
{
  HomEngine engine;
  auto s4 = group("symmetric:4");
  auto copies = subgroups_isomorphic_to(s4, group("product:cyclic:2,cyclic:2"), engine);
  auto labels = automorphism_orbits(*engine.automorphisms(s4), copies);
  ASSERT_EQ(labels.size(), copies.size());
  // the normal Klein group is alone in its orbit; the other three are conjugate
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    EXPECT_LE(labels[i], i);
    EXPECT_EQ(labels[labels[i]], labels[i]);
    ++sizes[labels[i]];
  }
  std::multiset<std::size_t> shape;
  for (auto [label, n] : sizes)
    shape.insert(n);
  EXPECT_EQ(shape, (std::multiset<std::size_t>{1, 3}));
}

TEST(SimpleEnvelopeCriterion, A5InA6)
{
  HomEngine engine;
  auto inclusion = first_embedding(group("alternating:5"), group("alternating:6"), engine);
  auto r = simple_envelope_criterion(inclusion, engine);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.condition1);
  EXPECT_TRUE(r.condition2);
  EXPECT_EQ(r.copies, 12u);
  EXPECT_EQ(r.predicted_galois_order, 1u);
  EXPECT_EQ(r.direct_envelope, true);
  EXPECT_EQ(r.galois_order, 1u);
  EXPECT_EQ(r.consistent, true);
}

TEST(SimpleEnvelopeCriterion, NotApplicableOutsideSimpleGroups)
{
  HomEngine engine;
  auto a5 = group("alternating:5");
  auto s5 = group("symmetric:5");
  auto r = simple_envelope_criterion(first_embedding(a5, s5, engine), engine);
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.consistent);
  EXPECT_EQ(r.direct_envelope, true);

  auto s3 = group("symmetric:3");
  auto c3 = hom_from_generator_images(group("cyclic:3"), s3, std::vector<Element>{el(s3, "(1 2 3)")});
  EXPECT_FALSE(simple_envelope_criterion(c3, engine).applicable);

  auto twice = hom_from_generator_images(group("cyclic:4"), group("cyclic:2"), std::vector<Element>{1});
  EXPECT_EQ(error_code([&] { simple_envelope_criterion(twice, engine); }), "non-injective");
}
