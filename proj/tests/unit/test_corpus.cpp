#include <set>

#include "grouper/corpus.hpp"

#include "../helpers.hpp"

using namespace grouper;
using testing_support::error_code;
using testing_support::group;

namespace
{

std::vector<std::string> names(std::vector<GroupPtr> const &groups)
{
  std::vector<std::string> out;
  for (auto const &g : groups)
    out.push_back(g->name());
  return out;
}

} // anonymous namespace

TEST(GenerateCorpus, SpecExamples)
{
  EXPECT_EQ(names(generate_corpus(5)),
            (std::vector<std::string>{"trivial", "Z/2", "Z/3", "Z/2xZ/2", "Z/4", "Z/5"}));
  auto six = names(generate_corpus(6));
  EXPECT_EQ(std::count(six.begin(), six.end(), "S_3"), 1);
  EXPECT_EQ(std::count(six.begin(), six.end(), "D_6"), 0);
  auto sixty = names(generate_corpus(60));
  EXPECT_EQ(std::count(sixty.begin(), sixty.end(), "A_5"), 1);
  EXPECT_EQ(error_code([] { generate_corpus(513); }), "size-cap");
}

TEST(GenerateCorpus, SortedAndPairwiseNonIsomorphic)
{
  auto corpus = generate_corpus(32);
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    auto const &a = corpus[i - 1];
    auto const &b = corpus[i];
    EXPECT_TRUE(a->order() < b->order() || (a->order() == b->order() && a->name() < b->name()));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j)
      if (corpus[i]->order() == corpus[j]->order())
        EXPECT_FALSE(are_isomorphic(corpus[i], corpus[j]))
            << corpus[i]->name() << " " << corpus[j]->name();
  EXPECT_EQ(names(generate_corpus(32)), names(corpus));
}

TEST(StructureName, Examples)
{
  EXPECT_EQ(structure_name(group("trivial")), "trivial");
  EXPECT_EQ(structure_name(group("product:cyclic:2,cyclic:3")), "Z/6");
  EXPECT_EQ(structure_name(group("product:cyclic:4,cyclic:6")), "Z/2xZ/12");
  EXPECT_EQ(structure_name(group("dihedral:6")), "S_3");
  EXPECT_EQ(structure_name(group("quaternion8")), "Q_8");
}

TEST(PairCost, CountsGeneratorImages)
{
  EXPECT_EQ(pair_cost(*group("cyclic:4"), *group("symmetric:3")), 6.0);
  EXPECT_EQ(pair_cost(*group("symmetric:3"), *group("cyclic:5")), 25.0);
}

TEST(TheoremSuites, HoldOnSmallCorpus)
{
  HomEngine engine;
  auto corpus = generate_corpus(12);
  for (auto const &suite : suite_ids()) {
    if (suite == "lemmas")
      continue;
    auto r = run_theorem_suite(corpus, suite, engine, {4, false});
    EXPECT_EQ(r.suite, suite);
    EXPECT_EQ(r.pairs_examined + r.skipped.size(), r.total_pairs) << suite;
    EXPECT_GT(r.pairs_examined, 0u) << suite;
    for (auto const &v : r.violations)
      if (suite != "socle-cover" || v.law.find("as stated") == std::string::npos)
        ADD_FAILURE() << suite << ": " << v.subject << " " << v.hom << " " << v.law;
  }
}

TEST(TheoremSuites, SocleCoverAsStatedNeedsSourceInClass)
{
  // id: S_3 → S_3 is a cover for {Z/2}, but the {Z/2}-socle of S_3 is all of S_3
  HomEngine engine;
  auto r = run_theorem_suite({group("trivial"), group("cyclic:2"), group("symmetric:3")},
                             "socle-cover", engine);
  bool found = false;
  for (auto const &v : r.violations)
    found |= v.law.find("as stated") != std::string::npos;
  EXPECT_TRUE(found);
  for (auto const &v : r.violations)
    EXPECT_EQ(v.law.find("with H in F"), std::string::npos) << v.subject << " " << v.hom;
}

TEST(TheoremSuites, LemmasOnSmallCorpus)
{
  HomEngine engine;
  auto r = run_theorem_suite(generate_corpus(8), "lemmas", engine, {2, false});
  for (auto const &v : r.violations)
    // only the written form of the second identity is expected to fail
    EXPECT_NE(v.law.find("identities-b:"), std::string::npos) << v.subject << " " << v.law;
  EXPECT_TRUE(r.skipped.empty());
}

TEST(TheoremSuites, IndependentOfJobsAndTimingOptIn)
{
  auto corpus = generate_corpus(10);
  HomEngine a, b;
  auto one = run_theorem_suite(corpus, "galois", a, {1, false});
  auto many = run_theorem_suite(corpus, "galois", b, {8, true});
  EXPECT_EQ(one.violations, many.violations);
  EXPECT_EQ(one.skipped, many.skipped);
  EXPECT_EQ(one.notes, many.notes);
  EXPECT_EQ(one.homs_classified, many.homs_classified);
  EXPECT_TRUE(one.timings.empty());
  EXPECT_FALSE(many.timings.empty());
}

TEST(TheoremSuites, UnknownSuite)
{
  HomEngine engine;
  EXPECT_EQ(error_code([&] { run_theorem_suite(generate_corpus(4), "everything", engine); }),
            "unknown-suite");
}

TEST(SearchApproximations, SpecExamples)
{
  HomEngine engine;
  auto z4 = group("cyclic:4");
  auto z8 = group("cyclic:8");
  auto envelopes = search_approximations(z4, z8, SearchKind::envelope, false, engine);
  ASSERT_EQ(envelopes.size(), 2u);
  for (auto const &f : envelopes)
    EXPECT_TRUE(f.is_injective());
  EXPECT_LT(engine.homs(z4, z8)->index_of(envelopes[0]), engine.homs(z4, z8)->index_of(envelopes[1]));

  auto s3 = group("symmetric:3");
  auto z2 = group("cyclic:2");
  auto locs = search_approximations(s3, z2, SearchKind::localization, false, engine);
  ASSERT_EQ(locs.size(), 1u); // the sign map
  EXPECT_TRUE(locs[0].is_surjective());
  EXPECT_TRUE(search_approximations(s3, z2, SearchKind::localization, true, engine).empty());

  EXPECT_EQ(parse_search_kind("cellular"), SearchKind::cellular);
  EXPECT_EQ(search_kind_name(SearchKind::cover), "cover");
  EXPECT_EQ(error_code([] { parse_search_kind("reflection"); }), "unknown-kind");
}

TEST(HomLabel, ListsGeneratorImages)
{
  auto z4 = group("cyclic:4");
  EXPECT_EQ(hom_label(identity_hom(z4)), "[1]");
  EXPECT_EQ(hom_label(trivial_hom(z4, z4)), "[0]");
}
