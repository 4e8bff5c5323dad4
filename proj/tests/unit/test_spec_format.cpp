#include "grouper/spec_format.hpp"

#include "../helpers.hpp"

using namespace grouper;
using testing_support::error_code;

namespace
{

std::string error_message(std::string_view text)
{
  try {
    parse_group_spec(text);
  } catch (Error const &e) {
    return e.what();
  }
  return "";
}

} // anonymous namespace

TEST(ParseGroupSpec, KleinFromPermutations)
{
  auto spec = parse_group_spec("(1 2)(3 4)\n(1 3)(2 4)\n");
  EXPECT_EQ(spec.kind, SpecKind::permutations);
  EXPECT_EQ(spec.name, "G");
  EXPECT_FALSE(spec.named);
  EXPECT_EQ(spec.payload.size(), 2u);
  auto g = build_group(spec);
  EXPECT_EQ(g->order(), 4u);
  EXPECT_TRUE(g->is_abelian());
}

TEST(ParseGroupSpec, NamedWithComments)
{
  auto spec = parse_group_spec("# the Klein group\nname: Klein\n\n(1 2)(3 4)  # first\n(1 3)(2 4)\n");
  EXPECT_EQ(spec.name, "Klein");
  EXPECT_TRUE(spec.named);
  EXPECT_EQ(build_group(spec)->name(), "Klein");
}

TEST(ParseGroupSpec, FamilyLine)
{
  auto spec = parse_group_spec("dihedral:6\n");
  EXPECT_EQ(spec.kind, SpecKind::family);
  EXPECT_EQ(spec.name, "D_6");
  EXPECT_EQ(build_group(spec)->order(), 6u);

  auto named = build_group(parse_group_spec("name: Tri\nsymmetric:3"));
  EXPECT_EQ(named->name(), "Tri");
  EXPECT_EQ(named->order(), 6u);
}

TEST(ParseGroupSpec, Errors)
{
  EXPECT_EQ(error_code([] { parse_group_spec("(1 2\n"); }), "parse-error");
  EXPECT_EQ(error_code([] { parse_group_spec("(1 1)\n"); }), "malformed-cycle");
  EXPECT_EQ(error_code([] { parse_group_spec("(0 1)\n"); }), "malformed-cycle");
  EXPECT_EQ(error_code([] { parse_group_spec("wreath:3\n"); }), "unknown-family");
  EXPECT_EQ(error_code([] { parse_group_spec("(1 2)\ncyclic:3\n"); }), "parse-error");
  EXPECT_EQ(error_code([] { parse_group_spec("(1 x)\n"); }), "parse-error");

  auto msg = error_message("name: K\n(1 2)\n(1 2 2)\n");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(ParseCycles, Notation)
{
  EXPECT_TRUE(parse_cycles("()").is_id());
  EXPECT_EQ(parse_cycles("(1 2 3)(4 5)").order(), 6u);
  EXPECT_EQ(parse_cycles("( 1  2 )").str(), "(1 2)");
  // cycles within one generator must be disjoint
  EXPECT_EQ(error_code([] { parse_cycles("(1 2)(2 3)"); }), "malformed-cycle");
}

TEST(EmitGroupSpec, RoundTrip)
{
  for (char const *text : {"(1 2)(3 4)\n(1 3)(2 4)\n", "name: Klein\n(1 2)(3 4)\n(1 3)(2 4)\n",
                           "quaternion8\n", "name: P\nproduct:cyclic:2,symmetric:3\n"}) {
    auto spec = parse_group_spec(text);
    auto again = parse_group_spec(emit_group_spec(spec));
    EXPECT_EQ(again.name, spec.name) << text;
    EXPECT_EQ(again.kind, spec.kind);
    EXPECT_EQ(again.payload, spec.payload);
    EXPECT_EQ(again.named, spec.named);
    EXPECT_EQ(emit_group_spec(again), emit_group_spec(spec));
  }
}

TEST(ParseGroupSpec, WhitespaceInsensitive)
{
  auto a = build_group(parse_group_spec("(1 2 3 4 5)\n(1 2 3)"));
  auto b = build_group(parse_group_spec("  \t(1  2 3 4 5)   \n\n\n   (1 2 3)\t\n"));
  EXPECT_EQ(a->order(), 60u);
  EXPECT_EQ(a->table(), b->table());
}
