#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "grouper/report.hpp"

#include "../helpers.hpp"

using namespace grouper;
using testing_support::error_code;
using testing_support::group;

namespace
{

struct Run
{
  int status;
  std::string out;
};

// stdout and stderr together
Run cli(std::string const &args)
{
  std::string cmd = std::string(GROUPER_CLI) + " " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    throw std::runtime_error("popen failed");
  Run run{0, ""};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    run.out.append(buf.data(), n);
  int raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return run;
}

Json cli_json(std::string const &args)
{
  auto run = cli("--format json " + args);
  EXPECT_EQ(run.status, 0) << run.out;
  return Json::parse(run.out);
}

} // anonymous namespace

TEST(RenderText, PathsAndArrays)
{
  Json doc = {{"a", {{"b", 1}, {"c", "x"}}},
              {"list", Json::array({1, 2})},
              {"none", nullptr},
              {"empty", Json::array()},
              {"objs", Json::array({{{"k", true}}})}};
  auto text = render_text(doc);
  EXPECT_NE(text.find("a.b: 1\n"), std::string::npos) << text;
  EXPECT_NE(text.find("a.c: x\n"), std::string::npos);
  EXPECT_NE(text.find("list: [1, 2]\n"), std::string::npos);
  EXPECT_NE(text.find("none: n/a\n"), std::string::npos);
  EXPECT_NE(text.find("empty: 0\n"), std::string::npos);
  EXPECT_NE(text.find("objs: 1\nobjs[0].k: true\n"), std::string::npos);
  EXPECT_EQ(render(doc, "json"), doc.dump(2) + "\n");
  EXPECT_EQ(error_code([&] { render(doc, "yaml"); }), "unknown-format");
}

TEST(Renderer, IdentityClassification)
{
  HomEngine engine;
  auto s3 = group("symmetric:3");
  Renderer r;
  auto doc = r.classification(classify_hom(identity_hom(s3), engine));
  for (auto flag : ALL_FLAGS)
    EXPECT_EQ(doc.at("flags").at(flag_key(flag)), true);
  EXPECT_EQ(doc.at("galois").at("order"), 1);
  EXPECT_EQ(doc.at("hom").at("permutations"), Json::array({"(1 2)", "(1 2 3)"}));
  EXPECT_TRUE(doc.at("witnesses").empty());
}

TEST(Cli, ClassifyInclusion)
{
  auto doc = cli_json("classify cyclic:3 symmetric:3 --hom '(1 2 3)'");
  EXPECT_EQ(doc.at("flags").at("isEnvelope"), true);
  EXPECT_EQ(doc.at("flags").at("isLocalization"), false);
  EXPECT_EQ(doc.at("galois").at("order"), 3);

  auto text = cli("classify cyclic:3 symmetric:3 --hom '(1 2 3)' --format text");
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("galois.order: 3\n"), std::string::npos) << text.out;
}

TEST(Cli, ClassifyAllHoms)
{
  auto doc = cli_json("classify cyclic:2 cyclic:4");
  EXPECT_EQ(doc.at("count"), 2);
  EXPECT_EQ(doc.at("reports").size(), 2u);
}

TEST(Cli, VerifyPrintsViolationCount)
{
  auto run = cli("verify --suite cogalois --max-order 6");
  EXPECT_EQ(run.status, 0);
  EXPECT_NE(run.out.find("violations: 0\n"), std::string::npos) << run.out;
  EXPECT_EQ(cli("verify --suite cogalois --max-order 6 --assert").status, 0);
}

TEST(Cli, GroupFromFile)
{
  auto path = std::filesystem::temp_directory_path() / "grouper-klein.txt";
  std::ofstream(path) << "# four group\n(1 2)(3 4)\n(1 3)(2 4)\n";
  auto doc = cli_json("group " + path.string());
  EXPECT_EQ(doc.at("order"), 4);
  EXPECT_EQ(doc.at("name"), "grouper-klein");
  EXPECT_EQ(doc.at("abelian"), true);
  std::filesystem::remove(path);

  auto inline_spec = cli_json("group 'name: K;(1 2)(3 4);(1 3)(2 4)'");
  EXPECT_EQ(inline_spec.at("name"), "K");
}

TEST(Cli, SocleRadicalOrthogonal)
{
  EXPECT_EQ(cli_json("socle symmetric:3 --class cyclic:3").at("socle").at("order"), 3);
  auto radical = cli_json("radical cyclic:4 --class cyclic:2");
  EXPECT_EQ(radical.at("radical").at("order"), 4);
  EXPECT_EQ(radical.at("chain"), Json::array({2, 4}));
  EXPECT_EQ(cli("orthogonal cyclic:4 cyclic:2 --hom 1 --class cyclic:3 --assert").status, 0);
  EXPECT_EQ(cli("orthogonal cyclic:2 cyclic:4 --hom 2 --class cyclic:4 --assert").status, 1);
}

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(cli("classify cyclic:2 cyclic:2 --hom 1 --assert=isLocalization").status, 0);

  auto failed = cli("classify cyclic:2 cyclic:4 --hom 2 --assert=isLocalization");
  EXPECT_EQ(failed.status, 1);
  EXPECT_NE(failed.out.find("error: assert-failed"), std::string::npos) << failed.out;
  EXPECT_EQ(cli("classify cyclic:2 cyclic:4 --hom 2 --assert='!isLocalization'").status, 0);

  auto bad = cli("group wreath:2");
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.out.find("error: unknown-family"), std::string::npos) << bad.out;

  EXPECT_EQ(cli("classify cyclic:2 cyclic:4 --hom 1").status, 2);
  EXPECT_EQ(cli("verify --suite nothing --max-order 4").status, 2);
  EXPECT_EQ(cli("bogus").status, 2);
  EXPECT_EQ(cli("--help").status, 0);
}

TEST(Cli, JobsDoNotChangeOutput)
{
  auto one = cli("--jobs 1 --format json verify --suite galois --max-order 12");
  auto many = cli("--jobs 8 --format json verify --suite galois --max-order 12");
  EXPECT_EQ(one.status, 0);
  EXPECT_EQ(one.out, many.out);
}
