#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "grouper/approx.hpp"
#include "grouper/commutator.hpp"
#include "grouper/corpus.hpp"
#include "grouper/error.hpp"
#include "grouper/families.hpp"
#include "grouper/homs.hpp"
#include "grouper/report.hpp"
#include "grouper/simple_criterion.hpp"
#include "grouper/spec_format.hpp"

using namespace grouper;

namespace
{

struct Settings
{
  std::string format = "text";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string cache;
  bool timing = false;
  std::optional<std::string> assertion; // "" for a bare --assert
};

struct AssertFailed
{
  std::string message;
};

std::optional<std::string> read_file_if_exists(std::string const &arg)
{
  std::error_code ec;
  if (arg.empty() || !std::filesystem::is_regular_file(arg, ec))
    return std::nullopt;
  std::ifstream in(arg, std::ios::binary);
  if (!in)
    throw Error("io-error", "cannot read " + arg);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string inline_text(std::string text)
{
  std::replace(text.begin(), text.end(), ';', '\n');
  return text;
}

// Group arguments name a spec file when one exists, else are spec text.
class GroupResolver
{
public:
  GroupPtr resolve(std::string const &arg)
  {
    if (auto it = _seen.find(arg); it != _seen.end())
      return it->second;

    GroupSpecFile spec;
    if (auto text = read_file_if_exists(arg)) {
      spec = parse_group_spec(*text);
      if (!spec.named && spec.kind == SpecKind::permutations) {
        spec.name = std::filesystem::path(arg).stem().string();
        spec.named = true;
      }
    } else {
      spec = parse_group_spec(inline_text(arg));
    }
    auto group = build_group(spec);
    _seen.emplace(arg, group);
    return group;
  }

private:
  std::map<std::string, GroupPtr> _seen;
};

// One image per line or ';'-separated: an element index or cycle notation.
GroupHom resolve_hom(std::string const &arg, GroupPtr const &source, GroupPtr const &target)
{
  auto text = read_file_if_exists(arg).value_or(inline_text(arg));
  std::vector<Element> images;
  std::istringstream lines(text);
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(lines, raw)) {
    ++line_number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    auto last = raw.find_last_not_of(" \t\r");
    auto item = raw.substr(first, last - first + 1);

    if (std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      auto value = std::stoul(item);
      if (value >= target->order())
        throw Error("invalid-hom", "line " + std::to_string(line_number) +
                                   ": element index " + item + " out of range");
      images.push_back(static_cast<Element>(value));
      continue;
    }
    if (target->perm_rep().empty())
      throw Error("invalid-hom", target->name() + " has no permutation action; use element indices");
    auto perm = parse_cycles(item, line_number, first + 1);
    auto x = find_permutation(*target, perm);
    if (!x)
      throw Error("invalid-hom", "line " + std::to_string(line_number) + ": " + item +
                                 " is not an element of " + target->name());
    images.push_back(*x);
  }
  return hom_from_generator_images(source, target, images);
}

// Comma-separated descriptors; a product: item absorbs the rest of the
// list, so use ';' or repeat --class when a product is not last.
GroupClass resolve_class(std::vector<std::string> const &args, GroupResolver &groups)
{
  std::vector<GroupPtr> members;
  for (auto const &arg : args) {
    std::vector<std::string> items;
    char separator = arg.find(';') != std::string::npos ? ';' : ',';
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      auto end = arg.find(separator, pos);
      auto item = arg.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      auto first = item.find_first_not_of(" \t");
      if (first != std::string::npos && separator == ',' &&
          item.compare(first, 8, "product:") == 0) {
        items.push_back(arg.substr(pos));
        break;
      }
      if (first != std::string::npos)
        items.push_back(item);
      if (end == std::string::npos)
        break;
      pos = end + 1;
    }
    for (auto const &item : items)
      members.push_back(groups.resolve(item));
  }
  if (members.empty())
    throw Error("empty-class", "--class needs at least one group");
  return GroupClass::of(std::move(members));
}

Json const *lookup(Json const &value, std::string const &path)
{
  Json const *node = &value;
  std::size_t pos = 0;
  while (pos <= path.size()) {
    auto end = path.find('.', pos);
    auto key = path.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (!node->is_object() || !node->contains(key))
      return nullptr;
    node = &(*node)[key];
    if (end == std::string::npos)
      break;
    pos = end + 1;
  }
  return node;
}

// FLAG is a flag key (isEnvelope) or a dotted path (relative.pre); a
// leading '!' asserts the flag is false.
void assert_flag(Json const &report, std::string flag)
{
  bool expected = true;
  if (!flag.empty() && flag.front() == '!') {
    expected = false;
    flag.erase(0, 1);
  }
  Json const *value = nullptr;
  if (flag.find('.') == std::string::npos)
    value = lookup(report, "flags." + flag);
  if (!value)
    value = lookup(report, flag);
  if (!value || !value->is_boolean())
    throw Error("unknown-flag", "no boolean field '" + flag + "' in the report");
  if (value->get<bool>() != expected)
    throw AssertFailed{(expected ? "" : "!") + flag};
}

void emit(Json result, Settings const &settings,
          std::chrono::steady_clock::time_point start, Json timings = Json::object())
{
  if (settings.timing) {
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    timings["total"] = seconds;
    result["timing"] = timings;
  }
  std::cout << render(result, settings.format);
}

Json group_details(Renderer &renderer, GroupPtr const &group)
{
  auto result = renderer.group(group);
  Json gens = Json::array();
  for (auto g : group->generators())
    gens.push_back(renderer.element(group, g));
  unsigned exponent = 1;
  for (auto order : group->element_orders())
    exponent = std::lcm(exponent, order);
  auto nc = nilpotency_class(group);

  result["generators"] = gens;
  result["abelian"] = group->is_abelian();
  result["exponent"] = exponent;
  result["centerOrder"] = center(group).order();
  result["nilpotent"] = nc.has_value();
  result["nilpotencyClass"] = nc ? Json(*nc) : Json(nullptr);
  result["structure"] = structure_name(group);
  return result;
}

} // anonymous namespace

int main(int argc, char **argv)
{
  CLI::App app{"Approximations of finite group homomorphisms"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all");

  Settings settings;
  app.add_option("--format", settings.format, "Output format: text or json");
  app.add_option("--jobs", settings.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache", settings.cache, "Hom-set cache directory (default $GROUPER_CACHE)");
  app.add_flag("--timing", settings.timing, "Add a separate timing field");
  std::string assertion;
  auto assert_option = app.add_option("--assert", assertion,
                                      "Exit 1 unless FLAG holds (prefix ! to negate); bare: "
                                      "subcommand default")
                           ->expected(0, 1);

  std::string h_arg, g_arg, hom_arg, side_arg, kind_arg, suite_arg;
  std::vector<std::string> class_args;
  bool injective = false;
  std::size_t max_order = 16;

  auto group_cmd = app.add_subcommand("group", "Parse and describe a group");
  group_cmd->add_option("G", g_arg, "Group spec file or inline spec")->required();

  auto homs_cmd = app.add_subcommand("homs", "Enumerate Hom(H,G)");
  homs_cmd->add_option("H", h_arg)->required();
  homs_cmd->add_option("G", g_arg)->required();

  auto classify_cmd = app.add_subcommand("classify", "Classify homomorphisms H -> G");
  classify_cmd->add_option("H", h_arg)->required();
  classify_cmd->add_option("G", g_arg)->required();
  classify_cmd->add_option("--hom", hom_arg, "Generator images (file or inline)");
  classify_cmd->add_option("--class", class_args, "Class members, comma-separated");
  classify_cmd->add_option("--side", side_arg, "envelope or cover (with --class)")
      ->check(CLI::IsMember({"envelope", "cover"}));
  classify_cmd->add_flag("--injective", injective, "Only injective homs");

  auto galois_cmd = app.add_subcommand("galois", "Galois or co-Galois group of H -> G");
  galois_cmd->add_option("H", h_arg)->required();
  galois_cmd->add_option("G", g_arg)->required();
  galois_cmd->add_option("--hom", hom_arg);
  galois_cmd->add_option("--side", side_arg, "target (Galois) or source (co-Galois)")
      ->check(CLI::IsMember({"target", "source"}));

  auto socle_cmd = app.add_subcommand("socle", "Class socle of G");
  socle_cmd->add_option("G", g_arg)->required();
  socle_cmd->add_option("--class", class_args)->required();

  auto radical_cmd = app.add_subcommand("radical", "Class radical of G");
  radical_cmd->add_option("G", g_arg)->required();
  radical_cmd->add_option("--class", class_args)->required();

  auto orthogonal_cmd = app.add_subcommand("orthogonal", "Orthogonality of H -> G to a class");
  orthogonal_cmd->add_option("H", h_arg)->required();
  orthogonal_cmd->add_option("G", g_arg)->required();
  orthogonal_cmd->add_option("--hom", hom_arg)->required();
  orthogonal_cmd->add_option("--class", class_args)->required();

  auto criterion_cmd = app.add_subcommand("simple-criterion",
                                          "Envelope criterion for an inclusion of simple groups");
  criterion_cmd->add_option("H", h_arg)->required();
  criterion_cmd->add_option("G", g_arg)->required();
  criterion_cmd->add_option("--hom", hom_arg, "Default: first injective hom");

  auto verify_cmd = app.add_subcommand("verify", "Run a theorem suite over the corpus");
  verify_cmd->add_option("--suite", suite_arg)->required();
  verify_cmd->add_option("--max-order", max_order)->required();

  auto search_cmd = app.add_subcommand("search", "Homs H -> G carrying a flag");
  search_cmd->add_option("H", h_arg)->required();
  search_cmd->add_option("G", g_arg)->required();
  search_cmd->add_option("--kind", kind_arg, "envelope, cover, localization, cellular")
      ->required();
  search_cmd->add_flag("--injective", injective);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }
  if (assert_option->count() > 0)
    settings.assertion = assertion;

  auto start = std::chrono::steady_clock::now();
  try {
    if (settings.format != "text" && settings.format != "json")
      throw Error("unknown-format", "unknown output format '" + settings.format + "'");

    EngineOptions engine_options;
    engine_options.jobs = settings.jobs;
    if (!settings.cache.empty())
      engine_options.cache_dir = settings.cache;
    else if (char const *env = std::getenv("GROUPER_CACHE"); env && *env)
      engine_options.cache_dir = std::string(env);
    HomEngine engine(engine_options);
    GroupResolver groups;
    Renderer renderer;

    // a bare --assert has a per-subcommand meaning; FLAG checks one field
    auto check = [&](Json const &report, std::string const &bare_path) {
      if (!settings.assertion)
        return;
      if (!settings.assertion->empty())
        assert_flag(report, *settings.assertion);
      else if (bare_path.empty())
        throw Error("missing-flag", "this subcommand needs --assert=FLAG");
      else
        assert_flag(report, bare_path);
    };

    if (group_cmd->parsed()) {
      auto g = groups.resolve(g_arg);
      auto result = group_details(renderer, g);
      check(result, "");
      emit(result, settings, start);
    } else if (homs_cmd->parsed()) {
      auto h = groups.resolve(h_arg);
      auto g = groups.resolve(g_arg);
      auto set = engine.homs(h, g);
      Json homs = Json::array();
      for (auto const &f : set->homs())
        homs.push_back(renderer.hom(f));
      Json result{{"source", renderer.group(h)},
                  {"target", renderer.group(g)},
                  {"count", set->size()},
                  {"homs", homs}};
      check(result, "");
      emit(result, settings, start);
    } else if (classify_cmd->parsed()) {
      auto h = groups.resolve(h_arg);
      auto g = groups.resolve(g_arg);
      std::optional<GroupClass> cls;
      if (!class_args.empty())
        cls = resolve_class(class_args, groups);
      else if (!side_arg.empty())
        throw Error("missing-class", "--side needs --class");
      auto side = side_arg == "cover" ? ClassSide::cover : ClassSide::envelope;

      auto classify = [&](GroupHom const &f) {
        auto report = cls ? classify_against_class(f, *cls, side, engine) : classify_hom(f, engine);
        return renderer.classification(report);
      };

      if (!hom_arg.empty()) {
        auto result = classify(resolve_hom(hom_arg, h, g));
        check(result, "");
        emit(result, settings, start);
      } else {
        auto set = engine.homs(h, g);
        Json reports = Json::array();
        for (auto const &f : set->homs())
          if (!injective || f.is_injective())
            reports.push_back(classify(f));
        if (settings.assertion) {
          if (settings.assertion->empty())
            throw Error("missing-flag", "classify needs --assert=FLAG");
          for (auto const &r : reports)
            assert_flag(r, *settings.assertion);
        }
        emit(Json{{"source", renderer.group(h)},
                  {"target", renderer.group(g)},
                  {"count", reports.size()},
                  {"reports", reports}},
             settings, start);
      }
    } else if (galois_cmd->parsed()) {
      auto h = groups.resolve(h_arg);
      auto g = groups.resolve(g_arg);
      auto side = side_arg == "source" ? GaloisSide::source : GaloisSide::target;
      auto one = [&](GroupHom const &f) {
        return Json{{"source", renderer.group(h)},
                    {"target", renderer.group(g)},
                    {"hom", renderer.hom(f)},
                    {"side", side == GaloisSide::source ? "source" : "target"},
                    {"galois", renderer.subgroup_summary(galois_group(f, side, engine))}};
      };
      if (!hom_arg.empty()) {
        auto result = one(resolve_hom(hom_arg, h, g));
        check(result, "");
        emit(result, settings, start);
      } else {
        Json reports = Json::array();
        for (auto const &f : engine.homs(h, g)->homs())
          reports.push_back(one(f));
        Json result{{"source", renderer.group(h)},
                    {"target", renderer.group(g)},
                    {"count", reports.size()},
                    {"reports", reports}};
        check(result, "");
        emit(result, settings, start);
      }
    } else if (socle_cmd->parsed()) {
      auto g = groups.resolve(g_arg);
      auto cls = resolve_class(class_args, groups);
      auto socle = class_socle(g, cls, engine);
      Json result{{"group", renderer.group(g)},
                  {"class", cls.name},
                  {"socle", renderer.subgroup_summary(socle)},
                  {"normal", socle.is_normal()}};
      check(result, "");
      emit(result, settings, start);
    } else if (radical_cmd->parsed()) {
      auto g = groups.resolve(g_arg);
      auto cls = resolve_class(class_args, groups);
      auto radical = class_radical(g, cls, engine);
      Json chain = Json::array();
      for (auto const &t : radical.chain)
        chain.push_back(t.order());
      Json result{{"group", renderer.group(g)},
                  {"class", cls.name},
                  {"radical", renderer.subgroup_summary(radical.radical)},
                  {"chain", chain},
                  {"quotient",
                   {{"order", radical.epireflection.group->order()},
                    {"structure", structure_name(radical.epireflection.group)}}}};
      check(result, "");
      emit(result, settings, start);
    } else if (orthogonal_cmd->parsed()) {
      auto h = groups.resolve(h_arg);
      auto g = groups.resolve(g_arg);
      auto f = resolve_hom(hom_arg, h, g);
      auto cls = resolve_class(class_args, groups);
      bool orthogonal = is_orthogonal(f, cls, engine);
      auto reflection = orthogonal_epireflection(h, cls, engine);
      Json result{{"hom", renderer.hom(f)},
                  {"class", cls.name},
                  {"orthogonal", orthogonal},
                  {"surjective", f.is_surjective()},
                  {"orthogonalEpi", orthogonal && f.is_surjective()},
                  {"sourceReflection",
                   {{"kernel", renderer.subgroup_summary(reflection.kernel)},
                    {"quotient",
                     {{"order", reflection.quotient.group->order()},
                      {"structure", structure_name(reflection.quotient.group)}}}}}};
      check(result, "orthogonal");
      emit(result, settings, start);
    } else if (criterion_cmd->parsed()) {
      auto h = groups.resolve(h_arg);
      auto g = groups.resolve(g_arg);
      std::optional<GroupHom> inclusion;
      if (!hom_arg.empty()) {
        inclusion = resolve_hom(hom_arg, h, g);
      } else {
        for (auto const &f : engine.homs(h, g)->homs())
          if (f.is_injective()) {
            inclusion = f;
            break;
          }
        if (!inclusion)
          throw Error("non-injective", "no injective hom " + h->name() + " -> " + g->name());
      }
      auto result = renderer.criterion(simple_envelope_criterion(*inclusion, engine));
      check(result, "consistent");
      emit(result, settings, start);
    } else if (verify_cmd->parsed()) {
      auto corpus = generate_corpus(max_order);
      SuiteOptions options;
      options.jobs = settings.jobs;
      options.timing = settings.timing;
      auto report = run_theorem_suite(corpus, suite_arg, engine, options);
      auto result = renderer.suite(report);
      result["maxOrder"] = max_order;
      result["corpusSize"] = corpus.size();
      Json timings = Json::object();
      for (auto const &[key, seconds] : report.timings)
        timings[key] = seconds;
      if (settings.assertion) {
        if (settings.assertion->empty()) {
          if (!report.violations.empty())
            throw AssertFailed{std::to_string(report.violations.size()) + " violations"};
        } else {
          assert_flag(result, *settings.assertion);
        }
      }
      emit(result, settings, start, timings);
    } else if (search_cmd->parsed()) {
      auto h = groups.resolve(h_arg);
      auto g = groups.resolve(g_arg);
      auto kind = parse_search_kind(kind_arg);
      auto found = search_approximations(h, g, kind, injective, engine);
      Json homs = Json::array();
      for (auto const &f : found)
        homs.push_back(renderer.hom(f));
      Json result{{"source", renderer.group(h)},
                  {"target", renderer.group(g)},
                  {"kind", search_kind_name(kind)},
                  {"injectiveOnly", injective},
                  {"count", found.size()},
                  {"homs", homs}};
      if (settings.assertion) {
        if (settings.assertion->empty()) {
          if (found.empty())
            throw AssertFailed{"no " + search_kind_name(kind) + " found"};
        } else {
          assert_flag(result, *settings.assertion);
        }
      }
      emit(result, settings, start);
    }
  } catch (AssertFailed const &e) {
    std::cerr << "error: assert-failed: " << e.message << "\n";
    return 1;
  } catch (Error const &e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
