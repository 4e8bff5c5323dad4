#include "grouper/report.hpp"

#include "grouper/error.hpp"

namespace grouper
{

namespace
{

Json optional_json(std::optional<bool> const &value)
{ return value ? Json(*value) : Json(nullptr); }

Json optional_json(std::optional<std::size_t> const &value)
{ return value ? Json(*value) : Json(nullptr); }

bool scalar_array(Json const &value)
{
  if (!value.is_array() || value.empty())
    return false;
  for (auto const &item : value)
    if (item.is_structured())
      return false;
  return true;
}

std::string scalar_text(Json const &value)
{
  if (value.is_string())
    return value.get<std::string>();
  if (value.is_null())
    return "n/a";
  return value.dump();
}

void render_into(std::string &out, std::string const &path, Json const &value)
{
  if (value.is_object()) {
    for (auto const &[key, item] : value.items())
      render_into(out, path.empty() ? key : path + "." + key, item);
    return;
  }
  if (value.is_array()) {
    if (scalar_array(value)) {
      std::string line;
      for (auto const &item : value)
        line += (line.empty() ? "" : ", ") + scalar_text(item);
      out += path + ": [" + line + "]\n";
      return;
    }
    out += path + ": " + std::to_string(value.size()) + "\n";
    for (std::size_t i = 0; i < value.size(); ++i)
      render_into(out, path + "[" + std::to_string(i) + "]", value[i]);
    return;
  }
  out += path + ": " + scalar_text(value) + "\n";
}

} // anonymous namespace

std::string Renderer::element(GroupPtr const &group, Element x)
{
  if (group->perm_rep().empty())
    return std::to_string(x);
  auto it = _perms.find(group.get());
  if (it == _perms.end()) {
    _pinned.push_back(group);
    it = _perms.emplace(group.get(), element_permutations(*group)).first;
  }
  return it->second[x].str();
}

Json Renderer::group(GroupPtr const &group)
{ return {{"name", group->name()}, {"order", group->order()}}; }

Json Renderer::hom(GroupHom const &hom)
{
  Json images = Json::array();
  Json cycles = Json::array();
  for (auto g : hom.source()->generators()) {
    images.push_back(hom(g));
    cycles.push_back(element(hom.target(), hom(g)));
  }
  Json result{{"images", images},
              {"injective", hom.is_injective()},
              {"surjective", hom.is_surjective()}};
  if (!hom.target()->perm_rep().empty())
    result["permutations"] = cycles;
  return result;
}

Json Renderer::subgroup_summary(Subgroup const &subgroup)
{
  auto embedded = subgroup_as_group(subgroup);
  return {{"order", subgroup.order()}, {"structure", structure_name(embedded.group)}};
}

Json Renderer::classification(ClassificationReport const &report)
{
  Json flags = Json::object();
  for (auto flag : ALL_FLAGS)
    flags[flag_key(flag)] = report.flags[flag];

  auto witness_json = [&](Witness const &w) {
    Json maps = Json::array();
    for (auto const &m : w.maps)
      maps.push_back(hom(m));
    return Json{{"condition", w.condition}, {"kind", witness_kind_name(w.kind)}, {"maps", maps}};
  };

  Json witnesses = Json::array();
  for (auto const &w : report.witnesses)
    witnesses.push_back(witness_json(w));

  Json result{{"source", group(report.hom.source())},
              {"target", group(report.hom.target())},
              {"hom", hom(report.hom)},
              {"flags", flags},
              {"galois", subgroup_summary(report.galois)},
              {"coGalois", subgroup_summary(report.co_galois)},
              {"witnesses", witnesses}};

  if (report.relative) {
    auto const &v = *report.relative;
    Json rw = Json::array();
    for (auto const &w : v.witnesses)
      rw.push_back(witness_json(w));
    result["relative"] = {{"class", v.class_name},
                          {"side", v.side == ClassSide::envelope ? "envelope" : "cover"},
                          {"member", v.member},
                          {"pre", v.pre},
                          {"full", v.full},
                          {"uniqueLiftings", v.unique_liftings},
                          {"witnesses", rw}};
  }
  return result;
}

Json Renderer::criterion(CriterionReport const &report)
{
  auto structural = [&](GroupPtr const &g, StructuralFlags const &f) {
    auto j = group(g);
    j["simple"] = f.simple;
    j["perfect"] = f.perfect;
    j["complete"] = f.complete;
    return j;
  };

  return {{"inclusion", hom(report.inclusion)},
          {"source", structural(report.inclusion.source(), report.source)},
          {"target", structural(report.inclusion.target(), report.target)},
          {"applicable", report.applicable},
          {"condition1", report.condition1},
          {"condition2", report.condition2},
          {"copies", report.copies},
          {"predictedGaloisOrder", report.predicted_galois_order},
          {"directEnvelope", optional_json(report.direct_envelope)},
          {"directLocalization", optional_json(report.direct_localization)},
          {"galoisOrder", optional_json(report.galois_order)},
          {"conjugateInTarget", optional_json(report.conjugate_in_target)},
          {"homomorphicExtension", optional_json(report.homomorphic_extension)},
          {"consistent", optional_json(report.consistent)}};
}

Json Renderer::suite(SuiteReport const &report)
{
  Json violations = Json::array();
  for (auto const &v : report.violations)
    violations.push_back({{"subject", v.subject}, {"hom", v.hom}, {"law", v.law}});
  Json skipped = Json::array();
  for (auto const &s : report.skipped)
    skipped.push_back({{"subject", s.subject}, {"reason", s.reason}});
  Json notes = Json::object();
  for (auto const &[key, count] : report.notes)
    notes[key] = count;

  return {{"suite", report.suite},
          {"totalPairs", report.total_pairs},
          {"pairsExamined", report.pairs_examined},
          {"homsClassified", report.homs_classified},
          {"violations", violations},
          {"skipped", skipped},
          {"notes", notes}};
}

std::string render_text(Json const &value)
{
  std::string out;
  render_into(out, "", value);
  return out;
}

std::string render(Json const &value, std::string const &format)
{
  if (format == "json")
    return value.dump(2) + "\n";
  if (format == "text")
    return render_text(value);
  throw Error("unknown-format", "unknown output format '" + format + "'");
}

} // namespace grouper
