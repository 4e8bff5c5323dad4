#ifndef GUARD_GROUPER_REPORT_H
#define GUARD_GROUPER_REPORT_H

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "approx.hpp"
#include "corpus.hpp"
#include "simple_criterion.hpp"

/// JSON and text renderings of the report types. Object keys are emitted
/// in sorted order and nothing time-dependent is included, so identical
/// inputs render to identical bytes.

namespace grouper
{

using Json = nlohmann::json;

// Caches element permutations so homs can be shown in cycle notation.
class Renderer
{
public:
  Json group(GroupPtr const &group);
  Json hom(GroupHom const &hom);
  Json subgroup_summary(Subgroup const &subgroup);
  Json classification(ClassificationReport const &report);
  Json criterion(CriterionReport const &report);
  Json suite(SuiteReport const &report);

  // cycle notation of an element, or its index without a permutation action
  std::string element(GroupPtr const &group, Element x);

private:
  std::map<FiniteGroup const *, std::vector<Permutation>> _perms;
  std::vector<GroupPtr> _pinned;
};

// Deterministic line-oriented rendering: "path: value" for scalars,
// inline lists for non-empty scalar arrays, and "path: count" followed by
// the members for other arrays.
std::string render_text(Json const &value);

// "json" or "text"; throws "unknown-format" otherwise
std::string render(Json const &value, std::string const &format);

} // namespace grouper

#endif // GUARD_GROUPER_REPORT_H
