#include "extension_plan.hpp"

#include <deque>
#include <limits>

namespace grouper
{

namespace internal
{

ExtensionPlan::ExtensionPlan(FiniteGroup const &source,
                             std::vector<Element> generators)
: _generators(std::move(generators)),
  _identity(source.identity()),
  _order(source.order())
{
  std::vector<bool> reached(source.order(), false);
  std::vector<Element> members{source.identity()};
  reached[source.identity()] = true;

  for (std::size_t t = 0; t < _generators.size(); ++t) {
    std::vector<ExtensionStep> steps;
    std::vector<bool> is_old(source.order(), false);
    for (auto m : members)
      is_old[m] = true;

    // members grows while we walk it, which makes the walk a BFS of the
    // closure of the old members under right multiplication by s_0..s_t
    for (std::size_t i = 0; i < members.size(); ++i) {
      Element h = members[i];
      for (std::size_t g = 0; g <= t; ++g) {
        if (is_old[h] && g < t)
          continue;

        Element dst = source.mul(h, _generators[g]);
        bool check = reached[dst];
        if (!check) {
          reached[dst] = true;
          members.push_back(dst);
        }
        steps.push_back({dst, h, static_cast<std::uint8_t>(g), check});
      }
    }

    _levels.push_back(std::move(steps));
  }
}

ExtensionSearch::ExtensionSearch(ExtensionPlan const &plan,
                                 FiniteGroup const &target,
                                 bool injective)
: _plan(plan),
  _target(target),
  _injective(injective),
  _images(plan.source_order(), std::numeric_limits<Element>::max()),
  _gen_images(plan.levels()),
  _used(target.order(), 0),
  _assigned(plan.levels())
{
  _images[plan.source_identity()] = target.identity();
  if (_injective)
    _used[target.identity()] = 1;
}

bool ExtensionSearch::apply_level(std::size_t t, Element image)
{
  _gen_images[t] = image;
  auto &assigned = _assigned[t];
  assigned.clear();

  for (auto const &step : _plan.level(t)) {
    Element value = _target.mul(_images[step.src], _gen_images[step.gen]);
    if (step.check) {
      if (_images[step.dst] != value)
        return false;
    } else {
      if (_injective) {
        if (_used[value])
          return false;
        _used[value] = 1;
      }
      _images[step.dst] = value;
      assigned.push_back(step.dst);
    }
  }
  return true;
}

void ExtensionSearch::undo_level(std::size_t t)
{
  for (auto x : _assigned[t]) {
    if (_injective)
      _used[_images[x]] = 0;
    _images[x] = std::numeric_limits<Element>::max();
  }
  _assigned[t].clear();
}

bool ExtensionSearch::extend(std::span<Element const> generator_images)
{
  for (std::size_t t = _plan.levels(); t-- > 0;)
    undo_level(t);

  for (std::size_t t = 0; t < _plan.levels(); ++t)
    if (!apply_level(t, generator_images[t]))
      return false;
  return true;
}

bool is_multiplicative(FiniteGroup const &source,
                       FiniteGroup const &target,
                       std::span<Element const> images)
{
  auto n = source.order();
  if (images.size() != n)
    return false;
  for (auto x : images)
    if (x >= target.order())
      return false;

  for (std::size_t x = 0; x < n; ++x) {
    auto ix = images[x];
    for (std::size_t y = 0; y < n; ++y) {
      auto xy = source.mul(static_cast<Element>(x), static_cast<Element>(y));
      if (images[xy] != target.mul(ix, images[y]))
        return false;
    }
  }
  return true;
}

} // namespace internal

} // namespace grouper
