#ifndef GUARD_GROUPER_EXTENSION_PLAN_H
#define GUARD_GROUPER_EXTENSION_PLAN_H

#include <cstdint>
#include <span>
#include <vector>

#include "grouper/group.hpp"

namespace grouper
{

namespace internal
{

// One edge h -> h·s_gen of the source's Cayley graph. An assigning step
// sets image[dst] = image[src]·image(s_gen); a checking step requires that
// equality for an already assigned dst.
struct ExtensionStep
{
  Element dst;
  Element src;
  std::uint8_t gen;
  bool check;
};

// Level t visits the elements of <s_0..s_t> that are new or carry an edge
// labelled s_t, starting from <s_0..s_{t-1}>. Running all levels checks
// phi(h·s) = phi(h)·phi(s) for every h and generator s exactly once, which
// is equivalent to phi being a homomorphism.
class ExtensionPlan
{
public:
  ExtensionPlan(FiniteGroup const &source, std::vector<Element> generators);

  std::vector<Element> const &generators() const
  { return _generators; }

  std::size_t levels() const
  { return _levels.size(); }

  std::span<ExtensionStep const> level(std::size_t t) const
  { return _levels[t]; }

  Element source_identity() const
  { return _identity; }

  std::size_t source_order() const
  { return _order; }

private:
  std::vector<Element> _generators;
  std::vector<std::vector<ExtensionStep>> _levels;
  Element _identity;
  std::size_t _order;
};

// Backtracking over generator images. candidates[t] lists admissible images
// for generator t. visit(images) receives every complete consistent
// assignment in lexicographic order of generator images and returns false
// to stop the search. With injective set, partial maps must stay injective.
class ExtensionSearch
{
public:
  ExtensionSearch(ExtensionPlan const &plan,
                  FiniteGroup const &target,
                  bool injective);

  template<typename VISIT>
  void run(std::vector<std::vector<Element>> const &candidates, VISIT &&visit)
  {
    _stop = false;
    descend(0, candidates, visit);
  }

  // runs every level for a fixed assignment
  bool extend(std::span<Element const> generator_images);

  std::vector<Element> const &images() const
  { return _images; }

private:
  bool apply_level(std::size_t t, Element image);
  void undo_level(std::size_t t);

  template<typename VISIT>
  void descend(std::size_t t,
               std::vector<std::vector<Element>> const &candidates,
               VISIT &visit)
  {
    if (t == _plan.levels()) {
      if (!visit(_images))
        _stop = true;
      return;
    }

    for (auto c : candidates[t]) {
      bool ok = apply_level(t, c);
      if (ok)
        descend(t + 1, candidates, visit);
      undo_level(t);
      if (_stop)
        return;
    }
  }

  ExtensionPlan const &_plan;
  FiniteGroup const &_target;
  bool _injective;
  bool _stop = false;

  std::vector<Element> _images;
  std::vector<Element> _gen_images;
  std::vector<std::uint8_t> _used;
  std::vector<std::vector<Element>> _assigned;
};

// full O(|H|^2) multiplicativity check
bool is_multiplicative(FiniteGroup const &source,
                       FiniteGroup const &target,
                       std::span<Element const> images);

} // namespace internal

} // namespace grouper

#endif // GUARD_GROUPER_EXTENSION_PLAN_H
