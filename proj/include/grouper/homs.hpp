#ifndef GUARD_GROUPER_HOMS_H
#define GUARD_GROUPER_HOMS_H

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "group.hpp"

/// Exhaustive enumeration of Hom(H,G) by backtracking over images of a
/// generating set of H, automorphism groups as abstract groups acting on
/// their base, and a memoizing engine with an optional on-disk cache.

namespace grouper
{

inline constexpr std::size_t MAX_ENUMERATION_ORDER = 512;

struct EnumerationOptions
{
  unsigned jobs = 1;
};

class HomSet
{
public:
  // homs must be sorted by their images on key_generators
  HomSet(GroupPtr source,
         GroupPtr target,
         std::vector<Element> key_generators,
         std::vector<GroupHom> homs);

  GroupPtr const &source() const
  { return _source; }

  GroupPtr const &target() const
  { return _target; }

  // generating_set(source); homs are ordered lexicographically by the
  // tuple of images of these elements
  std::vector<Element> const &key_generators() const
  { return _key_generators; }

  std::vector<GroupHom> const &homs() const
  { return _homs; }

  std::size_t size() const
  { return _homs.size(); }

  GroupHom const &operator[](std::size_t i) const
  { return _homs[i]; }

  bool complete() const
  { return true; }

  std::vector<Element> key_of(GroupHom const &hom) const;

  // position of the hom with the given key images, by binary search
  std::optional<std::size_t> find(std::span<Element const> key_images) const;

  std::optional<std::size_t> index_of(GroupHom const &hom) const
  { return find(key_of(hom)); }

private:
  GroupPtr _source;
  GroupPtr _target;
  std::vector<Element> _key_generators;
  std::vector<GroupHom> _homs;
};

// Throws "size-cap" when either order exceeds MAX_ENUMERATION_ORDER.
HomSet enumerate_homs(GroupPtr const &source,
                      GroupPtr const &target,
                      EnumerationOptions const &options = {});

struct AutGroup
{
  GroupPtr base;
  // abstract group whose element i is automorphisms[i]; the product f·g
  // is the composite f∘g
  GroupPtr group;
  std::vector<GroupHom> automorphisms;
  Subgroup inner;

  Element eval(Element f, Element x) const
  { return automorphisms[f](x); }

  std::optional<Element> index_of(GroupHom const &automorphism) const;

  std::vector<Element> key_generators;
};

// Aut(G) from the bijective members of End(G). Throws "order-cap-exceeded"
// when |Aut(G)| exceeds MAX_GROUP_ORDER.
AutGroup automorphism_group(HomSet const &endomorphisms);
AutGroup automorphism_group(GroupPtr const &group, EnumerationOptions const &options = {});

struct EngineOptions
{
  unsigned jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
};

// Memoizes hom-sets and automorphism groups by group identity (pointer).
// Safe to call from several threads; each entry is computed once.
class HomEngine
{
public:
  explicit HomEngine(EngineOptions options = {});

  std::shared_ptr<HomSet const> homs(GroupPtr const &source, GroupPtr const &target);

  std::shared_ptr<HomSet const> endomorphisms(GroupPtr const &group)
  { return homs(group, group); }

  std::shared_ptr<AutGroup const> automorphisms(GroupPtr const &group);

  EngineOptions const &options() const
  { return _options; }

  // count of hom-sets served from the disk cache, for tests
  std::size_t cache_hits() const;

private:
  template<typename T>
  struct Entry
  {
    std::once_flag once;
    std::shared_ptr<T const> value;
  };

  std::shared_ptr<HomSet const> load_or_enumerate(GroupPtr const &source,
                                                  GroupPtr const &target);

  EngineOptions _options;
  mutable std::mutex _mutex;
  std::map<std::pair<FiniteGroup const *, FiniteGroup const *>,
           std::shared_ptr<Entry<HomSet>>>
    _homs;
  std::map<FiniteGroup const *, std::shared_ptr<Entry<AutGroup>>> _auts;
  // keeps every group seen alive so that pointer keys stay unique
  std::vector<GroupPtr> _pinned;
  std::size_t _cache_hits = 0;
};

// The sidecar file name used for (source, target) in a cache directory.
std::string cache_file_name(FiniteGroup const &source, FiniteGroup const &target);

} // namespace grouper

#endif // GUARD_GROUPER_HOMS_H
