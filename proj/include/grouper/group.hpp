#ifndef GUARD_GROUPER_GROUP_H
#define GUARD_GROUPER_GROUP_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permutation.hpp"

/// Finite groups as explicit Cayley tables, together with subgroups,
/// homomorphisms and the structural constructions everything else in the
/// library is built from (closures, quotients, centralizers, isomorphism).
///
/// Every object here is immutable after construction and may be shared
/// read-only between threads.

namespace grouper
{

using Element = std::uint16_t;

inline constexpr std::size_t MAX_GROUP_ORDER = 5000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<FiniteGroup const>;

class FiniteGroup
{
public:
  // table[i * order + j] is the index of i·j. The group law (closure,
  // identity, inverses, associativity) is checked here: exhaustively up to
  // order 512, on 10^5 seeded random triples above. The generators must
  // generate the whole index set.
  FiniteGroup(std::string name,
              std::size_t order,
              std::vector<Element> table,
              std::vector<Element> generators,
              std::vector<Permutation> perm_rep = {});

  std::string const &name() const
  { return _name; }

  std::size_t order() const
  { return _order; }

  Element mul(Element a, Element b) const
  { return _table[static_cast<std::size_t>(a) * _order + b]; }

  Element identity() const
  { return _identity; }

  Element inv(Element x) const
  { return _inverses[x]; }

  unsigned element_order(Element x) const
  { return _element_orders[x]; }

  Element pow(Element x, long long k) const;

  std::vector<Element> const &generators() const
  { return _generators; }

  // one permutation per generator when the group was built from a
  // permutation action, empty otherwise
  std::vector<Permutation> const &perm_rep() const
  { return _perm_rep; }

  std::vector<Element> const &table() const
  { return _table; }

  std::vector<unsigned> const &element_orders() const
  { return _element_orders; }

  bool is_abelian() const
  { return _abelian; }

  // content hash of (order, table, generators); names do not participate
  std::uint64_t fingerprint() const
  { return _fingerprint; }

  GroupPtr renamed(std::string name) const;

private:
  Element check_group_law() const;

  std::string _name;
  std::size_t _order;
  std::vector<Element> _table;
  Element _identity = 0;
  std::vector<Element> _inverses;
  std::vector<unsigned> _element_orders;
  std::vector<Element> _generators;
  std::vector<Permutation> _perm_rep;
  bool _abelian = false;
  std::uint64_t _fingerprint = 0;
};

class Subgroup
{
public:
  // members need not be sorted; closure, identity and Lagrange are asserted
  Subgroup(GroupPtr parent, std::vector<Element> members);

  GroupPtr const &parent() const
  { return _parent; }

  std::vector<Element> const &members() const
  { return _members; }

  std::size_t order() const
  { return _members.size(); }

  std::size_t index() const
  { return _parent->order() / _members.size(); }

  bool is_normal() const
  { return _normal; }

  bool contains(Element x) const
  { return _mask[x]; }

  bool is_trivial() const
  { return _members.size() == 1; }

  bool is_whole() const
  { return _members.size() == _parent->order(); }

  bool operator==(Subgroup const &other) const
  { return _parent == other._parent && _members == other._members; }

private:
  GroupPtr _parent;
  std::vector<Element> _members;
  std::vector<bool> _mask;
  bool _normal = false;
};

class GroupHom
{
public:
  // Exhaustively checks images[x·y] = images[x]·images[y].
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Element> images);

  // For maps whose multiplicativity the caller has already established
  // (enumeration output, compositions of homomorphisms).
  static GroupHom unchecked(GroupPtr source,
                            GroupPtr target,
                            std::vector<Element> images);

  GroupPtr const &source() const
  { return _source; }

  GroupPtr const &target() const
  { return _target; }

  std::vector<Element> const &images() const
  { return _images; }

  Element operator()(Element x) const
  { return _images[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_trivial() const;

  Subgroup kernel() const;
  Subgroup image() const;

  bool operator==(GroupHom const &other) const
  {
    return _source == other._source && _target == other._target &&
           _images == other._images;
  }

private:
  GroupHom() = default;

  GroupPtr _source;
  GroupPtr _target;
  std::vector<Element> _images;
};

// outer ∘ inner
GroupHom compose(GroupHom const &outer, GroupHom const &inner);

GroupHom identity_hom(GroupPtr const &group);
GroupHom trivial_hom(GroupPtr const &source, GroupPtr const &target);

// Extends an assignment on source->generators() along the Cayley graph and
// validates the result; throws "invalid-hom" when no homomorphism agrees
// with the assignment.
GroupHom hom_from_generator_images(GroupPtr const &source,
                                   GroupPtr const &target,
                                   std::span<Element const> images);

struct BuildLimits
{
  unsigned max_degree = 64;
  std::size_t max_order = MAX_GROUP_ORDER;
};

// Group generated by gens. Elements are numbered breadth-first from the
// identity, applying generators on the right in input order.
GroupPtr build_from_permutations(std::vector<Permutation> const &gens,
                                 std::string name,
                                 BuildLimits limits = {});

// Permutation of every element, derived from perm_rep(); throws
// "no-permutation-representation" if the group has none.
std::vector<Permutation> element_permutations(FiniteGroup const &group);

std::optional<Element> find_permutation(FiniteGroup const &group,
                                        Permutation const &perm);

Subgroup trivial_subgroup(GroupPtr const &group);
Subgroup whole_group(GroupPtr const &group);

Subgroup subgroup_generated(GroupPtr const &group,
                            std::span<Element const> seed,
                            bool normal);

// product of two normal subgroups (the subgroup they generate)
Subgroup join(Subgroup const &a, Subgroup const &b);

Subgroup centralizer(GroupPtr const &group, std::span<Element const> seed);
Subgroup center(GroupPtr const &group);

// all normal subgroups, sorted by (order, members)
std::vector<Subgroup> normal_subgroups(GroupPtr const &group);

struct Quotient
{
  GroupPtr group;
  GroupHom projection;
};

// Cosets are numbered by increasing least member index.
Quotient quotient_group(GroupPtr const &group, Subgroup const &normal);

struct EmbeddedGroup
{
  GroupPtr group;
  GroupHom inclusion;
};

// The subgroup as a FiniteGroup in its own right; elements in increasing
// parent index order.
EmbeddedGroup subgroup_as_group(Subgroup const &subgroup, std::string name = {});

// greedy: repeatedly add the lowest-index element of maximal order outside
// the current closure
std::vector<Element> generating_set(FiniteGroup const &group);

// multiset of element orders, sorted
std::vector<unsigned> order_profile(FiniteGroup const &group);

std::optional<GroupHom> find_isomorphism(GroupPtr const &a, GroupPtr const &b);

inline bool are_isomorphic(GroupPtr const &a, GroupPtr const &b)
{ return find_isomorphism(a, b).has_value(); }

} // namespace grouper

#endif // GUARD_GROUPER_GROUP_H
