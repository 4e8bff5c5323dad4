#include "grouper/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "grouper/error.hpp"
#include "extension_plan.hpp"

namespace grouper
{

namespace
{

constexpr std::size_t EXHAUSTIVE_LAW_CHECK_ORDER = 512;
constexpr std::size_t SAMPLED_LAW_CHECKS = 100000;

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t value)
{
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

// closure of seed under right multiplication by gens, seeded with identity
std::vector<Element> right_closure(FiniteGroup const &group,
                                   std::span<Element const> gens)
{
  std::vector<bool> in(group.order(), false);
  std::vector<Element> members{group.identity()};
  in[group.identity()] = true;

  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto g : gens) {
      Element y = group.mul(members[i], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return members;
}

} // anonymous namespace

FiniteGroup::FiniteGroup(std::string name,
                         std::size_t order,
                         std::vector<Element> table,
                         std::vector<Element> generators,
                         std::vector<Permutation> perm_rep)
: _name(std::move(name)),
  _order(order),
  _table(std::move(table)),
  _generators(std::move(generators)),
  _perm_rep(std::move(perm_rep))
{
  if (_order == 0 || _order > MAX_GROUP_ORDER)
    throw Error("order-cap-exceeded",
                "group order " + std::to_string(_order) + " outside 1.." +
                std::to_string(MAX_GROUP_ORDER));

  if (_table.size() != _order * _order)
    throw Error("invalid-group", "table size does not match order");

  for (auto x : _table)
    if (x >= _order)
      throw Error("invalid-group", "table entry out of range");

  for (auto g : _generators)
    if (g >= _order)
      throw Error("invalid-group", "generator out of range");

  if (!_perm_rep.empty() && _perm_rep.size() != _generators.size())
    throw Error("invalid-group", "permutation representation must list one "
                                 "permutation per generator");

  _identity = check_group_law();

  _inverses.assign(_order, 0);
  for (std::size_t x = 0; x < _order; ++x)
    for (std::size_t y = 0; y < _order; ++y)
      if (mul(static_cast<Element>(x), static_cast<Element>(y)) == _identity) {
        _inverses[x] = static_cast<Element>(y);
        break;
      }

  _element_orders.assign(_order, 0);
  for (std::size_t x = 0; x < _order; ++x) {
    unsigned k = 1;
    for (Element p = static_cast<Element>(x); p != _identity;
         p = mul(p, static_cast<Element>(x)))
      ++k;
    _element_orders[x] = k;
  }

  _abelian = true;
  for (std::size_t x = 0; x < _order && _abelian; ++x)
    for (std::size_t y = x + 1; y < _order; ++y)
      if (mul(static_cast<Element>(x), static_cast<Element>(y)) !=
          mul(static_cast<Element>(y), static_cast<Element>(x))) {
        _abelian = false;
        break;
      }

  if (right_closure(*this, _generators).size() != _order)
    throw Error("invalid-group", "generators do not generate " + _name);

  std::uint64_t h = fnv1a(1469598103934665603ull, _order);
  for (auto x : _table)
    h = fnv1a(h, x);
  h = fnv1a(h, 0xffffu);
  for (auto g : _generators)
    h = fnv1a(h, g);
  _fingerprint = h;
}

Element FiniteGroup::check_group_law() const
{
  auto n = _order;

  // Latin square: every row and column is a permutation of the indices
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t round = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ++round;
    for (std::size_t j = 0; j < n; ++j) {
      auto &s = stamp[_table[i * n + j]];
      if (s == round)
        throw Error("invalid-group", "table row is not a permutation");
      s = round;
    }
    ++round;
    for (std::size_t j = 0; j < n; ++j) {
      auto &s = stamp[_table[j * n + i]];
      if (s == round)
        throw Error("invalid-group", "table column is not a permutation");
      s = round;
    }
  }

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = _table[e * n + x] == x && _table[x * n + e] == x;
    if (ok)
      identity = static_cast<Element>(e);
  }
  if (!identity)
    throw Error("invalid-group", "table has no identity");

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return _table[_table[a * n + b] * n + c] == _table[a * n + _table[b * n + c]];
  };

  if (n <= EXHAUSTIVE_LAW_CHECK_ORDER) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = _table[a * n + b];
        Element const *row_b = &_table[b * n];
        Element const *row_ab = &_table[ab * n];
        for (std::size_t c = 0; c < n; ++c)
          if (row_ab[c] != _table[a * n + row_b[c]])
            throw Error("invalid-group", "table is not associative");
      }
  } else {
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < SAMPLED_LAW_CHECKS; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw Error("invalid-group", "table is not associative");
  }
  return *identity;
}

Element FiniteGroup::pow(Element x, long long k) const
{
  auto m = static_cast<long long>(_element_orders[x]);
  k %= m;
  if (k < 0)
    k += m;

  Element result = _identity;
  for (long long i = 0; i < k; ++i)
    result = mul(result, x);
  return result;
}

GroupPtr FiniteGroup::renamed(std::string name) const
{
  auto copy = std::make_shared<FiniteGroup>(*this);
  copy->_name = std::move(name);
  return copy;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members)
: _parent(std::move(parent)),
  _members(std::move(members)),
  _mask(_parent->order(), false)
{
  std::sort(_members.begin(), _members.end());
  _members.erase(std::unique(_members.begin(), _members.end()), _members.end());

  for (auto m : _members) {
    if (m >= _parent->order())
      throw Error("invalid-subgroup", "member index out of range");
    _mask[m] = true;
  }

  auto const &G = *_parent;
  if (!_mask[G.identity()])
    throw Error("invalid-subgroup", "subset does not contain the identity");

  for (auto a : _members) {
    if (!_mask[G.inv(a)])
      throw Error("invalid-subgroup", "subset not closed under inverses");
    for (auto b : _members)
      if (!_mask[G.mul(a, b)])
        throw Error("invalid-subgroup", "subset not closed under products");
  }

  if (G.order() % _members.size() != 0)
    throw Error("invalid-subgroup", "subgroup order does not divide group order");

  _normal = true;
  for (std::size_t g = 0; g < G.order() && _normal; ++g) {
    auto ge = static_cast<Element>(g);
    for (auto m : _members)
      if (!_mask[G.mul(G.mul(ge, m), G.inv(ge))]) {
        _normal = false;
        break;
      }
  }
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Element> images)
: _source(std::move(source)),
  _target(std::move(target)),
  _images(std::move(images))
{
  if (!internal::is_multiplicative(*_source, *_target, _images))
    throw Error("invalid-hom", "map " + _source->name() + " -> " +
                               _target->name() + " is not a homomorphism");
}

GroupHom GroupHom::unchecked(GroupPtr source,
                             GroupPtr target,
                             std::vector<Element> images)
{
  GroupHom result;
  result._source = std::move(source);
  result._target = std::move(target);
  result._images = std::move(images);
  return result;
}

bool GroupHom::is_injective() const
{
  std::size_t trivial_preimages = 0;
  for (auto x : _images)
    if (x == _target->identity())
      ++trivial_preimages;
  return trivial_preimages == 1;
}

bool GroupHom::is_surjective() const
{ return image().order() == _target->order(); }

bool GroupHom::is_trivial() const
{
  return std::all_of(_images.begin(), _images.end(),
                     [&](Element x) { return x == _target->identity(); });
}

Subgroup GroupHom::kernel() const
{
  std::vector<Element> members;
  for (std::size_t x = 0; x < _images.size(); ++x)
    if (_images[x] == _target->identity())
      members.push_back(static_cast<Element>(x));
  return Subgroup(_source, std::move(members));
}

Subgroup GroupHom::image() const
{ return Subgroup(_target, _images); }

GroupHom compose(GroupHom const &outer, GroupHom const &inner)
{
  if (inner.target() != outer.source())
    throw Error("invalid-hom", "composition of non-composable homomorphisms");

  std::vector<Element> images(inner.images().size());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = outer(inner(static_cast<Element>(x)));
  return GroupHom::unchecked(inner.source(), outer.target(), std::move(images));
}

GroupHom identity_hom(GroupPtr const &group)
{
  std::vector<Element> images(group->order());
  std::iota(images.begin(), images.end(), Element(0));
  return GroupHom::unchecked(group, group, std::move(images));
}

GroupHom trivial_hom(GroupPtr const &source, GroupPtr const &target)
{
  return GroupHom::unchecked(
    source, target, std::vector<Element>(source->order(), target->identity()));
}

GroupHom hom_from_generator_images(GroupPtr const &source,
                                   GroupPtr const &target,
                                   std::span<Element const> images)
{
  if (images.size() != source->generators().size())
    throw Error("invalid-hom", "expected " +
                               std::to_string(source->generators().size()) +
                               " generator images");
  for (auto x : images)
    if (x >= target->order())
      throw Error("invalid-hom", "generator image out of range");

  internal::ExtensionPlan plan(*source, source->generators());
  internal::ExtensionSearch search(plan, *target, false);
  if (!search.extend(images))
    throw Error("invalid-hom", "generator assignment does not extend to a "
                               "homomorphism");

  return GroupHom(source, target, search.images());
}

GroupPtr build_from_permutations(std::vector<Permutation> const &gens,
                                 std::string name,
                                 BuildLimits limits)
{
  unsigned degree = 1;
  for (auto const &g : gens)
    degree = std::max(degree, g.degree());

  if (degree > limits.max_degree)
    throw Error("malformed-permutation",
                "degree " + std::to_string(degree) + " exceeds " +
                std::to_string(limits.max_degree));

  std::vector<Permutation> padded;
  for (auto const &g : gens)
    padded.push_back(g.extended(degree));

  // breadth-first closure from the identity; right_mul[i * k + g] = i·g
  std::vector<Permutation> elements{Permutation(degree)};
  std::unordered_map<Permutation, Element, PermutationHash> index{{elements[0], 0}};
  std::vector<Element> parent{0};
  std::vector<std::uint8_t> parent_gen{0};
  std::vector<Element> right_mul;
  auto k = padded.size();

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t g = 0; g < k; ++g) {
      Permutation next = elements[i] * padded[g];
      auto it = index.find(next);
      if (it == index.end()) {
        if (elements.size() >= limits.max_order)
          throw Error("closure-exceeds-cap",
                      "closure of " + name + " exceeds " +
                      std::to_string(limits.max_order) + " elements");
        it = index.emplace(next, static_cast<Element>(elements.size())).first;
        elements.push_back(std::move(next));
        parent.push_back(static_cast<Element>(i));
        parent_gen.push_back(static_cast<std::uint8_t>(g));
      }
      right_mul.push_back(it->second);
    }
  }

  // row i of the table: i·j = (i·parent(j))·gen(j), filled in BFS order of j
  auto n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i * n] = static_cast<Element>(i);
    for (std::size_t j = 1; j < n; ++j)
      table[i * n + j] = right_mul[table[i * n + parent[j]] * k + parent_gen[j]];
  }

  std::vector<Element> generators;
  for (auto const &g : padded)
    generators.push_back(index.at(g));

  return std::make_shared<FiniteGroup>(std::move(name), n, std::move(table),
                                       std::move(generators), padded);
}

std::vector<Permutation> element_permutations(FiniteGroup const &group)
{
  auto const &rep = group.perm_rep();
  if (rep.empty() && !group.generators().empty())
    throw Error("no-permutation-representation",
                group.name() + " carries no permutation representation");

  unsigned degree = 1;
  for (auto const &p : rep)
    degree = std::max(degree, p.degree());

  std::vector<std::optional<Permutation>> perms(group.order());
  perms[group.identity()] = Permutation(degree);
  std::deque<Element> queue{group.identity()};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < rep.size(); ++g) {
      Element y = group.mul(x, group.generators()[g]);
      if (!perms[y]) {
        perms[y] = *perms[x] * rep[g];
        queue.push_back(y);
      }
    }
  }

  std::vector<Permutation> result;
  result.reserve(perms.size());
  for (auto &p : perms)
    result.push_back(std::move(*p));
  return result;
}

std::optional<Element> find_permutation(FiniteGroup const &group,
                                        Permutation const &perm)
{
  auto perms = element_permutations(group);
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (perms[i] == perm)
      return static_cast<Element>(i);
  return std::nullopt;
}

Subgroup trivial_subgroup(GroupPtr const &group)
{ return Subgroup(group, {group->identity()}); }

Subgroup whole_group(GroupPtr const &group)
{
  std::vector<Element> members(group->order());
  std::iota(members.begin(), members.end(), Element(0));
  return Subgroup(group, std::move(members));
}

Subgroup subgroup_generated(GroupPtr const &group,
                            std::span<Element const> seed,
                            bool normal)
{
  auto const &G = *group;
  for (auto s : seed)
    if (s >= G.order())
      throw Error("index-out-of-range", "seed element out of range");

  if (!normal)
    return Subgroup(group, right_closure(G, seed));

  // conjugation orbit of the seed under the group's generators
  std::vector<bool> in(G.order(), false);
  std::vector<Element> conjugates;
  for (auto s : seed)
    if (!in[s]) {
      in[s] = true;
      conjugates.push_back(s);
    }

  for (std::size_t i = 0; i < conjugates.size(); ++i)
    for (auto g : G.generators()) {
      Element c = G.mul(G.mul(g, conjugates[i]), G.inv(g));
      if (!in[c]) {
        in[c] = true;
        conjugates.push_back(c);
      }
    }

  return Subgroup(group, right_closure(G, conjugates));
}

Subgroup join(Subgroup const &a, Subgroup const &b)
{
  std::vector<Element> seed(a.members());
  seed.insert(seed.end(), b.members().begin(), b.members().end());
  return subgroup_generated(a.parent(), seed, a.is_normal() && b.is_normal());
}

Subgroup centralizer(GroupPtr const &group, std::span<Element const> seed)
{
  auto const &G = *group;
  std::vector<Element> members;
  for (std::size_t g = 0; g < G.order(); ++g) {
    auto ge = static_cast<Element>(g);
    bool commutes = std::all_of(seed.begin(), seed.end(), [&](Element s) {
      return G.mul(ge, s) == G.mul(s, ge);
    });
    if (commutes)
      members.push_back(ge);
  }
  return Subgroup(group, std::move(members));
}

Subgroup center(GroupPtr const &group)
{
  std::vector<Element> all(group->order());
  std::iota(all.begin(), all.end(), Element(0));
  return centralizer(group, all);
}

std::vector<Subgroup> normal_subgroups(GroupPtr const &group)
{
  auto const &G = *group;

  // every normal subgroup is a join of normal closures of single elements
  std::vector<Subgroup> closures;
  std::set<std::vector<Element>> seen_closures;
  for (std::size_t x = 0; x < G.order(); ++x) {
    Element e = static_cast<Element>(x);
    auto n = subgroup_generated(group, std::span<Element const>(&e, 1), true);
    if (seen_closures.insert(n.members()).second)
      closures.push_back(std::move(n));
  }

  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> result;
  for (auto const &c : closures)
    if (seen.insert(c.members()).second)
      result.push_back(c);

  for (std::size_t i = 0; i < result.size(); ++i)
    for (auto const &c : closures) {
      auto j = join(result[i], c);
      if (seen.insert(j.members()).second)
        result.push_back(std::move(j));
    }

  std::sort(result.begin(), result.end(),
            [](Subgroup const &a, Subgroup const &b) {
              if (a.order() != b.order())
                return a.order() < b.order();
              return a.members() < b.members();
            });
  return result;
}

Quotient quotient_group(GroupPtr const &group, Subgroup const &normal)
{
  if (normal.parent() != group)
    throw Error("not-normal", "subgroup belongs to a different group");
  if (!normal.is_normal())
    throw Error("not-normal", "quotient by a non-normal subgroup");

  auto const &G = *group;
  constexpr Element UNSET = std::numeric_limits<Element>::max();
  std::vector<Element> coset(G.order(), UNSET);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (coset[x] != UNSET)
      continue;
    auto id = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (auto m : normal.members())
      coset[G.mul(static_cast<Element>(x), m)] = id;
  }

  auto q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] = coset[G.mul(reps[a], reps[b])];

  std::vector<Element> generators;
  for (auto g : G.generators())
    generators.push_back(coset[g]);

  auto quotient = std::make_shared<FiniteGroup>(
    G.name() + "/N" + std::to_string(normal.order()), q, std::move(table),
    std::move(generators));

  return {quotient, GroupHom::unchecked(group, quotient, std::move(coset))};
}

EmbeddedGroup subgroup_as_group(Subgroup const &subgroup, std::string name)
{
  auto const &G = *subgroup.parent();
  auto const &members = subgroup.members();
  auto n = members.size();

  std::vector<Element> local(G.order(), 0);
  for (std::size_t i = 0; i < n; ++i)
    local[members[i]] = static_cast<Element>(i);

  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = local[G.mul(members[a], members[b])];

  if (name.empty())
    name = G.name() + "<" + std::to_string(n) + ">";

  // generators chosen inside the subgroup so that they generate it
  std::vector<Element> generators;
  {
    std::vector<bool> in(G.order(), false);
    std::size_t reached = 1;
    in[G.identity()] = true;
    std::vector<Element> gens_parent;
    while (reached < n) {
      Element best = 0;
      unsigned best_order = 0;
      for (auto m : members)
        if (!in[m] && G.element_order(m) > best_order) {
          best = m;
          best_order = G.element_order(m);
        }
      gens_parent.push_back(best);
      auto closure = right_closure(G, gens_parent);
      std::fill(in.begin(), in.end(), false);
      for (auto c : closure)
        in[c] = true;
      reached = closure.size();
    }
    for (auto g : gens_parent)
      generators.push_back(local[g]);
  }

  auto group = std::make_shared<FiniteGroup>(std::move(name), n, std::move(table),
                                             std::move(generators));
  return {group, GroupHom::unchecked(group, subgroup.parent(), members)};
}

std::vector<Element> generating_set(FiniteGroup const &group)
{
  std::vector<Element> result;
  std::vector<bool> in(group.order(), false);
  in[group.identity()] = true;
  std::size_t reached = 1;

  while (reached < group.order()) {
    Element best = 0;
    unsigned best_order = 0;
    for (std::size_t x = 0; x < group.order(); ++x)
      if (!in[x] && group.element_order(static_cast<Element>(x)) > best_order) {
        best = static_cast<Element>(x);
        best_order = group.element_order(best);
      }

    result.push_back(best);
    auto closure = right_closure(group, result);
    std::fill(in.begin(), in.end(), false);
    for (auto c : closure)
      in[c] = true;
    reached = closure.size();
  }
  return result;
}

std::vector<unsigned> order_profile(FiniteGroup const &group)
{
  auto profile = group.element_orders();
  std::sort(profile.begin(), profile.end());
  return profile;
}

std::optional<GroupHom> find_isomorphism(GroupPtr const &a, GroupPtr const &b)
{
  if (a->order() != b->order() || a->is_abelian() != b->is_abelian() ||
      order_profile(*a) != order_profile(*b))
    return std::nullopt;

  internal::ExtensionPlan plan(*a, generating_set(*a));

  std::vector<std::vector<Element>> candidates;
  for (auto g : plan.generators()) {
    std::vector<Element> cs;
    for (std::size_t y = 0; y < b->order(); ++y)
      if (b->element_order(static_cast<Element>(y)) == a->element_order(g))
        cs.push_back(static_cast<Element>(y));
    candidates.push_back(std::move(cs));
  }

  std::optional<GroupHom> result;
  internal::ExtensionSearch search(plan, *b, true);
  search.run(candidates, [&](std::vector<Element> const &images) {
    // injective on a group of equal order, hence bijective
    result = GroupHom(a, b, images);
    return false;
  });
  return result;
}

} // namespace grouper
