#include "grouper/approx.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "grouper/error.hpp"

namespace grouper
{

namespace
{

constexpr std::size_t NONE = static_cast<std::size_t>(-1);

// Where each member of `from` lands in `to` under the induced map.
struct InducedMap
{
  std::vector<std::size_t> index; // per member of `from`
  bool surjective = false;
  bool injective = false;
  std::size_t first_missed = NONE;               // in `to`
  std::pair<std::size_t, std::size_t> collision{NONE, NONE}; // in `from`
};

InducedMap summarize(std::vector<std::size_t> index, std::size_t to_size)
{
  InducedMap result;
  std::vector<std::size_t> first_source(to_size, NONE);
  for (std::size_t i = 0; i < index.size(); ++i) {
    auto t = index[i];
    if (t == NONE)
      throw std::logic_error("induced map left the hom-set");
    if (first_source[t] == NONE)
      first_source[t] = i;
    else if (result.collision.first == NONE)
      result.collision = {first_source[t], i};
  }

  result.index = std::move(index);
  result.injective = result.collision.first == NONE;
  result.surjective = true;
  for (std::size_t t = 0; t < to_size; ++t)
    if (first_source[t] == NONE) {
      result.surjective = false;
      result.first_missed = t;
      break;
    }
  return result;
}

// f ↦ f∘φ from Hom(G,F) to Hom(H,F)
InducedMap precompose(GroupHom const &phi, HomSet const &from, HomSet const &to)
{
  auto const &keys = to.key_generators();
  std::vector<Element> key(keys.size());
  std::vector<std::size_t> index;
  index.reserve(from.size());
  for (auto const &f : from.homs()) {
    for (std::size_t k = 0; k < keys.size(); ++k)
      key[k] = f(phi(keys[k]));
    index.push_back(to.find(key).value_or(NONE));
  }
  return summarize(std::move(index), to.size());
}

// f ↦ φ∘f from Hom(F,H) to Hom(F,G)
InducedMap postcompose(GroupHom const &phi, HomSet const &from, HomSet const &to)
{
  auto const &keys = to.key_generators();
  std::vector<Element> key(keys.size());
  std::vector<std::size_t> index;
  index.reserve(from.size());
  for (auto const &f : from.homs()) {
    for (std::size_t k = 0; k < keys.size(); ++k)
      key[k] = phi(f(keys[k]));
    index.push_back(to.find(key).value_or(NONE));
  }
  return summarize(std::move(index), to.size());
}

struct SelfFactoring
{
  bool all_bijective = true;
  std::size_t first_non_bijective = NONE; // in the endomorphism set
};

SelfFactoring self_factoring(InducedMap const &induced,
                             std::size_t phi_index,
                             HomSet const &endos)
{
  SelfFactoring result;
  for (std::size_t i = 0; i < induced.index.size(); ++i)
    if (induced.index[i] == phi_index && !endos[i].is_injective()) {
      result.all_bijective = false;
      result.first_non_bijective = i;
      break;
    }
  return result;
}

Witness unlifted(std::string condition, GroupHom const &missed)
{ return {std::move(condition), WitnessKind::unlifted, {missed}}; }

Witness collision(std::string condition, HomSet const &from, InducedMap const &induced)
{
  return {std::move(condition), WitnessKind::non_injective,
          {from[induced.collision.first], from[induced.collision.second]}};
}

Witness non_automorphism(std::string condition, GroupHom const &f)
{ return {std::move(condition), WitnessKind::non_automorphism_preimage, {f}}; }

bool fixes_on_generators(GroupHom const &phi, std::function<Element(Element)> const &twisted)
{
  for (auto x : phi.source()->generators())
    if (twisted(x) != phi(x))
      return false;
  return true;
}

Subgroup galois_from(GroupHom const &phi, AutGroup const &aut, GaloisSide side)
{
  std::vector<Element> members;
  for (std::size_t i = 0; i < aut.automorphisms.size(); ++i) {
    auto const &f = aut.automorphisms[i];
    bool fixes = side == GaloisSide::target
               ? fixes_on_generators(phi, [&](Element x) { return f(phi(x)); })
               : fixes_on_generators(phi, [&](Element x) { return phi(f(x)); });
    if (fixes)
      members.push_back(static_cast<Element>(i));
  }
  return Subgroup(aut.group, std::move(members));
}

std::string member_label(std::string const &condition, GroupPtr const &member)
{ return condition + "[" + member->name() + "]"; }

} // anonymous namespace

bool GroupClass::contains(GroupPtr const &group) const
{
  for (auto const &m : members)
    if (m == group)
      return true;
  for (auto const &m : members)
    if (are_isomorphic(m, group))
      return true;
  return false;
}

GroupClass GroupClass::of(std::vector<GroupPtr> members)
{
  std::string name = "{";
  for (std::size_t i = 0; i < members.size(); ++i)
    name += (i ? ", " : "") + members[i]->name();
  name += "}";
  return {name, std::move(members)};
}

std::string flag_key(Flag flag)
{
  switch (flag) {
  case Flag::localization:
    return "isLocalization";
  case Flag::cellular_cover:
    return "isCellularCover";
  case Flag::envelope:
    return "isEnvelope";
  case Flag::cover:
    return "isCover";
  case Flag::preenvelope_of_target_class:
    return "isPreenvelopeOfTargetClass";
  case Flag::precover_of_source_class:
    return "isPrecoverOfSourceClass";
  }
  return {};
}

std::optional<Flag> parse_flag_key(std::string const &key)
{
  for (auto f : ALL_FLAGS)
    if (flag_key(f) == key)
      return f;
  return std::nullopt;
}

std::string witness_kind_name(WitnessKind kind)
{
  switch (kind) {
  case WitnessKind::unlifted:
    return "unlifted";
  case WitnessKind::non_automorphism_preimage:
    return "non-automorphism-preimage";
  case WitnessKind::non_injective:
    return "non-injective";
  }
  return {};
}

ClassificationReport classify_hom(GroupHom const &hom, HomEngine &engine)
{
  auto const &H = hom.source();
  auto const &G = hom.target();

  auto end_g = engine.endomorphisms(G);
  auto end_h = engine.endomorphisms(H);
  auto hom_hg = engine.homs(H, G);
  auto aut_g = engine.automorphisms(G);
  auto aut_h = engine.automorphisms(H);

  auto phi_index = hom_hg->index_of(hom);
  if (!phi_index)
    throw std::logic_error("homomorphism missing from its hom-set");

  auto pre = precompose(hom, *end_g, *hom_hg);
  auto post = postcompose(hom, *end_h, *hom_hg);
  auto pre_self = self_factoring(pre, *phi_index, *end_g);
  auto post_self = self_factoring(post, *phi_index, *end_h);

  ClassificationReport report{
    hom, {}, aut_g, aut_h,
    galois_from(hom, *aut_g, GaloisSide::target),
    galois_from(hom, *aut_h, GaloisSide::source),
    {}, std::nullopt};

  auto &flags = report.flags;
  flags[Flag::localization] = pre.surjective && pre.injective;
  flags[Flag::envelope] = pre.surjective && pre_self.all_bijective;
  flags[Flag::preenvelope_of_target_class] = pre.surjective;
  flags[Flag::cellular_cover] = post.surjective && post.injective;
  flags[Flag::cover] = post.surjective && post_self.all_bijective;
  flags[Flag::precover_of_source_class] = post.surjective;

  for (auto flag : ALL_FLAGS) {
    if (flags[flag])
      continue;
    auto key = flag_key(flag);
    bool target_side = flag == Flag::localization || flag == Flag::envelope ||
                       flag == Flag::preenvelope_of_target_class;
    auto const &induced = target_side ? pre : post;
    auto const &self = target_side ? pre_self : post_self;
    auto const &from = target_side ? *end_g : *end_h;

    if (!induced.surjective)
      report.witnesses.push_back(unlifted(key, (*hom_hg)[induced.first_missed]));
    else if (flag == Flag::localization || flag == Flag::cellular_cover)
      report.witnesses.push_back(collision(key, from, induced));
    else
      report.witnesses.push_back(non_automorphism(key, from[self.first_non_bijective]));
  }

  return report;
}

Subgroup galois_group(GroupHom const &hom, GaloisSide side, HomEngine &engine)
{
  auto aut = engine.automorphisms(side == GaloisSide::target ? hom.target() : hom.source());
  return galois_from(hom, *aut, side);
}

ClassificationReport classify_against_class(GroupHom const &hom,
                                            GroupClass const &cls,
                                            ClassSide side,
                                            HomEngine &engine)
{
  if (cls.members.empty())
    throw Error("empty-class", "class " + cls.name + " has no members");

  auto report = classify_hom(hom, engine);
  auto const &H = hom.source();
  auto const &G = hom.target();

  RelativeVerdict verdict{cls.name, side, false, false, false, false, {}};
  verdict.member = cls.contains(side == ClassSide::envelope ? G : H);

  bool all_surjective = true, all_injective = true;
  std::string pre_name = side == ClassSide::envelope ? "F-preenvelope" : "F-precover";

  for (auto const &F : cls.members) {
    InducedMap induced;
    std::shared_ptr<HomSet const> from, to;
    if (side == ClassSide::envelope) {
      from = engine.homs(G, F);
      to = engine.homs(H, F);
      induced = precompose(hom, *from, *to);
    } else {
      from = engine.homs(F, H);
      to = engine.homs(F, G);
      induced = postcompose(hom, *from, *to);
    }

    if (!induced.surjective && all_surjective)
      verdict.witnesses.push_back(
        unlifted(member_label(pre_name, F), (*to)[induced.first_missed]));
    if (!induced.injective && all_injective)
      verdict.witnesses.push_back(
        collision(member_label("unique-liftings", F), *from, induced));
    all_surjective = all_surjective && induced.surjective;
    all_injective = all_injective && induced.injective;
  }

  // the automorphism condition on self-factoring endomorphisms does not
  // depend on the class
  auto endos = engine.endomorphisms(side == ClassSide::envelope ? G : H);
  auto hom_hg = engine.homs(H, G);
  auto induced = side == ClassSide::envelope ? precompose(hom, *endos, *hom_hg)
                                             : postcompose(hom, *endos, *hom_hg);
  auto self = self_factoring(induced, *hom_hg->index_of(hom), *endos);
  bool self_bijective = self.all_bijective;

  verdict.pre = verdict.member && all_surjective;
  verdict.full = verdict.pre && self_bijective;
  verdict.unique_liftings = verdict.pre && all_injective;

  if (verdict.pre && !self_bijective)
    verdict.witnesses.push_back(
      non_automorphism(side == ClassSide::envelope ? "F-envelope" : "F-cover",
                       (*endos)[self.first_non_bijective]));

  report.relative = std::move(verdict);
  return report;
}

Subgroup class_socle(GroupPtr const &group, GroupClass const &cls, HomEngine &engine)
{
  std::vector<bool> seen(group->order(), false);
  std::vector<Element> seed;
  for (auto const &F : cls.members)
    for (auto const &psi : engine.homs(F, group)->homs())
      for (auto y : psi.images())
        if (!seen[y]) {
          seen[y] = true;
          seed.push_back(y);
        }
  return subgroup_generated(group, seed, true);
}

Radical class_radical(GroupPtr const &group, GroupClass const &cls, HomEngine &engine)
{
  std::vector<Subgroup> chain{class_socle(group, cls, engine)};
  for (;;) {
    auto const &current = chain.back();
    auto quotient = quotient_group(group, current);
    auto socle = class_socle(quotient.group, cls, engine);

    std::vector<Element> preimage;
    for (std::size_t x = 0; x < group->order(); ++x)
      if (socle.contains(quotient.projection(static_cast<Element>(x))))
        preimage.push_back(static_cast<Element>(x));

    Subgroup next(group, std::move(preimage));
    if (next == current)
      break;
    chain.push_back(std::move(next));
  }

  auto radical = chain.back();
  return {radical, std::move(chain), quotient_group(group, radical)};
}

bool is_orthogonal(GroupHom const &g, GroupClass const &cls, HomEngine &engine)
{
  for (auto const &F : cls.members) {
    auto from = engine.homs(g.target(), F);
    auto to = engine.homs(g.source(), F);
    if (from->size() != to->size())
      return false;
    auto induced = precompose(g, *from, *to);
    if (!induced.surjective || !induced.injective)
      return false;
  }
  return true;
}

Epireflection orthogonal_epireflection(GroupPtr const &group,
                                       GroupClass const &cls,
                                       HomEngine &engine)
{
  auto kernel = trivial_subgroup(group);
  for (auto const &N : normal_subgroups(group)) {
    auto quotient = quotient_group(group, N);
    if (is_orthogonal(quotient.projection, cls, engine))
      kernel = join(kernel, N);
  }
  return {kernel, quotient_group(group, kernel)};
}

ImageFactorization image_factorize(GroupHom const &hom)
{
  auto image = hom.image();
  auto embedded = subgroup_as_group(image, "Im");

  auto const &members = image.members();
  std::vector<Element> images(hom.source()->order());
  for (std::size_t x = 0; x < images.size(); ++x) {
    auto y = hom(static_cast<Element>(x));
    images[x] = static_cast<Element>(
      std::lower_bound(members.begin(), members.end(), y) - members.begin());
  }

  return {GroupHom::unchecked(hom.source(), embedded.group, std::move(images)),
          embedded.inclusion};
}

bool isomorphic_under(GroupHom const &a, GroupHom const &b)
{
  if (a.source() != b.source() && !(a.source()->fingerprint() == b.source()->fingerprint()))
    return false;
  auto const &A = a.target();
  auto const &B = b.target();
  if (A->order() != B->order())
    return false;

  if (a.is_surjective()) {
    // α is forced: α(a(x)) = b(x)
    std::vector<Element> alpha(A->order(), std::numeric_limits<Element>::max());
    for (std::size_t x = 0; x < a.images().size(); ++x) {
      auto &slot = alpha[a(static_cast<Element>(x))];
      auto value = b(static_cast<Element>(x));
      if (slot != std::numeric_limits<Element>::max() && slot != value)
        return false;
      slot = value;
    }
    auto candidate = GroupHom::unchecked(A, B, alpha);
    return candidate.is_injective();
  }

  auto iso = find_isomorphism(A, B);
  if (!iso)
    return false;
  auto aut = automorphism_group(A);
  for (auto const &f : aut.automorphisms) {
    auto alpha = compose(*iso, f);
    bool ok = true;
    for (auto x : a.source()->generators())
      if (alpha(a(x)) != b(x)) {
        ok = false;
        break;
      }
    if (ok)
      return true;
  }
  return false;
}

} // namespace grouper
