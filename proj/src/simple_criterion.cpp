#include "grouper/simple_criterion.hpp"

#include <algorithm>
#include <map>

#include "grouper/commutator.hpp"
#include "grouper/error.hpp"

namespace grouper
{

namespace
{

constexpr std::size_t MAX_EXTENSION_CHOICES = 100000;

std::vector<Element> mapped_members(GroupHom const &f, Subgroup const &s)
{
  std::vector<Element> members;
  members.reserve(s.order());
  for (auto x : s.members())
    members.push_back(f(x));
  std::sort(members.begin(), members.end());
  return members;
}

std::optional<bool> homomorphic_choice(AutGroup const &aut_h,
                                       AutGroup const &aut_g,
                                       std::vector<std::vector<bool>> const &extends)
{
  auto const &gens = aut_h.group->generators();
  std::vector<std::vector<Element>> choices;
  std::size_t space = 1;
  for (auto a : gens) {
    std::vector<Element> cs;
    for (std::size_t b = 0; b < extends[a].size(); ++b)
      if (extends[a][b])
        cs.push_back(static_cast<Element>(b));
    space *= std::max<std::size_t>(cs.size(), 1);
    if (space > MAX_EXTENSION_CHOICES)
      return std::nullopt;
    choices.push_back(std::move(cs));
  }

  std::vector<std::size_t> odometer(gens.size(), 0);
  std::vector<Element> images(gens.size());
  for (;;) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      images[i] = choices[i][odometer[i]];

    try {
      auto s = hom_from_generator_images(aut_h.group, aut_g.group, images);
      bool fits = true;
      for (std::size_t a = 0; a < aut_h.group->order() && fits; ++a)
        fits = extends[a][s(static_cast<Element>(a))];
      if (fits)
        return true;
    } catch (Error const &) {
      // not a homomorphism; try the next choice
    }

    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++odometer[i] < choices[i].size())
        break;
      odometer[i] = 0;
    }
    if (i == gens.size())
      return false;
  }
}

} // anonymous namespace

StructuralFlags structural_flags(GroupPtr const &group, HomEngine &engine)
{
  auto const &G = *group;
  StructuralFlags flags;

  flags.simple = G.order() > 1;
  for (std::size_t x = 0; x < G.order() && flags.simple; ++x) {
    auto e = static_cast<Element>(x);
    if (e == G.identity())
      continue;
    Element seed[] = {e};
    flags.simple = subgroup_generated(group, seed, true).is_whole();
  }

  flags.perfect = lower_central_series(group).term(1).is_whole();

  if (center(group).is_trivial()) {
    auto aut = engine.automorphisms(group);
    flags.complete = aut->inner.is_whole();
  }
  return flags;
}

std::vector<Subgroup> subgroups_isomorphic_to(GroupPtr const &group,
                                              GroupPtr const &pattern,
                                              HomEngine &engine)
{
  std::vector<std::vector<Element>> images;
  for (auto const &f : engine.homs(pattern, group)->homs())
    if (f.is_injective())
      images.push_back(f.image().members());
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());

  std::vector<Subgroup> result;
  for (auto &members : images)
    result.emplace_back(group, std::move(members));
  return result;
}

std::vector<std::size_t> automorphism_orbits(AutGroup const &aut,
                                             std::vector<Subgroup> const &subgroups)
{
  std::map<std::vector<Element>, std::size_t> position;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    position.emplace(subgroups[i].members(), i);

  constexpr std::size_t UNLABELED = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(subgroups.size(), UNLABELED);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (label[i] != UNLABELED)
      continue;
    label[i] = i;
    for (auto const &beta : aut.automorphisms) {
      auto it = position.find(mapped_members(beta, subgroups[i]));
      if (it != position.end() && label[it->second] == UNLABELED)
        label[it->second] = i;
    }
  }
  return label;
}

CriterionReport simple_envelope_criterion(GroupHom const &inclusion, HomEngine &engine)
{
  if (!inclusion.is_injective())
    throw Error("non-injective", "the criterion needs an injective homomorphism");

  auto const &H = inclusion.source();
  auto const &G = inclusion.target();

  CriterionReport report{inclusion, structural_flags(H, engine), structural_flags(G, engine)};
  report.applicable = report.source.simple && report.target.simple &&
                      !H->is_abelian() && !G->is_abelian();

  auto aut_h = engine.automorphisms(H);
  auto aut_g = engine.automorphisms(G);

  // condition 1: β∘φ = φ∘α, checked on the generators of H
  std::vector<std::vector<bool>> extends(aut_h->automorphisms.size(),
                                         std::vector<bool>(aut_g->automorphisms.size(), false));
  report.condition1 = true;
  for (std::size_t a = 0; a < aut_h->automorphisms.size(); ++a) {
    auto const &alpha = aut_h->automorphisms[a];
    bool found = false;
    for (std::size_t b = 0; b < aut_g->automorphisms.size(); ++b) {
      auto const &beta = aut_g->automorphisms[b];
      bool agrees = true;
      for (auto x : H->generators())
        if (beta(inclusion(x)) != inclusion(alpha(x))) {
          agrees = false;
          break;
        }
      if (agrees) {
        extends[a][b] = true;
        found = true;
      }
    }
    report.condition1 = report.condition1 && found;
  }

  // condition 2: a single Aut(G)-orbit of copies
  auto image = inclusion.image();
  auto copies = subgroups_isomorphic_to(G, H, engine);
  report.copies = copies.size();
  auto orbits = automorphism_orbits(*aut_g, copies);
  auto own = std::find(copies.begin(), copies.end(), image) - copies.begin();
  report.condition2 = std::all_of(orbits.begin(), orbits.end(), [&](std::size_t o) {
    return o == orbits[static_cast<std::size_t>(own)];
  });

  report.predicted_galois_order = centralizer(G, image.members()).order();

  if (report.condition1)
    report.homomorphic_extension = homomorphic_choice(*aut_h, *aut_g, extends);

  if (report.source.complete && report.target.complete) {
    bool all = true;
    for (auto const &copy : copies) {
      bool conjugate = false;
      for (std::size_t g = 0; g < G->order() && !conjugate; ++g) {
        auto x = static_cast<Element>(g);
        std::vector<Element> members;
        for (auto h : image.members())
          members.push_back(G->mul(G->mul(x, h), G->inv(x)));
        std::sort(members.begin(), members.end());
        conjugate = members == copy.members();
      }
      all = all && conjugate;
    }
    report.conjugate_in_target = all;
  }

  try {
    auto direct = classify_hom(inclusion, engine);
    report.direct_envelope = direct.flags[Flag::envelope];
    report.direct_localization = direct.flags[Flag::localization];
    report.galois_order = direct.galois.order();
  } catch (Error const &e) {
    if (e.code() != "size-cap" && e.code() != "order-cap-exceeded")
      throw;
  }

  if (report.applicable && report.direct_envelope) {
    bool ok = (report.condition1 && report.condition2) == *report.direct_envelope;
    if (*report.direct_envelope) {
      ok = ok && report.predicted_galois_order == *report.galois_order;
      if (report.predicted_galois_order == 1)
        ok = ok && *report.direct_localization;
    }
    if (report.conjugate_in_target)
      ok = ok && *report.conjugate_in_target == *report.direct_envelope;
    report.consistent = ok;
  }

  return report;
}

} // namespace grouper
