#ifndef GUARD_GROUPER_SIMPLE_CRITERION_H
#define GUARD_GROUPER_SIMPLE_CRITERION_H

#include <optional>
#include <vector>

#include "approx.hpp"
#include "group.hpp"
#include "homs.hpp"

/// The envelope criterion for an inclusion H ↪ G of non-abelian simple
/// groups: automorphisms of H extend to G, and all copies of H in G are
/// Aut(G)-conjugate. The Galois group is then the centralizer of H.

namespace grouper
{

struct StructuralFlags
{
  bool simple = false;
  bool perfect = false;
  bool complete = false;
};

StructuralFlags structural_flags(GroupPtr const &group, HomEngine &engine);

// images of the injective homs H → G, as distinct subgroups sorted by members
std::vector<Subgroup> subgroups_isomorphic_to(GroupPtr const &group,
                                              GroupPtr const &pattern,
                                              HomEngine &engine);

// Orbit label of each subgroup under the action of Aut(G) on element sets;
// labels are the index of the first subgroup in the orbit.
std::vector<std::size_t> automorphism_orbits(AutGroup const &aut,
                                             std::vector<Subgroup> const &subgroups);

struct CriterionReport
{
  GroupHom inclusion;
  StructuralFlags source;
  StructuralFlags target;
  // both groups simple and non-abelian
  bool applicable = false;
  bool condition1 = false; // every α ∈ Aut(H) extends to some β ∈ Aut(G)
  bool condition2 = false; // all copies of H lie in one Aut(G)-orbit
  std::size_t copies = 0;
  std::size_t predicted_galois_order = 0; // |C_G(H)|

  // from classify_hom when the groups are within enumeration caps
  std::optional<bool> direct_envelope = std::nullopt;
  std::optional<bool> direct_localization = std::nullopt;
  std::optional<std::size_t> galois_order = std::nullopt;

  // both groups complete: every copy is conjugate to H by an element of G
  std::optional<bool> conjugate_in_target = std::nullopt;

  // whether α ↦ extension can be chosen as a homomorphism Aut(H) → Aut(G);
  // computed only when the choice space is small
  std::optional<bool> homomorphic_extension = std::nullopt;

  // criterion, Galois order, corollaries and direct verdict agree; absent
  // when the criterion does not apply or no direct verdict exists
  std::optional<bool> consistent = std::nullopt;
};

// Throws "non-injective" unless the map is injective.
CriterionReport simple_envelope_criterion(GroupHom const &inclusion, HomEngine &engine);

} // namespace grouper

#endif // GUARD_GROUPER_SIMPLE_CRITERION_H
