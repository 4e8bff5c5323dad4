#ifndef GUARD_GROUPER_APPROX_H
#define GUARD_GROUPER_APPROX_H

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"
#include "homs.hpp"

/// Approximation-theoretic classification of homomorphisms φ: H → G:
/// localizations, cellular covers, envelopes and covers (absolute, and
/// relative to a finite class of groups), Galois and co-Galois groups,
/// socles, radicals and orthogonality.

namespace grouper
{

// A finite list of representatives; membership is up to isomorphism.
struct GroupClass
{
  std::string name;
  std::vector<GroupPtr> members;

  bool contains(GroupPtr const &group) const;

  static GroupClass of(std::vector<GroupPtr> members);
};

enum class Flag
{
  localization,
  cellular_cover,
  envelope,
  cover,
  preenvelope_of_target_class,
  precover_of_source_class
};

inline constexpr std::array<Flag, 6> ALL_FLAGS = {
  Flag::localization,
  Flag::cellular_cover,
  Flag::envelope,
  Flag::cover,
  Flag::preenvelope_of_target_class,
  Flag::precover_of_source_class};

// isLocalization, isCellularCover, ...
std::string flag_key(Flag flag);
std::optional<Flag> parse_flag_key(std::string const &key);

struct ApproxFlags
{
  std::array<bool, 6> values{};

  bool operator[](Flag flag) const
  { return values[static_cast<std::size_t>(flag)]; }

  bool &operator[](Flag flag)
  { return values[static_cast<std::size_t>(flag)]; }
};

enum class WitnessKind
{
  unlifted,                  // a hom not reached by the induced map
  non_automorphism_preimage, // a non-bijective f with fφ = φ (resp. φf = φ)
  non_injective              // two distinct maps with the same image
};

std::string witness_kind_name(WitnessKind kind);

struct Witness
{
  // name of the violated condition, a flag key for absolute flags
  std::string condition;
  WitnessKind kind;
  std::vector<GroupHom> maps;
};

enum class ClassSide
{
  envelope,
  cover
};

struct RelativeVerdict
{
  std::string class_name;
  ClassSide side;
  bool member;             // target (envelope) or source (cover) lies in the class
  bool pre;                // F-preenvelope / F-precover
  bool full;               // F-envelope / F-cover
  bool unique_liftings;    // every induced map is also injective
  std::vector<Witness> witnesses;
};

struct ClassificationReport
{
  GroupHom hom;
  ApproxFlags flags;
  std::shared_ptr<AutGroup const> target_automorphisms;
  std::shared_ptr<AutGroup const> source_automorphisms;
  Subgroup galois;    // {f ∈ Aut(G) : fφ = φ}
  Subgroup co_galois; // {f ∈ Aut(H) : φf = φ}
  std::vector<Witness> witnesses;
  std::optional<RelativeVerdict> relative;
};

ClassificationReport classify_hom(GroupHom const &hom, HomEngine &engine);

enum class GaloisSide
{
  target,
  source
};

// returned subgroup lives in engine.automorphisms(target or source)->group
Subgroup galois_group(GroupHom const &hom, GaloisSide side, HomEngine &engine);

// Throws "empty-class" for a class without members.
ClassificationReport classify_against_class(GroupHom const &hom,
                                            GroupClass const &cls,
                                            ClassSide side,
                                            HomEngine &engine);

// normal closure of the images of all homs from class members into G
Subgroup class_socle(GroupPtr const &group, GroupClass const &cls, HomEngine &engine);

struct Radical
{
  Subgroup radical;
  std::vector<Subgroup> chain; // T^0 ⊆ T^1 ⊆ ... up to stabilization
  Quotient epireflection;      // G ↠ G/T
};

// iterated socle of quotients for the epimorphisms {F → 1 : F in the class}
Radical class_radical(GroupPtr const &group, GroupClass const &cls, HomEngine &engine);

// g* : Hom(B,F) → Hom(A,F) is a bijection for every representative F
bool is_orthogonal(GroupHom const &g, GroupClass const &cls, HomEngine &engine);

struct Epireflection
{
  Subgroup kernel;
  Quotient quotient;
};

// Epireflection for the surjections in ^⊥F: the quotient by the largest
// normal N whose projection is orthogonal to the class, found by testing
// each normal subgroup with is_orthogonal.
Epireflection orthogonal_epireflection(GroupPtr const &group,
                                       GroupClass const &cls,
                                       HomEngine &engine);

struct ImageFactorization
{
  GroupHom epi;  // source ↠ Im φ
  GroupHom mono; // Im φ ↪ target
};

ImageFactorization image_factorize(GroupHom const &hom);

// exists an isomorphism α: target(a) → target(b) with α∘a = b
bool isomorphic_under(GroupHom const &a, GroupHom const &b);

} // namespace grouper

#endif // GUARD_GROUPER_APPROX_H
