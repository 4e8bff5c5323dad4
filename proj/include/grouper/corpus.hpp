#ifndef GUARD_GROUPER_CORPUS_H
#define GUARD_GROUPER_CORPUS_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "approx.hpp"
#include "group.hpp"
#include "homs.hpp"

/// A deterministic corpus of small groups from the standard families, the
/// theorem suites that run over it, and the approximation search explorer.

namespace grouper
{

// Cyclic groups, products of two or three cyclic factors, dihedral, Q_8,
// symmetric, alternating and Heisenberg groups of order at most max_order,
// one per isomorphism type, sorted by (order, name). Throws "size-cap"
// above MAX_ENUMERATION_ORDER.
std::vector<GroupPtr> generate_corpus(std::size_t max_order);

// "trivial", invariant factors such as "Z/2xZ/4" for abelian groups, a
// family name for recognised non-abelian groups, otherwise
// "nonabelian group of order n".
std::string structure_name(GroupPtr const &group);

inline constexpr double PAIR_BUDGET = 1e8;

// |G|^{|generating_set(H)|}
double pair_cost(FiniteGroup const &source, FiniteGroup const &target);

struct Violation
{
  std::string subject; // "H -> G" or a group name
  std::string hom;     // generator images, empty when not hom-specific
  std::string law;

  auto operator<=>(Violation const &) const = default;
};

struct Skip
{
  std::string subject;
  std::string reason;

  auto operator<=>(Skip const &) const = default;
};

struct SuiteReport
{
  std::string suite;
  std::size_t total_pairs = 0;
  std::size_t pairs_examined = 0;
  std::size_t homs_classified = 0;
  std::vector<Violation> violations; // sorted
  std::vector<Skip> skipped;         // sorted
  // informational tallies (out-of-hypothesis cases, unclaimed variants)
  std::map<std::string, std::uint64_t> notes;
  // per subject wall-clock seconds, filled only when timing is requested
  std::map<std::string, double> timings;
};

struct SuiteOptions
{
  unsigned jobs = 1;
  bool timing = false;
};

// Suite ids: cogalois, galois, charac-env, reduction, socle-cover,
// radical-envelope, lemmas. Throws "unknown-suite" otherwise.
SuiteReport run_theorem_suite(std::vector<GroupPtr> const &corpus,
                              std::string const &suite,
                              HomEngine &engine,
                              SuiteOptions const &options = {});

std::vector<std::string> suite_ids();

enum class SearchKind
{
  envelope,
  cover,
  localization,
  cellular
};

SearchKind parse_search_kind(std::string const &text);
std::string search_kind_name(SearchKind kind);

// members of Hom(H,G) carrying the requested flag, in canonical order
std::vector<GroupHom> search_approximations(GroupPtr const &source,
                                            GroupPtr const &target,
                                            SearchKind kind,
                                            bool injective_only,
                                            HomEngine &engine);

// "[3, 5]": images of the source's generators
std::string hom_label(GroupHom const &hom);

} // namespace grouper

#endif // GUARD_GROUPER_CORPUS_H
