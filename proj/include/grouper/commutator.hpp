#ifndef GUARD_GROUPER_COMMUTATOR_H
#define GUARD_GROUPER_COMMUTATOR_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "group.hpp"

/// Commutator calculus with the convention [x,y] = x·y·x⁻¹·y⁻¹, central
/// series, and exhaustive or sampled checks of the classical commutator
/// identities and the j-central elimination lemmas.

namespace grouper
{

Element commutator(FiniteGroup const &group, Element x, Element y);

// [y1, ..., yr] = [[...[y1, y2], ...], yr]; a single entry is returned as is.
// Throws "empty-list" for an empty span.
Element left_normed_commutator(FiniteGroup const &group,
                               std::span<Element const> ys);

enum class SeriesKind
{
  lower,
  upper
};

// lower: terms[0] = G, terms[r] = Γ^{r+1}G = [Γ^r G, G]
// upper: terms[0] = 1, terms[j] = Z_j with Z_{j+1}/Z_j = Z(G/Z_j)
// Both stop at the first repeated term, which is not stored twice.
struct CentralSeries
{
  GroupPtr group;
  SeriesKind kind;
  std::vector<Subgroup> terms;
  std::optional<unsigned> nilpotency_class;

  // Z_j (upper) or Γ^{j+1} (lower); indices past the end give the stable term
  Subgroup const &term(std::size_t j) const
  { return terms[std::min(j, terms.size() - 1)]; }
};

CentralSeries lower_central_series(GroupPtr const &group);
CentralSeries upper_central_series(GroupPtr const &group);

// x ∈ Z_j, read off an upper series
bool is_j_central(CentralSeries const &upper, Element x, unsigned j);

std::optional<unsigned> nilpotency_class(GroupPtr const &group);

inline bool is_nilpotent(GroupPtr const &group)
{ return nilpotency_class(group).has_value(); }

enum class LemmaId
{
  identities_a,           // [a,xy] = [a,x][x,[a,y]][a,y]
  identities_b,           // [xy,z] = [y,z][[y,z],x][x,z]
  identities_b_corrected, // [xy,z] = [y,z][[z,y],x][x,z]
  centrals_1,             // b ∈ Z_j: [abc,z1..zj] = [ac,z1..zj]
  centrals_2,             // b ∈ Z_{j+1}: the four-way chain of equalities
  homo                    // the XYX' splitting under its centrality hypotheses
};

std::string lemma_name(LemmaId id);

struct LemmaConfig
{
  std::uint64_t max_tuples = 1000000;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0xC0FFEE;
  // j ranges over 1..max_j; by default up to (class or series length) + 1
  std::optional<unsigned> max_j;
  bool include_corrected = true;
};

struct LemmaReport
{
  std::string group;
  LemmaId lemma;
  unsigned j = 0;                   // 0 for the identities
  std::uint64_t tuples = 0;         // tuples examined
  std::uint64_t applicable = 0;     // tuples meeting the lemma's hypotheses
  std::uint64_t failures = 0;
  std::vector<std::vector<Element>> counterexamples; // first few, sorted
  bool exhaustive = false;
};

// Whether a lemma is a claimed theorem (counterexamples are violations) or
// an informational variant.
bool is_claimed(LemmaId id);

std::vector<LemmaReport> check_commutator_lemmas(GroupPtr const &group,
                                                 LemmaConfig const &config = {});

// only the identities, over all triples
std::vector<LemmaReport> check_commutator_identities(GroupPtr const &group,
                                                     LemmaConfig const &config = {});

} // namespace grouper

#endif // GUARD_GROUPER_COMMUTATOR_H
