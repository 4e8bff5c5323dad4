#ifndef GUARD_GROUPER_FAMILIES_H
#define GUARD_GROUPER_FAMILIES_H

#include <string>
#include <string_view>
#include <vector>

#include "group.hpp"

namespace grouper
{

enum class Family
{
  trivial,
  cyclic,
  dihedral,
  symmetric,
  alternating,
  quaternion8,
  heisenberg,
  product
};

// A named family member. For dihedral the parameter is the group order
// (dihedral:6 is the symmetry group of the triangle); for heisenberg it is
// the prime p. product lists its factors.
struct FamilySpec
{
  Family family = Family::trivial;
  unsigned parameter = 0;
  std::vector<FamilySpec> factors;

  static FamilySpec cyclic(unsigned n) { return {Family::cyclic, n, {}}; }
  static FamilySpec dihedral(unsigned order) { return {Family::dihedral, order, {}}; }
  static FamilySpec symmetric(unsigned n) { return {Family::symmetric, n, {}}; }
  static FamilySpec alternating(unsigned n) { return {Family::alternating, n, {}}; }
  static FamilySpec quaternion8() { return {Family::quaternion8, 8, {}}; }
  static FamilySpec heisenberg(unsigned p) { return {Family::heisenberg, p, {}}; }
  static FamilySpec product(std::vector<FamilySpec> factors)
  { return {Family::product, 0, std::move(factors)}; }

  // descriptor text, e.g. "dihedral:6", "product:cyclic:2,cyclic:4"
  std::string str() const;
  // display name, e.g. "D_6", "Z/2xZ/4"
  std::string display_name() const;
};

// Parses a family descriptor; throws "unknown-family" or "parse-error".
FamilySpec parse_family(std::string_view descriptor);

// Canonical generators:
//   cyclic       one n-cycle
//   dihedral     rotation, then reflection
//   symmetric    (1 2) and (1 ... n)
//   alternating  (1 2 3) and (1 ... n) for odd n, (2 ... n) for even n
//   quaternion8  i, j acting regularly
//   heisenberg   x, y of the upper unitriangular 3x3 matrices over F_p,
//                acting regularly
// Throws "unsupported-family" for out-of-range parameters and
// "order-cap-exceeded" when the group would exceed MAX_GROUP_ORDER.
GroupPtr standard_group(FamilySpec const &spec);

inline GroupPtr standard_group(std::string_view descriptor)
{ return standard_group(parse_family(descriptor)); }

} // namespace grouper

#endif // GUARD_GROUPER_FAMILIES_H
