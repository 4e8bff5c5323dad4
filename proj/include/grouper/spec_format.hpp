#ifndef GUARD_GROUPER_SPEC_FORMAT_H
#define GUARD_GROUPER_SPEC_FORMAT_H

#include <string>
#include <string_view>
#include <vector>

#include "group.hpp"

/// Plain-text group specifications:
///
///   # comments run to the end of the line
///   name: Klein
///   (1 2)(3 4)
///   (1 3)(2 4)
///
/// or a single family descriptor line such as `dihedral:6`. Without a
/// `name:` line the name defaults to the family's display name, or to
/// "G" for permutation groups.

namespace grouper
{

enum class SpecKind
{
  family,
  permutations
};

struct GroupSpecFile
{
  std::string name;
  SpecKind kind = SpecKind::family;
  // the descriptor (family) or one cycle-notation line per generator
  std::vector<std::string> payload;
  bool named = false; // name came from a name: line
};

// Errors: "parse-error" with line and column, "malformed-cycle" (repeated
// or zero point), "unknown-family".
GroupSpecFile parse_group_spec(std::string_view text);

std::string emit_group_spec(GroupSpecFile const &spec);

GroupPtr build_group(GroupSpecFile const &spec);

// Cycle notation with 1-based points, "()" for the identity. Columns in
// errors are 1-based and offset by `column`.
Permutation parse_cycles(std::string_view line, std::size_t line_number = 1,
                         std::size_t column = 1);

} // namespace grouper

#endif // GUARD_GROUPER_SPEC_FORMAT_H
