#include "grouper/spec_format.hpp"

#include <cctype>

#include "grouper/error.hpp"
#include "grouper/families.hpp"

namespace grouper
{

namespace
{

std::string where(std::size_t line, std::size_t column)
{ return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": "; }

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // anonymous namespace

Permutation parse_cycles(std::string_view line, std::size_t line_number, std::size_t column)
{
  std::vector<std::vector<unsigned>> cycles;
  std::vector<bool> seen;
  bool open = false;
  unsigned degree = 1;

  std::size_t i = 0;
  auto fail = [&](std::string const &code, std::string const &message) {
    throw Error(code, where(line_number, column + i) + message);
  };

  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c)) || (open && c == ',')) {
      ++i;
    } else if (c == '(') {
      if (open)
        fail("parse-error", "nested '('");
      open = true;
      cycles.emplace_back();
      ++i;
    } else if (c == ')') {
      if (!open)
        fail("parse-error", "unmatched ')'");
      open = false;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open)
        fail("parse-error", "point outside a cycle");
      std::size_t start = i;
      unsigned long value = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        value = value * 10 + static_cast<unsigned>(line[i] - '0');
        if (value > 65535) {
          i = start;
          fail("parse-error", "point label too large");
        }
        ++i;
      }
      if (value == 0) {
        i = start;
        fail("malformed-cycle", "point labels must be positive");
      }
      if (seen.size() <= value)
        seen.resize(value + 1, false);
      if (seen[value]) {
        i = start;
        fail("malformed-cycle", "point " + std::to_string(value) + " repeated");
      }
      seen[value] = true;
      degree = std::max(degree, static_cast<unsigned>(value));
      cycles.back().push_back(static_cast<unsigned>(value));
    } else {
      fail("parse-error", std::string("unexpected '") + c + "'");
    }
  }
  if (open)
    fail("parse-error", "unclosed '('");
  if (cycles.empty())
    fail("parse-error", "expected cycle notation");

  return Permutation::from_cycles(degree, cycles);
}

GroupSpecFile parse_group_spec(std::string_view text)
{
  GroupSpecFile spec;
  std::size_t line_number = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    auto raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;

    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    auto line = trim(raw);
    if (line.empty())
      continue;
    std::size_t column = static_cast<std::size_t>(line.data() - raw.data()) + 1;

    if (line.substr(0, 5) == "name:") {
      if (spec.named)
        throw Error("parse-error", where(line_number, column) + "duplicate name line");
      auto name = trim(line.substr(5));
      if (name.empty())
        throw Error("parse-error", where(line_number, column) + "empty name");
      spec.name = std::string(name);
      spec.named = true;
      continue;
    }

    if (spec.payload.empty()) {
      spec.kind = line.front() == '(' ? SpecKind::permutations : SpecKind::family;
    } else if (spec.kind == SpecKind::family) {
      throw Error("parse-error", where(line_number, column) +
                                 "a family descriptor must stand alone");
    } else if (line.front() != '(') {
      throw Error("parse-error", where(line_number, column) + "expected cycle notation");
    }

    if (spec.kind == SpecKind::permutations) {
      parse_cycles(line, line_number, column);
    } else {
      parse_family(line);
    }
    spec.payload.emplace_back(line);
  }

  if (spec.payload.empty())
    throw Error("parse-error", where(line_number, 1) + "no generators or family descriptor");

  if (!spec.named)
    spec.name = spec.kind == SpecKind::family ? parse_family(spec.payload[0]).display_name()
                                              : "G";
  return spec;
}

std::string emit_group_spec(GroupSpecFile const &spec)
{
  std::string text;
  if (spec.named)
    text += "name: " + spec.name + "\n";
  for (auto const &line : spec.payload)
    text += line + "\n";
  return text;
}

GroupPtr build_group(GroupSpecFile const &spec)
{
  if (spec.kind == SpecKind::family) {
    auto group = standard_group(parse_family(spec.payload.at(0)));
    return spec.named ? group->renamed(spec.name) : group;
  }

  std::vector<Permutation> gens;
  std::size_t line = 1;
  for (auto const &text : spec.payload)
    gens.push_back(parse_cycles(text, line++));
  return build_from_permutations(gens, spec.name);
}

} // namespace grouper
