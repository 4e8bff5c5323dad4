#include "grouper/families.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "grouper/error.hpp"

namespace grouper
{

namespace
{

struct PermGenerators
{
  unsigned degree;
  std::vector<Permutation> gens;
};

Permutation cycle_on(unsigned first, unsigned last)
{
  std::vector<unsigned> cycle(last - first + 1);
  std::iota(cycle.begin(), cycle.end(), first);
  return Permutation::from_cycles(last, {cycle});
}

// left regular action of the generators of a group given by a product rule
PermGenerators regular_action(unsigned order,
                              std::function<unsigned(unsigned, unsigned)> const &mul,
                              std::vector<unsigned> const &gens)
{
  PermGenerators result{order, {}};
  for (auto g : gens) {
    std::vector<Permutation::Point> images(order);
    for (unsigned x = 0; x < order; ++x)
      images[x] = static_cast<Permutation::Point>(mul(g, x));
    result.gens.emplace_back(std::move(images));
  }
  return result;
}

std::size_t expected_order(FamilySpec const &spec)
{
  auto factorial = [](unsigned n) {
    std::size_t f = 1;
    for (unsigned i = 2; i <= n; ++i)
      f *= i;
    return f;
  };

  switch (spec.family) {
  case Family::trivial:
    return 1;
  case Family::cyclic:
  case Family::dihedral:
    return spec.parameter;
  case Family::symmetric:
    return factorial(spec.parameter);
  case Family::alternating:
    return spec.parameter <= 1 ? 1 : factorial(spec.parameter) / 2;
  case Family::quaternion8:
    return 8;
  case Family::heisenberg:
    return static_cast<std::size_t>(spec.parameter) * spec.parameter * spec.parameter;
  case Family::product: {
    std::size_t order = 1;
    for (auto const &f : spec.factors) {
      order *= expected_order(f);
      if (order > MAX_GROUP_ORDER)
        return order;
    }
    return order;
  }
  }
  return 0;
}

void validate(FamilySpec const &spec)
{
  auto unsupported = [&](std::string const &why) {
    throw Error("unsupported-family", spec.str() + ": " + why);
  };

  switch (spec.family) {
  case Family::trivial:
  case Family::quaternion8:
    break;
  case Family::cyclic:
    if (spec.parameter < 1)
      unsupported("cyclic order must be positive");
    break;
  case Family::dihedral:
    if (spec.parameter < 2 || spec.parameter % 2 != 0)
      unsupported("dihedral order must be even and at least 2");
    break;
  case Family::symmetric:
  case Family::alternating:
    if (spec.parameter < 1 || spec.parameter > 7)
      unsupported("degree must lie in 1..7");
    break;
  case Family::heisenberg:
    if (spec.parameter != 2 && spec.parameter != 3 && spec.parameter != 5)
      unsupported("p must be a prime at most 5");
    break;
  case Family::product:
    if (spec.factors.empty())
      unsupported("product needs at least one factor");
    for (auto const &f : spec.factors) {
      if (f.family == Family::product)
        unsupported("nested products are not supported");
      validate(f);
    }
    break;
  }
}

PermGenerators generators_of(FamilySpec const &spec)
{
  switch (spec.family) {
  case Family::trivial:
    return {1, {}};

  case Family::cyclic:
    if (spec.parameter == 1)
      return {1, {}};
    return {spec.parameter, {cycle_on(1, spec.parameter)}};

  case Family::dihedral: {
    unsigned n = spec.parameter / 2;
    if (n == 1)
      return {2, {Permutation(2u), Permutation::from_cycles(2, {{1, 2}})}};
    if (n == 2)
      return {4,
              {Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
               Permutation::from_cycles(4, {{1, 3}, {2, 4}})}};

    std::vector<std::vector<unsigned>> reflection;
    for (unsigned i = 1; i < n + 1 - i; ++i)
      reflection.push_back({i, n + 1 - i});
    return {n, {cycle_on(1, n), Permutation::from_cycles(n, reflection)}};
  }

  case Family::symmetric: {
    unsigned n = spec.parameter;
    if (n == 1)
      return {1, {}};
    if (n == 2)
      return {2, {Permutation::from_cycles(2, {{1, 2}})}};
    return {n, {Permutation::from_cycles(n, {{1, 2}}), cycle_on(1, n)}};
  }

  case Family::alternating: {
    unsigned n = spec.parameter;
    if (n <= 2)
      return {1, {}};
    if (n == 3)
      return {3, {cycle_on(1, 3)}};
    auto long_cycle = n % 2 == 1 ? cycle_on(1, n) : cycle_on(2, n);
    return {n, {Permutation::from_cycles(n, {{1, 2, 3}}), long_cycle}};
  }

  case Family::quaternion8: {
    // element s*4 + u is (-1)^s * unit[u], units 1, i, j, k
    static constexpr unsigned unit_product[4][4] = {
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0}};
    static constexpr bool negated[4][4] = {
      {false, false, false, false},
      {false, true, false, true},
      {false, true, true, false},
      {false, false, true, true}};

    auto mul = [](unsigned a, unsigned b) {
      unsigned ua = a % 4, ub = b % 4;
      unsigned sign = (a / 4 + b / 4 + (negated[ua][ub] ? 1 : 0)) % 2;
      return sign * 4 + unit_product[ua][ub];
    };
    return regular_action(8, mul, {1, 2});
  }

  case Family::heisenberg: {
    unsigned p = spec.parameter;
    // (a, b, c) ~ [[1, a, c], [0, 1, b], [0, 0, 1]], index (a * p + b) * p + c
    auto mul = [p](unsigned x, unsigned y) {
      unsigned a = x / (p * p), b = (x / p) % p, c = x % p;
      unsigned a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      unsigned ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      return (ra * p + rb) * p + rc;
    };
    return regular_action(p * p * p, mul, {p * p, p});
  }

  case Family::product: {
    PermGenerators result{0, {}};
    for (auto const &factor : spec.factors) {
      auto part = generators_of(factor);
      for (auto const &g : part.gens) {
        std::vector<Permutation::Point> images(result.degree + part.degree);
        std::iota(images.begin(), images.end(), Permutation::Point(0));
        for (unsigned x = 0; x < part.degree; ++x)
          images[result.degree + x] =
            static_cast<Permutation::Point>(result.degree + g[static_cast<Permutation::Point>(x)]);
        result.gens.emplace_back(std::move(images));
      }
      result.degree += part.degree;
    }
    for (auto &g : result.gens)
      g = g.extended(result.degree);
    return result;
  }
  }

  throw Error("unsupported-family", "unknown family");
}

unsigned parse_parameter(std::string_view text, std::string_view descriptor)
{
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error("parse-error", "bad parameter in family descriptor '" +
                               std::string(descriptor) + "'");
  return value;
}

} // anonymous namespace

std::string FamilySpec::str() const
{
  switch (family) {
  case Family::trivial:
    return "trivial";
  case Family::cyclic:
    return "cyclic:" + std::to_string(parameter);
  case Family::dihedral:
    return "dihedral:" + std::to_string(parameter);
  case Family::symmetric:
    return "symmetric:" + std::to_string(parameter);
  case Family::alternating:
    return "alternating:" + std::to_string(parameter);
  case Family::quaternion8:
    return "quaternion8";
  case Family::heisenberg:
    return "heisenberg:" + std::to_string(parameter);
  case Family::product: {
    std::string s = "product:";
    for (std::size_t i = 0; i < factors.size(); ++i)
      s += (i ? "," : "") + factors[i].str();
    return s;
  }
  }
  return {};
}

std::string FamilySpec::display_name() const
{
  switch (family) {
  case Family::trivial:
    return "trivial";
  case Family::cyclic:
    return parameter == 1 ? "trivial" : "Z/" + std::to_string(parameter);
  case Family::dihedral:
    return "D_" + std::to_string(parameter);
  case Family::symmetric:
    return "S_" + std::to_string(parameter);
  case Family::alternating:
    return "A_" + std::to_string(parameter);
  case Family::quaternion8:
    return "Q_8";
  case Family::heisenberg:
    return "Heis_" + std::to_string(parameter);
  case Family::product: {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i)
      s += (i ? "x" : "") + factors[i].display_name();
    return s;
  }
  }
  return {};
}

FamilySpec parse_family(std::string_view descriptor)
{
  std::string text;
  for (char c : descriptor)
    if (!std::isspace(static_cast<unsigned char>(c)))
      text.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string_view rest = colon == std::string::npos
                        ? std::string_view()
                        : std::string_view(text).substr(colon + 1);

  auto needs_parameter = [&] {
    if (colon == std::string::npos)
      throw Error("parse-error", "family '" + head + "' needs a parameter");
    return parse_parameter(rest, descriptor);
  };

  if (head == "trivial" && colon == std::string::npos)
    return {};
  if (head == "cyclic")
    return FamilySpec::cyclic(needs_parameter());
  if (head == "dihedral")
    return FamilySpec::dihedral(needs_parameter());
  if (head == "symmetric")
    return FamilySpec::symmetric(needs_parameter());
  if (head == "alternating")
    return FamilySpec::alternating(needs_parameter());
  if (head == "heisenberg")
    return FamilySpec::heisenberg(needs_parameter());
  if (head == "quaternion8" && colon == std::string::npos)
    return FamilySpec::quaternion8();
  if (head == "quaternion" && needs_parameter() == 8)
    return FamilySpec::quaternion8();

  if (head == "product") {
    if (rest.empty())
      throw Error("parse-error", "product needs factors");

    std::vector<FamilySpec> factors;
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto comma = rest.find(',', start);
      auto piece = rest.substr(start, comma == std::string_view::npos
                                      ? std::string_view::npos
                                      : comma - start);
      factors.push_back(parse_family(piece));
      if (comma == std::string_view::npos)
        break;
      start = comma + 1;
    }
    return FamilySpec::product(std::move(factors));
  }

  throw Error("unknown-family", "unknown family descriptor '" +
                                std::string(descriptor) + "'");
}

GroupPtr standard_group(FamilySpec const &spec)
{
  validate(spec);

  if (auto order = expected_order(spec); order > MAX_GROUP_ORDER)
    throw Error("order-cap-exceeded",
                spec.str() + " has order " + std::to_string(order) +
                " above the cap of " + std::to_string(MAX_GROUP_ORDER));

  auto perms = generators_of(spec);

  // regular representations exceed the degree limit meant for user input
  BuildLimits limits;
  limits.max_degree = std::max(limits.max_degree, perms.degree);

  return build_from_permutations(perms.gens, spec.display_name(), limits);
}

} // namespace grouper
