#include "grouper/commutator.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "grouper/error.hpp"

namespace grouper
{

namespace
{

constexpr std::size_t MAX_STORED_COUNTEREXAMPLES = 16;

// [head, rest_0, rest_1, ...]
Element left_normed(FiniteGroup const &G, Element head, std::span<Element const> rest)
{
  for (auto z : rest)
    head = commutator(G, head, z);
  return head;
}

struct Domain
{
  std::vector<std::vector<Element>> coordinates;

  long double size() const
  {
    long double s = 1;
    for (auto const &c : coordinates)
      s *= static_cast<long double>(c.size());
    return s;
  }
};

struct Verdict
{
  bool applicable;
  bool holds;
};

// Runs check over every tuple of the domain when it has at most max_tuples
// points, otherwise over `samples` seeded uniform draws.
template<typename CHECK>
void sweep(Domain const &domain,
           LemmaConfig const &config,
           std::uint64_t stream,
           LemmaReport &report,
           CHECK &&check)
{
  auto k = domain.coordinates.size();
  std::vector<Element> tuple(k);
  std::set<std::vector<Element>> counterexamples;

  auto record = [&](Verdict v) {
    ++report.tuples;
    if (!v.applicable)
      return;
    ++report.applicable;
    if (v.holds)
      return;
    ++report.failures;
    counterexamples.insert(tuple);
    if (counterexamples.size() > MAX_STORED_COUNTEREXAMPLES)
      counterexamples.erase(std::prev(counterexamples.end()));
  };

  for (auto const &c : domain.coordinates)
    if (c.empty())
      return;

  if (domain.size() <= static_cast<long double>(config.max_tuples)) {
    report.exhaustive = true;
    std::vector<std::size_t> odometer(k, 0);
    for (;;) {
      for (std::size_t i = 0; i < k; ++i)
        tuple[i] = domain.coordinates[i][odometer[i]];
      record(check(std::span<Element const>(tuple)));

      std::size_t i = k;
      while (i > 0) {
        --i;
        if (++odometer[i] < domain.coordinates[i].size())
          break;
        odometer[i] = 0;
        if (i == 0) {
          i = k + 1;
          break;
        }
      }
      if (i == k + 1 || k == 0)
        break;
    }
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(config.seed ^ (stream * 0x9E3779B97F4A7C15ull));
    for (std::uint64_t s = 0; s < config.samples; ++s) {
      for (std::size_t i = 0; i < k; ++i) {
        auto const &c = domain.coordinates[i];
        std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
        tuple[i] = c[pick(rng)];
      }
      record(check(std::span<Element const>(tuple)));
    }
  }

  report.counterexamples.assign(counterexamples.begin(), counterexamples.end());
}

std::vector<Element> all_elements(FiniteGroup const &G)
{
  std::vector<Element> xs(G.order());
  for (std::size_t i = 0; i < xs.size(); ++i)
    xs[i] = static_cast<Element>(i);
  return xs;
}

LemmaReport identity_report(GroupPtr const &group,
                            LemmaId id,
                            LemmaConfig const &config)
{
  auto const &G = *group;
  LemmaReport report{G.name(), id, 0, 0, 0, 0, {}, false};
  auto xs = all_elements(G);
  Domain domain{{xs, xs, xs}};

  auto c = [&](Element x, Element y) { return commutator(G, x, y); };
  auto m = [&](Element x, Element y) { return G.mul(x, y); };

  sweep(domain, config, static_cast<std::uint64_t>(id), report,
        [&](std::span<Element const> t) -> Verdict {
    switch (id) {
    case LemmaId::identities_a: {
      Element a = t[0], x = t[1], y = t[2];
      Element rhs = m(m(c(a, x), c(x, c(a, y))), c(a, y));
      return {true, c(a, m(x, y)) == rhs};
    }
    case LemmaId::identities_b: {
      Element x = t[0], y = t[1], z = t[2];
      Element rhs = m(m(c(y, z), c(c(y, z), x)), c(x, z));
      return {true, c(m(x, y), z) == rhs};
    }
    default: {
      Element x = t[0], y = t[1], z = t[2];
      Element rhs = m(m(c(y, z), c(c(z, y), x)), c(x, z));
      return {true, c(m(x, y), z) == rhs};
    }
    }
  });
  return report;
}

} // anonymous namespace

Element commutator(FiniteGroup const &group, Element x, Element y)
{ return group.mul(group.mul(x, y), group.mul(group.inv(x), group.inv(y))); }

Element left_normed_commutator(FiniteGroup const &group,
                               std::span<Element const> ys)
{
  if (ys.empty())
    throw Error("empty-list", "left-normed commutator of an empty list");
  return left_normed(group, ys[0], ys.subspan(1));
}

CentralSeries lower_central_series(GroupPtr const &group)
{
  auto const &G = *group;
  CentralSeries series{group, SeriesKind::lower, {whole_group(group)}, std::nullopt};

  for (;;) {
    auto const &previous = series.terms.back();
    std::vector<bool> seen(G.order(), false);
    std::vector<Element> seed;
    for (auto a : previous.members())
      for (std::size_t g = 0; g < G.order(); ++g) {
        Element c = commutator(G, a, static_cast<Element>(g));
        if (!seen[c]) {
          seen[c] = true;
          seed.push_back(c);
        }
      }

    auto next = subgroup_generated(group, seed, false);
    if (next == previous)
      break;
    series.terms.push_back(std::move(next));
  }

  if (series.terms.back().is_trivial())
    series.nilpotency_class = static_cast<unsigned>(series.terms.size() - 1);
  return series;
}

CentralSeries upper_central_series(GroupPtr const &group)
{
  auto const &G = *group;
  CentralSeries series{group, SeriesKind::upper, {trivial_subgroup(group)}, std::nullopt};

  for (;;) {
    auto const &previous = series.terms.back();
    auto quotient = quotient_group(group, previous);
    auto z = center(quotient.group);

    std::vector<Element> preimage;
    for (std::size_t x = 0; x < G.order(); ++x)
      if (z.contains(quotient.projection(static_cast<Element>(x))))
        preimage.push_back(static_cast<Element>(x));

    Subgroup next(group, std::move(preimage));
    if (next == previous)
      break;
    series.terms.push_back(std::move(next));
  }

  if (series.terms.back().is_whole())
    series.nilpotency_class = static_cast<unsigned>(series.terms.size() - 1);
  return series;
}

bool is_j_central(CentralSeries const &upper, Element x, unsigned j)
{ return upper.term(j).contains(x); }

std::optional<unsigned> nilpotency_class(GroupPtr const &group)
{ return lower_central_series(group).nilpotency_class; }

std::string lemma_name(LemmaId id)
{
  switch (id) {
  case LemmaId::identities_a:
    return "identities-a";
  case LemmaId::identities_b:
    return "identities-b";
  case LemmaId::identities_b_corrected:
    return "identities-b-corrected";
  case LemmaId::centrals_1:
    return "centrals-1";
  case LemmaId::centrals_2:
    return "centrals-2";
  case LemmaId::homo:
    return "homo";
  }
  return "unknown";
}

bool is_claimed(LemmaId id)
{ return id != LemmaId::identities_b_corrected; }

std::vector<LemmaReport> check_commutator_identities(GroupPtr const &group,
                                                     LemmaConfig const &config)
{
  std::vector<LemmaReport> reports;
  reports.push_back(identity_report(group, LemmaId::identities_a, config));
  reports.push_back(identity_report(group, LemmaId::identities_b, config));
  if (config.include_corrected)
    reports.push_back(identity_report(group, LemmaId::identities_b_corrected, config));
  return reports;
}

std::vector<LemmaReport> check_commutator_lemmas(GroupPtr const &group,
                                                 LemmaConfig const &config)
{
  auto const &G = *group;
  auto reports = check_commutator_identities(group, config);

  auto upper = upper_central_series(group);
  unsigned max_j = config.max_j.value_or(
    upper.nilpotency_class ? *upper.nilpotency_class + 1
                           : static_cast<unsigned>(upper.terms.size()));
  max_j = std::max(max_j, 1u);

  auto xs = all_elements(G);
  auto c = [&](Element x, Element y) { return commutator(G, x, y); };
  auto m = [&](Element x, Element y) { return G.mul(x, y); };

  for (unsigned j = 1; j <= max_j; ++j) {
    auto const &zj = upper.term(j).members();
    auto const &zj1 = upper.term(j + 1).members();

    // centrals-1: tuple (a, b, c, z_1..z_j)
    {
      LemmaReport report{G.name(), LemmaId::centrals_1, j, 0, 0, 0, {}, false};
      Domain domain{{xs, zj, xs}};
      for (unsigned i = 0; i < j; ++i)
        domain.coordinates.push_back(xs);

      sweep(domain, config, 100 + j, report, [&](std::span<Element const> t) -> Verdict {
        Element a = t[0], b = t[1], cc = t[2];
        auto zs = t.subspan(3);
        return {true, left_normed(G, m(m(a, b), cc), zs) == left_normed(G, m(a, cc), zs)};
      });
      reports.push_back(std::move(report));
    }

    // centrals-2: tuple (a, b, c, z_1..z_j), b ∈ Z_{j+1}
    {
      LemmaReport report{G.name(), LemmaId::centrals_2, j, 0, 0, 0, {}, false};
      Domain domain{{xs, zj1, xs}};
      for (unsigned i = 0; i < j; ++i)
        domain.coordinates.push_back(xs);

      sweep(domain, config, 200 + j, report, [&](std::span<Element const> t) -> Verdict {
        Element a = t[0], b = t[1], cc = t[2];
        auto zs = t.subspan(3);
        Element ac = m(a, cc);
        Element lhs = left_normed(G, m(m(a, b), cc), zs);
        Element acb = left_normed(G, m(ac, b), zs);
        Element split = left_normed(G, m(c(ac, zs[0]), c(b, zs[0])), zs.subspan(1));
        Element product = m(left_normed(G, ac, zs), left_normed(G, b, zs));
        return {true, lhs == acb && lhs == split && lhs == product};
      });
      reports.push_back(std::move(report));
    }

    // homo: tuple (X, X', Y, a, z_1..z_j)
    {
      LemmaReport report{G.name(), LemmaId::homo, j, 0, 0, 0, {}, false};
      Domain domain{{xs, xs, xs, xs}};
      for (unsigned i = 0; i < j; ++i)
        domain.coordinates.push_back(xs);

      sweep(domain, config, 300 + j, report, [&](std::span<Element const> t) -> Verdict {
        Element X = t[0], Xp = t[1], Y = t[2], a = t[3];
        auto zs = t.subspan(4);

        bool hypothesis = is_j_central(upper, c(Y, c(a, Xp)), j) &&
                          is_j_central(upper, c(a, Y), j + 1);
        if (!hypothesis)
          return {false, true};

        Element XX = m(X, Xp);
        Element lhs = left_normed(G, c(a, m(m(X, Y), Xp)), zs);
        Element split = left_normed(G, m(c(a, XX), c(a, Y)), zs);
        Element product = m(left_normed(G, c(a, XX), zs), left_normed(G, c(a, Y), zs));
        return {true, lhs == split && lhs == product};
      });
      reports.push_back(std::move(report));
    }
  }

  return reports;
}

} // namespace grouper
