#include "grouper/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>

#include "grouper/commutator.hpp"
#include "grouper/error.hpp"
#include "grouper/families.hpp"
#include "parallel.hpp"

namespace grouper
{

namespace
{

std::vector<unsigned> prime_factors(std::size_t n)
{
  std::vector<unsigned> primes;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    primes.push_back(static_cast<unsigned>(n));
  return primes;
}

std::vector<std::size_t> abelian_invariants(FiniteGroup const &G)
{
  std::vector<std::vector<std::size_t>> powers; // per prime, descending
  for (auto p : prime_factors(G.order())) {
    // d[k] = number of cyclic p-factors of exponent at least k
    std::vector<unsigned> d;
    std::size_t previous = 1;
    for (std::size_t pk = p;; pk *= p) {
      std::size_t count = 0;
      for (auto o : G.element_orders())
        if (pk % o == 0)
          ++count;
      if (count == previous)
        break;
      unsigned growth = 0;
      for (auto ratio = count / previous; ratio > 1; ratio /= p)
        ++growth;
      d.push_back(growth);
      previous = count;
    }

    std::vector<std::size_t> factors;
    for (std::size_t k = 0; k < d.size(); ++k) {
      unsigned exact = d[k] - (k + 1 < d.size() ? d[k + 1] : 0);
      std::size_t q = 1;
      for (std::size_t i = 0; i <= k; ++i)
        q *= p;
      for (unsigned i = 0; i < exact; ++i)
        factors.push_back(q);
    }
    std::sort(factors.rbegin(), factors.rend());
    powers.push_back(std::move(factors));
  }

  std::size_t rank = 0;
  for (auto const &f : powers)
    rank = std::max(rank, f.size());

  std::vector<std::size_t> invariants(rank, 1);
  for (auto const &f : powers)
    for (std::size_t i = 0; i < f.size(); ++i)
      invariants[i] *= f[i];
  std::sort(invariants.begin(), invariants.end());
  return invariants;
}

std::string label(GroupPtr const &source, GroupPtr const &target)
{ return source->name() + " -> " + target->name(); }

struct Outcome
{
  bool examined = false;
  std::size_t homs = 0;
  std::vector<Violation> violations;
  std::vector<Skip> skipped;
  std::map<std::string, std::uint64_t> notes;
  double seconds = 0;
};

// Thread-safe map from key to a lazily computed value. Two threads may
// compute the same value; the first one stored wins.
template<typename K, typename V>
class Memo
{
public:
  template<typename MAKE>
  std::shared_ptr<V const> get(K const &key, MAKE &&make)
  {
    {
      std::lock_guard lock(_mutex);
      if (auto it = _values.find(key); it != _values.end())
        return it->second;
    }
    auto value = std::make_shared<V const>(make());
    std::lock_guard lock(_mutex);
    return _values.emplace(key, std::move(value)).first->second;
  }

private:
  std::mutex _mutex;
  std::map<K, std::shared_ptr<V const>> _values;
};

using GroupPair = std::pair<FiniteGroup const *, FiniteGroup const *>;

using PairCheck = std::function<void(GroupPtr const &, GroupPtr const &, Outcome &)>;

bool over_budget(GroupPtr const &source, GroupPtr const &target, Outcome &out)
{
  double cost = pair_cost(*source, *target);
  if (cost <= PAIR_BUDGET)
    return false;
  out.skipped.push_back({label(source, target),
                         "candidate estimate " + std::to_string(static_cast<long long>(cost)) +
                         " exceeds budget"});
  return true;
}

// theorem-suite laws evaluated on one classified hom
void galois_laws(ClassificationReport const &r, bool target_nilpotent, Outcome &out,
                 std::string const &subject)
{
  auto const &flags = r.flags;
  bool trivial_gal = r.galois.is_trivial();
  bool abelian_source = r.hom.source()->is_abelian();
  auto hom = hom_label(r.hom);

  if (flags[Flag::envelope] && trivial_gal && (abelian_source || target_nilpotent) &&
      !flags[Flag::localization])
    out.violations.push_back({subject, hom, "envelope with trivial Galois group is not a localization"});
  if (flags[Flag::envelope] && trivial_gal && abelian_source && !r.hom.target()->is_abelian())
    out.violations.push_back({subject, hom, "abelian source with trivial Galois envelope has non-abelian target"});
  if (flags[Flag::localization] && !(flags[Flag::envelope] && trivial_gal))
    out.violations.push_back({subject, hom, "localization is not an envelope with trivial Galois group"});

  if (flags[Flag::envelope] && trivial_gal && !abelian_source && !target_nilpotent)
    ++out.notes["envelopes with trivial Galois group outside the hypotheses"];
  if (flags[Flag::envelope])
    ++out.notes["envelopes"];
  if (flags[Flag::localization])
    ++out.notes["localizations"];
}

void cogalois_laws(ClassificationReport const &r, Outcome &out, std::string const &subject)
{
  auto const &flags = r.flags;
  bool trivial = r.co_galois.is_trivial();
  auto hom = hom_label(r.hom);

  if (flags[Flag::cover] && trivial && !flags[Flag::cellular_cover])
    out.violations.push_back({subject, hom, "cover with trivial co-Galois group is not a cellular cover"});
  if (flags[Flag::cellular_cover] && !(flags[Flag::cover] && trivial))
    out.violations.push_back({subject, hom, "cellular cover is not a cover with trivial co-Galois group"});

  if (flags[Flag::cover])
    ++out.notes["covers"];
  if (flags[Flag::cellular_cover])
    ++out.notes["cellular covers"];
}

PairCheck classify_pairs(HomEngine &engine,
                         std::function<void(ClassificationReport const &, Outcome &,
                                            std::string const &)> laws)
{
  return [&engine, laws](GroupPtr const &H, GroupPtr const &G, Outcome &out) {
    if (over_budget(H, G, out))
      return;
    auto subject = label(H, G);
    for (auto const &phi : engine.homs(H, G)->homs()) {
      laws(classify_hom(phi, engine), out, subject);
      ++out.homs;
    }
    out.examined = true;
  };
}

GroupClass singleton(GroupPtr const &group)
{ return GroupClass::of({group}); }

// Kernel of H → ∏ Hom(H,F): the intersection of the kernels of all homs
// into class members. Independent route to the orthogonal epireflection.
Subgroup kernel_intersection(GroupPtr const &group, GroupClass const &cls, HomEngine &engine)
{
  std::vector<bool> in(group->order(), true);
  for (auto const &F : cls.members)
    for (auto const &psi : engine.homs(group, F)->homs())
      for (std::size_t x = 0; x < group->order(); ++x)
        if (psi(static_cast<Element>(x)) != F->identity())
          in[x] = false;

  std::vector<Element> members;
  for (std::size_t x = 0; x < group->order(); ++x)
    if (in[x])
      members.push_back(static_cast<Element>(x));
  return Subgroup(group, std::move(members));
}

PairCheck socle_cover_pairs(HomEngine &engine, std::vector<GroupPtr> const &corpus)
{
  auto socles = std::make_shared<Memo<GroupPair, Subgroup>>();
  return [&engine, &corpus, socles](GroupPtr const &H, GroupPtr const &G, Outcome &out) {
    if (over_budget(H, G, out))
      return;
    auto subject = label(H, G);
    auto homs = engine.homs(H, G);

    for (auto const &X : corpus) {
      auto cls = singleton(X);
      auto const &socle = *socles->get({G.get(), X.get()},
                                      [&] { return class_socle(G, cls, engine); });
      bool member = cls.contains(H);

      for (auto const &phi : homs->homs()) {
        if (!phi.is_injective())
          continue;
        ++out.homs;

        auto r = classify_against_class(phi, cls, ClassSide::cover, engine);
        auto const &v = *r.relative;
        bool a = v.pre;
        bool b = v.full && v.unique_liftings;
        bool c = phi.image() == socle;
        auto hom = hom_label(phi) + " F=" + cls.name;

        if (a != c)
          out.violations.push_back({subject, hom, "precover (a) differs from socle (c) as stated"});
        if (a != (c && member))
          out.violations.push_back({subject, hom, "precover (a) differs from socle (c) with H in F"});
        if (c && !member)
          ++out.notes["(c) holds with H outside F"];
        if (a != b)
          ++out.notes["(b) differs from (a)"];
        if (a)
          ++out.notes["monomorphic precovers"];
      }
    }
    out.examined = true;
  };
}

PairCheck radical_envelope_pairs(HomEngine &engine, std::vector<GroupPtr> const &corpus)
{
  auto reflections = std::make_shared<Memo<GroupPair, Epireflection>>();
  auto radicals = std::make_shared<Memo<GroupPair, Radical>>();
  return [&engine, &corpus, reflections, radicals](GroupPtr const &H, GroupPtr const &G,
                                                   Outcome &out) {
    if (over_budget(H, G, out))
      return;
    auto subject = label(H, G);
    auto homs = engine.homs(H, G);

    for (auto const &X : corpus) {
      auto cls = singleton(X);
      bool member = cls.contains(G);
      auto const &reflection = *reflections->get(
        {H.get(), X.get()}, [&] { return orthogonal_epireflection(H, cls, engine); });
      auto const &radical = *radicals->get({H.get(), X.get()},
                                           [&] { return class_radical(H, cls, engine); });

      // checked once per (H, F), on the pair with the first corpus target
      if (G == corpus.front()) {
        if (reflection.kernel != kernel_intersection(H, cls, engine))
          out.violations.push_back({H->name(), "F=" + cls.name,
                                    "orthogonal epireflection differs from the kernel intersection"});
        if (!is_orthogonal(reflection.quotient.projection, cls, engine))
          out.violations.push_back({H->name(), "F=" + cls.name,
                                    "epireflection is not orthogonal to the class"});
      }

      for (auto const &phi : homs->homs()) {
        if (!phi.is_surjective())
          continue;
        ++out.homs;

        auto r = classify_against_class(phi, cls, ClassSide::envelope, engine);
        auto const &v = *r.relative;
        bool a = v.pre;
        bool b = v.full && v.unique_liftings;
        auto kernel = phi.kernel();
        bool c = member && kernel == reflection.kernel &&
                 isomorphic_under(reflection.quotient.projection, phi);
        auto hom = hom_label(phi) + " F=" + cls.name;

        if (a != b)
          out.violations.push_back({subject, hom, "preenvelope (a) differs from unique-lifting envelope (b)"});
        if (a != c)
          out.violations.push_back({subject, hom, "preenvelope (a) differs from epireflection (c)"});
        if ((member && kernel == radical.radical) != a)
          ++out.notes["socle-chain radical differs from (a)"];
        if (a)
          ++out.notes["surjective preenvelopes"];
      }
    }
    out.examined = true;
  };
}

PairCheck charac_env_pairs(HomEngine &engine)
{
  return [&engine](GroupPtr const &H, GroupPtr const &G, Outcome &out) {
    if (over_budget(H, G, out))
      return;
    auto subject = label(H, G);
    auto target_class = singleton(G);
    auto source_class = singleton(H);
    for (auto const &phi : engine.homs(H, G)->homs()) {
      ++out.homs;
      auto env = classify_against_class(phi, target_class, ClassSide::envelope, engine);
      auto cov = classify_against_class(phi, source_class, ClassSide::cover, engine);
      auto hom = hom_label(phi);
      if (env.flags[Flag::envelope] != env.relative->full)
        out.violations.push_back({subject, hom, "envelope flag differs from the {G}-envelope check"});
      if (cov.flags[Flag::cover] != cov.relative->full)
        out.violations.push_back({subject, hom, "cover flag differs from the {H}-cover check"});
    }
    out.examined = true;
  };
}

PairCheck reduction_pairs(HomEngine &engine, std::vector<GroupPtr> const &corpus)
{
  return [&engine, &corpus](GroupPtr const &H, GroupPtr const &G, Outcome &out) {
    if (over_budget(H, G, out))
      return;
    auto subject = label(H, G);

    std::vector<GroupClass> classes{singleton(G)};
    for (auto const &X : corpus)
      if (X != G)
        classes.push_back(GroupClass::of({G, X}));

    for (auto const &phi : engine.homs(H, G)->homs()) {
      ++out.homs;
      auto factorization = image_factorize(phi);
      auto base = classify_against_class(phi, classes[0], ClassSide::envelope, engine);
      if (!base.relative->full)
        continue;

      for (auto const &cls : classes) {
        auto r = cls.members.size() == 1
               ? base
               : classify_against_class(phi, cls, ClassSide::envelope, engine);
        if (!r.relative->full)
          continue;
        ++out.notes["class envelopes"];

        auto m = classify_against_class(factorization.mono, cls, ClassSide::envelope, engine);
        auto hom = hom_label(phi) + " F=" + cls.name;
        if (!m.relative->full) {
          out.violations.push_back({subject, hom, "image inclusion is not an envelope"});
          continue;
        }
        auto gal = subgroup_as_group(r.galois).group;
        auto mono_gal = subgroup_as_group(m.galois).group;
        if (!are_isomorphic(gal, mono_gal))
          out.violations.push_back({subject, hom, "image inclusion has a different Galois group"});
      }
    }
    out.examined = true;
  };
}

void lemma_check(GroupPtr const &G, Outcome &out)
{
  for (auto const &report : check_commutator_lemmas(G)) {
    auto name = lemma_name(report.lemma) + (report.j ? " j=" + std::to_string(report.j) : "");
    out.homs += report.tuples;
    if (report.failures == 0)
      continue;
    if (is_claimed(report.lemma))
      out.violations.push_back({G->name(), "", name + ": " + std::to_string(report.failures) +
                                               " counterexamples"});
    else
      out.notes[name + " counterexamples (unclaimed variant)"] += report.failures;
  }
  out.examined = true;
}

} // anonymous namespace

std::vector<GroupPtr> generate_corpus(std::size_t max_order)
{
  if (max_order > MAX_ENUMERATION_ORDER)
    throw Error("size-cap", "corpus order bound is at most " +
                            std::to_string(MAX_ENUMERATION_ORDER));

  // in dedup priority order
  std::vector<FamilySpec> specs;
  for (unsigned n = 1; n <= max_order; ++n)
    specs.push_back(FamilySpec::cyclic(n));

  for (unsigned a = 2; a * a <= max_order; ++a)
    for (unsigned b = a; a * b <= max_order; ++b)
      specs.push_back(FamilySpec::product({FamilySpec::cyclic(a), FamilySpec::cyclic(b)}));
  for (unsigned a = 2; a * a * a <= max_order; ++a)
    for (unsigned b = a; a * b * b <= max_order; ++b)
      for (unsigned c = b; a * b * c <= max_order; ++c)
        specs.push_back(FamilySpec::product(
          {FamilySpec::cyclic(a), FamilySpec::cyclic(b), FamilySpec::cyclic(c)}));

  std::size_t factorial = 1;
  for (unsigned n = 1; n <= 7; ++n) {
    factorial *= n;
    if (factorial <= max_order)
      specs.push_back(FamilySpec::symmetric(n));
  }
  factorial = 1;
  for (unsigned n = 1; n <= 7; ++n) {
    factorial *= n;
    if (n >= 2 && factorial / 2 <= max_order)
      specs.push_back(FamilySpec::alternating(n));
  }
  if (max_order >= 8)
    specs.push_back(FamilySpec::quaternion8());
  for (unsigned n = 2; n <= max_order; n += 2)
    specs.push_back(FamilySpec::dihedral(n));
  for (unsigned p : {2u, 3u, 5u})
    if (p * p * p <= max_order)
      specs.push_back(FamilySpec::heisenberg(p));

  std::vector<GroupPtr> corpus;
  for (auto const &spec : specs) {
    auto group = standard_group(spec);
    bool duplicate = false;
    for (auto const &kept : corpus)
      if (kept->order() == group->order() && are_isomorphic(kept, group)) {
        duplicate = true;
        break;
      }
    if (!duplicate)
      corpus.push_back(group);
  }

  std::stable_sort(corpus.begin(), corpus.end(), [](GroupPtr const &a, GroupPtr const &b) {
    if (a->order() != b->order())
      return a->order() < b->order();
    return a->name() < b->name();
  });
  return corpus;
}

std::string structure_name(GroupPtr const &group)
{
  auto const &G = *group;
  if (G.order() == 1)
    return "trivial";

  if (G.is_abelian()) {
    std::string name;
    for (auto q : abelian_invariants(G))
      name += (name.empty() ? "" : "x") + ("Z/" + std::to_string(q));
    return name;
  }

  std::vector<FamilySpec> candidates;
  auto n = G.order();
  std::size_t factorial = 1;
  for (unsigned k = 1; k <= 7; ++k) {
    factorial *= k;
    if (factorial == n)
      candidates.push_back(FamilySpec::symmetric(k));
    if (k >= 4 && factorial / 2 == n)
      candidates.push_back(FamilySpec::alternating(k));
  }
  if (n % 2 == 0)
    candidates.push_back(FamilySpec::dihedral(static_cast<unsigned>(n)));
  if (n == 8)
    candidates.push_back(FamilySpec::quaternion8());
  for (unsigned p : {3u, 5u})
    if (p * p * p == n)
      candidates.push_back(FamilySpec::heisenberg(p));

  for (auto const &spec : candidates)
    if (are_isomorphic(standard_group(spec), group))
      return spec.display_name();

  return "nonabelian group of order " + std::to_string(n);
}

double pair_cost(FiniteGroup const &source, FiniteGroup const &target)
{
  return std::pow(static_cast<double>(target.order()),
                  static_cast<double>(generating_set(source).size()));
}

std::vector<std::string> suite_ids()
{
  return {"cogalois", "galois", "charac-env", "reduction",
          "socle-cover", "radical-envelope", "lemmas"};
}

SuiteReport run_theorem_suite(std::vector<GroupPtr> const &corpus,
                              std::string const &suite,
                              HomEngine &engine,
                              SuiteOptions const &options)
{
  SuiteReport report;
  report.suite = suite;

  std::vector<Outcome> outcomes;
  std::vector<std::string> subjects;

  if (suite == "lemmas") {
    outcomes.resize(corpus.size());
    for (auto const &G : corpus)
      subjects.push_back(G->name());
    internal::parallel_for(corpus.size(), options.jobs, [&](std::size_t i) {
      auto start = std::chrono::steady_clock::now();
      lemma_check(corpus[i], outcomes[i]);
      outcomes[i].seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start).count();
    });
  } else {
    std::vector<bool> nilpotent;
    PairCheck check;
    if (suite == "galois") {
      for (auto const &G : corpus)
        nilpotent.push_back(is_nilpotent(G));
      check = [&engine, &corpus, &nilpotent](GroupPtr const &H, GroupPtr const &G, Outcome &out) {
        auto index = std::find(corpus.begin(), corpus.end(), G) - corpus.begin();
        bool target_nilpotent = nilpotent[static_cast<std::size_t>(index)];
        classify_pairs(engine, [target_nilpotent](ClassificationReport const &r, Outcome &o,
                                                  std::string const &subject) {
          galois_laws(r, target_nilpotent, o, subject);
        })(H, G, out);
      };
    } else if (suite == "cogalois") {
      check = classify_pairs(engine, cogalois_laws);
    } else if (suite == "charac-env") {
      check = charac_env_pairs(engine);
    } else if (suite == "reduction") {
      check = reduction_pairs(engine, corpus);
    } else if (suite == "socle-cover") {
      check = socle_cover_pairs(engine, corpus);
    } else if (suite == "radical-envelope") {
      check = radical_envelope_pairs(engine, corpus);
    } else {
      throw Error("unknown-suite", "unknown suite '" + suite + "'");
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        pairs.emplace_back(i, j);
        subjects.push_back(label(corpus[i], corpus[j]));
      }
    outcomes.resize(pairs.size());

    internal::parallel_for(pairs.size(), options.jobs, [&](std::size_t k) {
      auto start = std::chrono::steady_clock::now();
      auto &out = outcomes[k];
      try {
        check(corpus[pairs[k].first], corpus[pairs[k].second], out);
      } catch (Error const &e) {
        out = Outcome{};
        out.skipped.push_back({subjects[k], e.code() + ": " + e.what()});
      }
      out.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start).count();
    });
  }

  report.total_pairs = outcomes.size();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    auto &out = outcomes[k];
    if (out.examined)
      ++report.pairs_examined;
    report.homs_classified += out.homs;
    for (auto &v : out.violations)
      report.violations.push_back(std::move(v));
    for (auto &s : out.skipped)
      report.skipped.push_back(std::move(s));
    for (auto const &[key, count] : out.notes)
      report.notes[key] += count;
    if (options.timing)
      report.timings[subjects[k]] = out.seconds;
  }
  std::sort(report.violations.begin(), report.violations.end());
  std::sort(report.skipped.begin(), report.skipped.end());
  return report;
}

SearchKind parse_search_kind(std::string const &text)
{
  if (text == "envelope")
    return SearchKind::envelope;
  if (text == "cover")
    return SearchKind::cover;
  if (text == "localization")
    return SearchKind::localization;
  if (text == "cellular")
    return SearchKind::cellular;
  throw Error("unknown-kind", "unknown search kind '" + text + "'");
}

std::string search_kind_name(SearchKind kind)
{
  switch (kind) {
  case SearchKind::envelope:
    return "envelope";
  case SearchKind::cover:
    return "cover";
  case SearchKind::localization:
    return "localization";
  case SearchKind::cellular:
    return "cellular";
  }
  return {};
}

std::vector<GroupHom> search_approximations(GroupPtr const &source,
                                            GroupPtr const &target,
                                            SearchKind kind,
                                            bool injective_only,
                                            HomEngine &engine)
{
  Flag flag = Flag::envelope;
  switch (kind) {
  case SearchKind::envelope:
    flag = Flag::envelope;
    break;
  case SearchKind::cover:
    flag = Flag::cover;
    break;
  case SearchKind::localization:
    flag = Flag::localization;
    break;
  case SearchKind::cellular:
    flag = Flag::cellular_cover;
    break;
  }

  std::vector<GroupHom> found;
  for (auto const &phi : engine.homs(source, target)->homs()) {
    if (injective_only && !phi.is_injective())
      continue;
    if (classify_hom(phi, engine).flags[flag])
      found.push_back(phi);
  }
  return found;
}

std::string hom_label(GroupHom const &hom)
{
  std::string s = "[";
  auto const &gens = hom.source()->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    s += (i ? ", " : "") + std::to_string(hom(gens[i]));
  return s + "]";
}

} // namespace grouper
