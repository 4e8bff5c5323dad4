#include "grouper/homs.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "extension_plan.hpp"
#include "grouper/error.hpp"

namespace grouper
{

namespace
{

std::vector<std::vector<Element>> image_candidates(FiniteGroup const &source,
                                                   FiniteGroup const &target,
                                                   std::vector<Element> const &keys)
{
  std::vector<std::vector<Element>> candidates;
  for (auto g : keys) {
    std::vector<Element> cs;
    auto n = source.element_order(g);
    for (std::size_t y = 0; y < target.order(); ++y)
      if (n % target.element_order(static_cast<Element>(y)) == 0)
        cs.push_back(static_cast<Element>(y));
    candidates.push_back(std::move(cs));
  }
  return candidates;
}

std::vector<std::vector<Element>>
search_all(internal::ExtensionPlan const &plan,
           FiniteGroup const &target,
           std::vector<std::vector<Element>> const &candidates)
{
  std::vector<std::vector<Element>> found;
  internal::ExtensionSearch search(plan, target, false);
  search.run(candidates, [&](std::vector<Element> const &images) {
    found.push_back(images);
    return true;
  });
  return found;
}

std::string hex(std::uint64_t value)
{
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << value;
  return out.str();
}

int compare_key(GroupHom const &hom,
                std::vector<Element> const &keys,
                std::span<Element const> key_images)
{
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto a = hom(keys[i]);
    if (a != key_images[i])
      return a < key_images[i] ? -1 : 1;
  }
  return 0;
}

} // anonymous namespace

HomSet::HomSet(GroupPtr source,
               GroupPtr target,
               std::vector<Element> key_generators,
               std::vector<GroupHom> homs)
: _source(std::move(source)),
  _target(std::move(target)),
  _key_generators(std::move(key_generators)),
  _homs(std::move(homs))
{}

std::vector<Element> HomSet::key_of(GroupHom const &hom) const
{
  std::vector<Element> key;
  key.reserve(_key_generators.size());
  for (auto g : _key_generators)
    key.push_back(hom(g));
  return key;
}

std::optional<std::size_t> HomSet::find(std::span<Element const> key_images) const
{
  if (key_images.size() != _key_generators.size())
    return std::nullopt;

  std::size_t lo = 0, hi = _homs.size();
  while (lo < hi) {
    auto mid = lo + (hi - lo) / 2;
    int c = compare_key(_homs[mid], _key_generators, key_images);
    if (c == 0)
      return mid;
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

HomSet enumerate_homs(GroupPtr const &source,
                      GroupPtr const &target,
                      EnumerationOptions const &options)
{
  if (source->order() > MAX_ENUMERATION_ORDER || target->order() > MAX_ENUMERATION_ORDER)
    throw Error("size-cap", "hom enumeration is limited to groups of order at most " +
                            std::to_string(MAX_ENUMERATION_ORDER) + " (got " +
                            std::to_string(source->order()) + " and " +
                            std::to_string(target->order()) + ")");

  auto keys = generating_set(*source);
  internal::ExtensionPlan plan(*source, keys);
  auto candidates = image_candidates(*source, *target, keys);

  std::vector<std::vector<Element>> found;
  unsigned jobs = std::max(1u, options.jobs);

  if (jobs == 1 || candidates.empty() || candidates[0].size() < 2) {
    found = search_all(plan, *target, candidates);
  } else {
    // one task per image of the first generator; concatenating the task
    // results in candidate order keeps the lexicographic order
    auto const &first = candidates[0];
    std::vector<std::vector<std::vector<Element>>> parts(first.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
      for (;;) {
        auto i = next.fetch_add(1);
        if (i >= first.size())
          return;
        auto restricted = candidates;
        restricted[0] = {first[i]};
        parts[i] = search_all(plan, *target, restricted);
      }
    };

    std::vector<std::thread> pool;
    auto n = std::min<std::size_t>(jobs, first.size());
    for (std::size_t t = 0; t < n; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();

    for (auto &part : parts)
      for (auto &images : part)
        found.push_back(std::move(images));
  }

  std::vector<GroupHom> homs;
  homs.reserve(found.size());
  for (auto &images : found) {
    if (!internal::is_multiplicative(*source, *target, images))
      throw std::logic_error("hom enumeration admitted a non-multiplicative map");
    homs.push_back(GroupHom::unchecked(source, target, std::move(images)));
  }

  return HomSet(source, target, std::move(keys), std::move(homs));
}

std::optional<Element> AutGroup::index_of(GroupHom const &automorphism) const
{
  std::size_t lo = 0, hi = automorphisms.size();
  std::vector<Element> key;
  for (auto g : key_generators)
    key.push_back(automorphism(g));

  while (lo < hi) {
    auto mid = lo + (hi - lo) / 2;
    int c = compare_key(automorphisms[mid], key_generators, key);
    if (c == 0)
      return static_cast<Element>(mid);
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

AutGroup automorphism_group(HomSet const &endomorphisms)
{
  auto const &base = endomorphisms.source();
  if (base != endomorphisms.target())
    throw Error("invalid-hom", "automorphism group needs an endomorphism set");

  std::vector<GroupHom> auts;
  for (auto const &f : endomorphisms.homs())
    if (f.is_injective())
      auts.push_back(f);

  auto n = auts.size();
  if (n > MAX_GROUP_ORDER)
    throw Error("order-cap-exceeded", "Aut(" + base->name() + ") has order " +
                                      std::to_string(n) + " above the cap of " +
                                      std::to_string(MAX_GROUP_ORDER));

  AutGroup result{base, nullptr, auts, trivial_subgroup(base),
                  endomorphisms.key_generators()};
  auto const &keys = result.key_generators;

  auto index_of_images = [&](std::vector<Element> const &key) {
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
      auto mid = lo + (hi - lo) / 2;
      int c = compare_key(auts[mid], keys, key);
      if (c == 0)
        return static_cast<Element>(mid);
      if (c < 0)
        lo = mid + 1;
      else
        hi = mid;
    }
    throw std::logic_error("automorphisms are not closed under composition");
  };

  std::vector<Element> table(n * n);
  std::vector<Element> key(keys.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < keys.size(); ++k)
        key[k] = auts[i](auts[j](keys[k]));
      table[i * n + j] = index_of_images(key);
    }

  std::vector<Element> everything(n);
  for (std::size_t i = 0; i < n; ++i)
    everything[i] = static_cast<Element>(i);

  std::string name = "Aut(" + base->name() + ")";
  FiniteGroup spanned(name, n, table, everything);
  result.group = std::make_shared<FiniteGroup>(name, n, std::move(table),
                                               generating_set(spanned));

  std::vector<Element> inner;
  for (std::size_t g = 0; g < base->order(); ++g) {
    auto x = static_cast<Element>(g);
    for (std::size_t k = 0; k < keys.size(); ++k)
      key[k] = base->mul(base->mul(x, keys[k]), base->inv(x));
    inner.push_back(index_of_images(key));
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  result.inner = Subgroup(result.group, std::move(inner));
  return result;
}

AutGroup automorphism_group(GroupPtr const &group, EnumerationOptions const &options)
{ return automorphism_group(enumerate_homs(group, group, options)); }

std::string cache_file_name(FiniteGroup const &source, FiniteGroup const &target)
{ return hex(source.fingerprint()) + "_" + hex(target.fingerprint()) + ".json"; }

HomEngine::HomEngine(EngineOptions options)
: _options(std::move(options))
{}

std::size_t HomEngine::cache_hits() const
{
  std::lock_guard lock(_mutex);
  return _cache_hits;
}

std::shared_ptr<HomSet const> HomEngine::homs(GroupPtr const &source,
                                              GroupPtr const &target)
{
  std::shared_ptr<Entry<HomSet>> entry;
  {
    std::lock_guard lock(_mutex);
    auto &slot = _homs[{source.get(), target.get()}];
    if (!slot) {
      slot = std::make_shared<Entry<HomSet>>();
      _pinned.push_back(source);
      _pinned.push_back(target);
    }
    entry = slot;
  }
  std::call_once(entry->once, [&] { entry->value = load_or_enumerate(source, target); });
  return entry->value;
}

std::shared_ptr<AutGroup const> HomEngine::automorphisms(GroupPtr const &group)
{
  std::shared_ptr<Entry<AutGroup>> entry;
  {
    std::lock_guard lock(_mutex);
    auto &slot = _auts[group.get()];
    if (!slot) {
      slot = std::make_shared<Entry<AutGroup>>();
      _pinned.push_back(group);
    }
    entry = slot;
  }
  std::call_once(entry->once, [&] {
    entry->value = std::make_shared<AutGroup const>(automorphism_group(*endomorphisms(group)));
  });
  return entry->value;
}

std::shared_ptr<HomSet const> HomEngine::load_or_enumerate(GroupPtr const &source,
                                                           GroupPtr const &target)
{
  namespace fs = std::filesystem;
  using nlohmann::json;

  std::optional<fs::path> file;
  if (_options.cache_dir)
    file = *_options.cache_dir / cache_file_name(*source, *target);

  // The cache is advisory: anything that fails to parse or to verify is
  // ignored and recomputed.
  if (file && fs::exists(*file)) {
    try {
      std::ifstream in(*file);
      auto doc = json::parse(in);
      auto keys = generating_set(*source);
      if (doc.at("source").get<std::string>() == hex(source->fingerprint()) &&
          doc.at("target").get<std::string>() == hex(target->fingerprint()) &&
          doc.at("key_generators").get<std::vector<Element>>() == keys) {
        internal::ExtensionPlan plan(*source, keys);
        internal::ExtensionSearch search(plan, *target, false);

        std::vector<GroupHom> homs;
        bool ok = true;
        std::vector<Element> previous;
        for (auto const &entry : doc.at("homs")) {
          auto images = entry.get<std::vector<Element>>();
          bool in_range = images.size() == keys.size() &&
                          std::all_of(images.begin(), images.end(),
                                      [&](Element y) { return y < target->order(); });
          if (!in_range || (!homs.empty() && !(previous < images)) ||
              !search.extend(images)) {
            ok = false;
            break;
          }
          previous = images;
          homs.push_back(GroupHom::unchecked(source, target, search.images()));
        }

        if (ok && !homs.empty()) {
          std::mt19937_64 rng(source->fingerprint() ^ target->fingerprint());
          std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
          for (int i = 0; i < 3 && ok; ++i)
            ok = internal::is_multiplicative(*source, *target, homs[pick(rng)].images());
        }

        if (ok && !homs.empty()) {
          std::lock_guard lock(_mutex);
          ++_cache_hits;
          return std::make_shared<HomSet const>(source, target, std::move(keys),
                                                std::move(homs));
        }
      }
    } catch (std::exception const &) {
      // unreadable cache entries are recomputed below
    }
  }

  auto set = std::make_shared<HomSet const>(
    enumerate_homs(source, target, EnumerationOptions{_options.jobs}));

  if (file) {
    json doc;
    doc["source"] = hex(source->fingerprint());
    doc["target"] = hex(target->fingerprint());
    doc["key_generators"] = set->key_generators();
    json homs = json::array();
    for (auto const &hom : set->homs())
      homs.push_back(set->key_of(hom));
    doc["homs"] = std::move(homs);

    std::error_code ec;
    fs::create_directories(*_options.cache_dir, ec);
    auto tmp = *file;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>()(std::this_thread::get_id()));
    {
      std::ofstream out(tmp);
      out << doc.dump() << '\n';
    }
    fs::rename(tmp, *file, ec);
    if (ec)
      fs::remove(tmp, ec);
  }

  return set;
}

} // namespace grouper
