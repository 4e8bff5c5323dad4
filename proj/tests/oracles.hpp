#ifndef GUARD_GROUPER_TEST_ORACLES_H
#define GUARD_GROUPER_TEST_ORACLES_H

// Deliberately naive reference implementations. Nothing here shares code
// with the library beyond reading a group's multiplication table.

#include <algorithm>
#include <set>
#include <vector>

#include "grouper/group.hpp"

namespace oracle
{

using grouper::Element;
using grouper::FiniteGroup;
using Map = std::vector<Element>;

inline bool multiplicative(FiniteGroup const &h, FiniteGroup const &g, Map const &f)
{
  for (std::size_t x = 0; x < h.order(); ++x)
    for (std::size_t y = 0; y < h.order(); ++y)
      if (f[h.mul(Element(x), Element(y))] != g.mul(f[x], f[y]))
        return false;
  return true;
}

// every set map H -> G, kept when multiplicative; lexicographic by full image vector
inline std::vector<Map> naive_homs(FiniteGroup const &h, FiniteGroup const &g)
{
  std::vector<Map> out;
  Map f(h.order(), 0);
  for (;;) {
    if (multiplicative(h, g, f))
      out.push_back(f);
    std::size_t i = f.size();
    for (; i > 0; --i) {
      if (++f[i - 1] < g.order())
        break;
      f[i - 1] = 0;
    }
    if (i == 0)
      return out;
  }
}

inline Map compose(Map const &outer, Map const &inner)
{
  Map out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x)
    out[x] = outer[inner[x]];
  return out;
}

inline bool bijective(Map const &f)
{
  std::set<Element> seen(f.begin(), f.end());
  return seen.size() == f.size();
}

inline std::vector<Map> naive_automorphisms(FiniteGroup const &g)
{
  std::vector<Map> out;
  for (auto &f : naive_homs(g, g))
    if (bijective(f))
      out.push_back(f);
  return out;
}

inline std::set<Element> closure(FiniteGroup const &g, std::set<Element> seed, bool normal)
{
  seed.insert(g.identity());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Element> cur(seed.begin(), seed.end());
    for (auto a : cur) {
      for (auto b : cur)
        grew |= seed.insert(g.mul(a, b)).second;
      if (normal)
        for (std::size_t x = 0; x < g.order(); ++x)
          grew |= seed.insert(g.mul(g.mul(Element(x), a), g.inv(Element(x)))).second;
    }
  }
  return seed;
}

inline std::set<Element> members(grouper::Subgroup const &s)
{ return {s.members().begin(), s.members().end()}; }

inline Element comm(FiniteGroup const &g, Element x, Element y)
{ return g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))); }

inline std::set<Element> centralizer(FiniteGroup const &g, std::set<Element> const &s)
{
  std::set<Element> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (std::all_of(s.begin(), s.end(),
                    [&](Element y) { return g.mul(Element(x), y) == g.mul(y, Element(x)); }))
      out.insert(Element(x));
  return out;
}

inline std::set<Element> everything(FiniteGroup const &g)
{
  std::set<Element> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    out.insert(Element(x));
  return out;
}

// Γ^1 = G, Γ^{r+1} generated by [a, g]; stops at the first repeat
inline std::vector<std::set<Element>> lower_series(FiniteGroup const &g)
{
  std::vector<std::set<Element>> terms{everything(g)};
  for (;;) {
    std::set<Element> seed;
    for (auto a : terms.back())
      for (std::size_t x = 0; x < g.order(); ++x)
        seed.insert(comm(g, a, Element(x)));
    auto next = closure(g, seed, false);
    if (next == terms.back())
      return terms;
    terms.push_back(next);
  }
}

// x ∈ Z_j iff every [x, g_1, ..., g_j] is trivial
inline bool j_central_by_commutators(FiniteGroup const &g, Element x, unsigned j)
{
  if (j == 0)
    return x == g.identity();
  std::vector<std::size_t> tuple(j, 0);
  for (;;) {
    Element c = x;
    for (auto t : tuple)
      c = comm(g, c, Element(t));
    if (c != g.identity())
      return false;
    std::size_t i = j;
    for (; i > 0; --i) {
      if (++tuple[i - 1] < g.order())
        break;
      tuple[i - 1] = 0;
    }
    if (i == 0)
      return true;
  }
}

struct Flags
{
  bool localization, cellular, envelope, cover, preenvelope, precover;
  std::size_t galois, co_galois;
};

// every flag straight from its definition, on naive hom sets
inline Flags naive_classify(std::vector<Map> const &end_h, std::vector<Map> const &end_g,
                            std::vector<Map> const &hom_hg, Map const &phi)
{
  std::set<Map> all(hom_hg.begin(), hom_hg.end());

  std::set<Map> pulled, pushed;
  for (auto const &f : end_g)
    pulled.insert(compose(f, phi));
  for (auto const &f : end_h)
    pushed.insert(compose(phi, f));

  Flags out{};
  out.preenvelope = pulled == all;
  out.precover = pushed == all;
  out.localization = out.preenvelope && end_g.size() == all.size();
  out.cellular = out.precover && end_h.size() == all.size();

  out.envelope = out.preenvelope;
  out.galois = 0;
  for (auto const &f : end_g)
    if (compose(f, phi) == phi) {
      out.envelope = out.envelope && bijective(f);
      out.galois += bijective(f);
    }
  out.cover = out.precover;
  out.co_galois = 0;
  for (auto const &f : end_h)
    if (compose(phi, f) == phi) {
      out.cover = out.cover && bijective(f);
      out.co_galois += bijective(f);
    }
  return out;
}

inline Flags naive_classify(FiniteGroup const &h, FiniteGroup const &g, Map const &phi)
{ return naive_classify(naive_homs(h, h), naive_homs(g, g), naive_homs(h, g), phi); }

} // namespace oracle

#endif // GUARD_GROUPER_TEST_ORACLES_H
