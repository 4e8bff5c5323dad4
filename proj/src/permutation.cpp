#include "grouper/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grouper/error.hpp"

namespace grouper
{

namespace
{

// degree after dropping trailing fixed points
std::size_t effective_degree(std::vector<Permutation::Point> const &images)
{
  std::size_t d = images.size();
  while (d > 0 && images[d - 1] == d - 1)
    --d;
  return d;
}

} // anonymous namespace

Permutation::Permutation(unsigned degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point(0));
}

Permutation::Permutation(std::vector<Point> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (auto x : _images) {
    if (x >= _images.size() || seen[x])
      throw Error("malformed-permutation", "image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(
  unsigned degree, std::vector<std::vector<unsigned>> const &cycles)
{
  for (auto const &cycle : cycles)
    for (auto x : cycle)
      degree = std::max(degree, x);

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point(0));

  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (auto x : cycle) {
      if (x == 0)
        throw Error("malformed-cycle", "point labels must be positive");
      if (used[x - 1])
        throw Error("malformed-cycle",
                    "point " + std::to_string(x) + " repeated");
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = static_cast<Point>(cycle[(i + 1) % cycle.size()] - 1);
  }

  return Permutation(std::move(images));
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  auto d = std::max(degree(), rhs.degree());
  std::vector<Point> images(d);
  for (unsigned x = 0; x < d; ++x)
    images[x] = (*this)[rhs[static_cast<Point>(x)]];

  Permutation result;
  result._images = std::move(images);
  return result;
}

Permutation Permutation::inverse() const
{
  Permutation result;
  result._images.resize(_images.size());
  for (std::size_t x = 0; x < _images.size(); ++x)
    result._images[_images[x]] = static_cast<Point>(x);
  return result;
}

Permutation Permutation::extended(unsigned d) const
{
  if (d <= degree())
    return *this;

  Permutation result(*this);
  for (auto x = degree(); x < d; ++x)
    result._images.push_back(static_cast<Point>(x));
  return result;
}

bool Permutation::is_id() const
{ return effective_degree(_images) == 0; }

unsigned Permutation::order() const
{
  unsigned result = 1;
  for (auto const &cycle : cycles())
    result = std::lcm(result, static_cast<unsigned>(cycle.size()));
  return result;
}

std::vector<std::vector<unsigned>> Permutation::cycles() const
{
  std::vector<std::vector<unsigned>> result;
  std::vector<bool> done(_images.size(), false);

  for (std::size_t start = 0; start < _images.size(); ++start) {
    if (done[start] || _images[start] == start)
      continue;

    std::vector<unsigned> cycle;
    for (auto x = start; !done[x]; x = _images[x]) {
      done[x] = true;
      cycle.push_back(static_cast<unsigned>(x + 1));
    }
    result.push_back(std::move(cycle));
  }

  return result;
}

std::string Permutation::str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream ss;
  for (auto const &cycle : cs) {
    ss << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      ss << (i ? " " : "") << cycle[i];
    ss << ')';
  }
  return ss.str();
}

bool Permutation::operator==(Permutation const &other) const
{ return (*this <=> other) == std::strong_ordering::equal; }

std::strong_ordering Permutation::operator<=>(Permutation const &other) const
{
  auto d = std::max(degree(), other.degree());
  for (unsigned x = 0; x < d; ++x) {
    auto p = static_cast<Point>(x);
    if (auto c = (*this)[p] <=> other[p]; c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  auto const &images = p.images();
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < effective_degree(images); ++i) {
    h ^= images[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace grouper
