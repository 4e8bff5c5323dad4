#ifndef GUARD_GROUPER_PERMUTATION_H
#define GUARD_GROUPER_PERMUTATION_H

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace grouper
{

// A bijection on {0, ..., degree - 1}. Text forms use 1-based points in
// cycle notation, e.g. "(1 2 3)(4 5)".
class Permutation
{
public:
  using Point = std::uint16_t;

  Permutation() = default;
  explicit Permutation(unsigned degree);
  explicit Permutation(std::vector<Point> images);

  // cycles use 1-based points; a repeated point is a "malformed-cycle"
  static Permutation from_cycles(unsigned degree,
                                 std::vector<std::vector<unsigned>> const &cycles);

  unsigned degree() const
  { return static_cast<unsigned>(_images.size()); }

  Point operator[](Point x) const
  { return x < _images.size() ? _images[x] : x; }

  std::vector<Point> const &images() const
  { return _images; }

  // Function composition: (p * q)(x) = p(q(x)). Operands of different
  // degree are implicitly extended by fixed points.
  Permutation operator*(Permutation const &rhs) const;

  Permutation inverse() const;
  Permutation extended(unsigned degree) const;

  bool is_id() const;
  unsigned order() const;

  std::vector<std::vector<unsigned>> cycles() const;
  std::string str() const;

  bool operator==(Permutation const &other) const;
  std::strong_ordering operator<=>(Permutation const &other) const;

private:
  std::vector<Point> _images;
};

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace grouper

#endif // GUARD_GROUPER_PERMUTATION_H
