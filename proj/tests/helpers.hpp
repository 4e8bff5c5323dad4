#ifndef GUARD_GROUPER_TEST_HELPERS_H
#define GUARD_GROUPER_TEST_HELPERS_H

#include <string>

#include <gtest/gtest.h>

#include "grouper/error.hpp"
#include "grouper/families.hpp"
#include "grouper/spec_format.hpp"

namespace testing_support
{

inline grouper::GroupPtr group(char const *descriptor)
{ return grouper::standard_group(descriptor); }

inline grouper::Permutation perm(char const *cycles)
{ return grouper::parse_cycles(cycles); }

// element of a permutation group given in cycle notation
inline grouper::Element el(grouper::GroupPtr const &g, char const *cycles)
{
  auto x = grouper::find_permutation(*g, perm(cycles));
  if (!x)
    throw std::logic_error(std::string("not an element: ") + cycles);
  return *x;
}

// runs f and returns the grouper::Error code it throws, or "" if none
template <typename F>
std::string error_code(F &&f)
{
  try {
    f();
  } catch (grouper::Error const &e) {
    return e.code();
  }
  return "";
}

} // namespace testing_support

#endif // GUARD_GROUPER_TEST_HELPERS_H
