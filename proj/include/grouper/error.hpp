#ifndef GUARD_GROUPER_ERROR_H
#define GUARD_GROUPER_ERROR_H

#include <stdexcept>
#include <string>
#include <utility>

namespace grouper
{

// Every failure raised by the library. code() is a stable kebab-case token
// (e.g. "closure-exceeds-cap") that the command line front end prints
// verbatim, message() is free text.
class Error : public std::runtime_error
{
public:
  Error(std::string code, std::string const &message)
  : std::runtime_error(message),
    _code(std::move(code))
  {}

  std::string const &code() const noexcept
  { return _code; }

private:
  std::string _code;
};

} // namespace grouper

#endif // GUARD_GROUPER_ERROR_H
