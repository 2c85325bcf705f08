#ifndef IINF_ERROR_HPP
#define IINF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace iinf {

enum class ErrorKind {
  NonInjective,
  SourceIsHole,
  TargetIsFixed,
  SyntaxError,
  NotIdempotent,
  NotDRelated,
  NotBijection,
  NotPermutation,
  FlavorMismatch,
  EqualElements,
  ConstraintOutsideDomain,
  WindowTooLarge,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type; the
// kind is what the CLI prints and what tests match on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& context)
      : std::runtime_error(std::string(error_name(kind)) + ": " + context),
        _kind(kind) {}

  ErrorKind kind() const noexcept { return _kind; }

 private:
  ErrorKind _kind;
};

}  // namespace iinf

#endif  // IINF_ERROR_HPP
