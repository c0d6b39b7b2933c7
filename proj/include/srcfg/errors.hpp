#pragma once

#include <stdexcept>
#include <string>

namespace srcfg {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SRCFG_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  }

SRCFG_DEFINE_ERROR(NotPrimePower);
SRCFG_DEFINE_ERROR(DimensionOutOfRange);
SRCFG_DEFINE_ERROR(AmbientMismatch);
SRCFG_DEFINE_ERROR(InvalidCayleyTable);
SRCFG_DEFINE_ERROR(InvalidSpec);
SRCFG_DEFINE_ERROR(MalformedGraph6);
SRCFG_DEFINE_ERROR(InvalidConfiguration);
SRCFG_DEFINE_ERROR(TheoremViolation);
SRCFG_DEFINE_ERROR(IdentityViolated);
SRCFG_DEFINE_ERROR(NonIntegralMultiplicity);
SRCFG_DEFINE_ERROR(NonIntegralPointCount);
SRCFG_DEFINE_ERROR(CollinearTriple);
SRCFG_DEFINE_ERROR(OrderTooSmall);
SRCFG_DEFINE_ERROR(NotMooreGraph);
SRCFG_DEFINE_ERROR(NotDeficient);
SRCFG_DEFINE_ERROR(InconsistentParameters);
SRCFG_DEFINE_ERROR(FileNotFound);
SRCFG_DEFINE_ERROR(ParseError);
SRCFG_DEFINE_ERROR(Overflow);

#undef SRCFG_DEFINE_ERROR

}  // namespace srcfg
