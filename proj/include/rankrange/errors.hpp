#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rankrange {

/// Base of every error raised by the library. `kind()` is the stable name
/// reported by the command-line front end.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define RANKRANGE_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(#Name, what) {}        \
  };

RANKRANGE_DEFINE_ERROR(CycleError)
RANKRANGE_DEFINE_ERROR(RangeError)
RANKRANGE_DEFINE_ERROR(LimitError)
RANKRANGE_DEFINE_ERROR(OverlapError)
RANKRANGE_DEFINE_ERROR(OverflowError)
RANKRANGE_DEFINE_ERROR(FamilyError)
RANKRANGE_DEFINE_ERROR(DegenerateRuleError)
RANKRANGE_DEFINE_ERROR(RuleDomainError)
RANKRANGE_DEFINE_ERROR(LengthMismatchError)
RANKRANGE_DEFINE_ERROR(NotRegularError)
RANKRANGE_DEFINE_ERROR(PurityMetadataError)
RANKRANGE_DEFINE_ERROR(ParityError)
RANKRANGE_DEFINE_ERROR(SkewSymmetryError)
RANKRANGE_DEFINE_ERROR(InvalidInstanceError)
RANKRANGE_DEFINE_ERROR(ParseError)
RANKRANGE_DEFINE_ERROR(UnknownRuleError)
RANKRANGE_DEFINE_ERROR(IntractableWithoutOracleError)

#undef RANKRANGE_DEFINE_ERROR

}  // namespace rankrange
