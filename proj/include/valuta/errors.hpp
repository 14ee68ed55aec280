#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace valuta {

/// Base class for all library errors.  The message is prefixed with the
/// originating module so CLI users can tell where a failure came from.
class Error : public std::runtime_error {
 public:
  Error(const std::string& module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(module) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

// matroid-core
struct EmptyBases : Error {
  using Error::Error;
};
struct MixedCardinality : Error {
  using Error::Error;
};
struct ExchangeViolation : Error {
  ExchangeViolation(const std::string& module, const std::string& what,
                    std::uint32_t b1, std::uint32_t b2, int elem)
      : Error(module, what), basis1(b1), basis2(b2), element(elem) {}
  std::uint32_t basis1;  // violating pair, characteristic masks
  std::uint32_t basis2;
  int element;  // e in B1 \ B2 without an exchange partner
};
struct OverlappingSets : Error {
  using Error::Error;
};
struct SizeCapExceeded : Error {
  using Error::Error;
};
struct InfeasibleParameters : Error {
  using Error::Error;
};
struct InvalidArgument : Error {
  using Error::Error;
};

// exact-algebra
struct DimensionMismatch : Error {
  using Error::Error;
};

// invariants
struct HasLoopOrColoop : Error {
  using Error::Error;
};

// families
struct InadmissibleParameters : Error {
  using Error::Error;
};
struct NotStressed : Error {
  using Error::Error;
};
struct EmptyCusp : Error {
  using Error::Error;
};
struct NotElementarySplit : Error {
  using Error::Error;
};
struct UnsupportedShape : Error {
  using Error::Error;
};

// decomposition
struct MixedStratum : Error {
  using Error::Error;
};
/// An exact solve contradicted a theorem the code relies on (uniqueness or
/// integrality of a decomposition).  Always indicates an implementation bug.
struct TheoremViolation : Error {
  using Error::Error;
};
/// Redundant characterizations that are provably equivalent disagreed.
struct InternalInconsistency : Error {
  using Error::Error;
};

// io / cli
struct ParseError : Error {
  using Error::Error;
};
struct UsageError : Error {
  using Error::Error;
};

}  // namespace valuta
