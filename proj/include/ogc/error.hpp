#pragma once

#include <stdexcept>
#include <string>

namespace ogc {

enum class ErrorKind {
  OutOfRangeEndpoint,
  SelfLoop,
  InadmissibleInput,
  ResourceLimitExceeded,
  CorruptCache,
  VersionMismatch,
  EdgeOutOfRange,
  MissingBasis,
  ContainsEE,
  UnsupportedLoopOrder,
  Disconnected,
  WrongStage,
  PrimeDisagreement,
  NotAChainMap,
  IncompleteRange,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parity of the degree parameter d. Even d twists coinvariants by the edge
/// sign representation, odd d by the vertex sign representation.
enum class Parity : unsigned char { Even, Odd };

constexpr Parity parity_of(int d) { return (d % 2 == 0) ? Parity::Even : Parity::Odd; }

constexpr int sign_pow(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace ogc
