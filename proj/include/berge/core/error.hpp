#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace berge {

enum class Errc {
  NonUniformEdge,
  DuplicateEdge,
  VertexOutOfRange,
  BadUniformity,
  SameVertex,
  LengthOutOfRange,
  OutOfRange,
  NotAChord,
  PreconditionViolated,
  NotSsc,
  HypothesesNotMet,
  ExtractionFailed,
  MatchingFailed,
  BadParameters,
  InvariantViolated,
  ParseError,
};

std::string_view to_string(Errc code);

/// Every failure raised by the toolkit carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace berge
