// Copyright 2026 The latfix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LATFIX_ERROR_HPP
#define LATFIX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latfix {

enum class Errc {
  kDuplicateElement,
  kUnknownElement,
  kAntisymmetryViolation,
  kEmptyPoset,
  kNotALattice,
  kForeignSubset,
  kEmptySubset,
  kXNotInIntersection,
  kEmptyValue,
  kHypothesisViolated,
  kInternalContradiction,
  kNotFixedPoints,
  kGenerationExhausted,
  kFeasibleNotSublattice,
  kProjectionNotSurjective,
  kPayoffMissing,
  kEmptySection,
  kInfeasibleProfile,
  kEquivalenceViolation,
  kParseError,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kDuplicateElement: return "DuplicateElement";
    case Errc::kUnknownElement: return "UnknownElement";
    case Errc::kAntisymmetryViolation: return "AntisymmetryViolation";
    case Errc::kEmptyPoset: return "EmptyPoset";
    case Errc::kNotALattice: return "NotALattice";
    case Errc::kForeignSubset: return "ForeignSubset";
    case Errc::kEmptySubset: return "EmptySubset";
    case Errc::kXNotInIntersection: return "XNotInIntersection";
    case Errc::kEmptyValue: return "EmptyValue";
    case Errc::kHypothesisViolated: return "HypothesisViolated";
    case Errc::kInternalContradiction: return "InternalContradiction";
    case Errc::kNotFixedPoints: return "NotFixedPoints";
    case Errc::kGenerationExhausted: return "GenerationExhausted";
    case Errc::kFeasibleNotSublattice: return "FeasibleNotSublattice";
    case Errc::kProjectionNotSurjective: return "ProjectionNotSurjective";
    case Errc::kPayoffMissing: return "PayoffMissing";
    case Errc::kEmptySection: return "EmptySection";
    case Errc::kInfeasibleProfile: return "InfeasibleProfile";
    case Errc::kEquivalenceViolation: return "EquivalenceViolation";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `elements()` names the offending
/// elements (or profiles) so callers can print a concrete witness.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::vector<std::string> elements = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        elements_(std::move(elements)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<std::string>& elements() const noexcept {
    return elements_;
  }

 private:
  Errc code_;
  std::vector<std::string> elements_;
};

}  // namespace latfix

#endif  // LATFIX_ERROR_HPP
