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

#ifndef LATFIX_REPORT_HPP
#define LATFIX_REPORT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latfix {

/// kHolds / kFails for plain property checks. Theorem and lemma verifiers
/// use kHypothesesNotMet when the premises fail and kConclusionViolated
/// when the premises hold but the conclusion does not (never expected).
enum class Outcome { kHolds, kFails, kHypothesesNotMet, kConclusionViolated };

constexpr std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kHolds: return "holds";
    case Outcome::kFails: return "fails";
    case Outcome::kHypothesesNotMet: return "hypotheses-not-met";
    case Outcome::kConclusionViolated: return "conclusion-violated";
  }
  return "unknown";
}

/// Result of a checker. Whenever holds() is false the witness names the
/// concrete elements that exhibit the failure.
struct CheckReport {
  Outcome outcome = Outcome::kHolds;
  std::vector<std::string> witness;
  std::string detail;

  bool holds() const noexcept { return outcome == Outcome::kHolds; }
  explicit operator bool() const noexcept { return holds(); }

  static CheckReport pass(std::string detail = {}) {
    return {Outcome::kHolds, {}, std::move(detail)};
  }
  static CheckReport fail(std::vector<std::string> witness, std::string detail) {
    return {Outcome::kFails, std::move(witness), std::move(detail)};
  }
};

}  // namespace latfix

#endif  // LATFIX_REPORT_HPP
