#ifndef WALLCUBE_REPORT_HPP
#define WALLCUBE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wallcube {

/// Outcome of one verification check. A failed report always carries the
/// offending vertices (or points) in `counterexample`.
struct VerificationReport {
  std::string check;
  bool passed = true;
  std::vector<int> counterexample;
  std::string detail;
  std::optional<std::uint64_t> seed;  // set when the check ran over a sampled corpus

  std::string coverage() const {
    return seed ? "sampled (seed " + std::to_string(*seed) + ")" : "exhaustive";
  }

  static VerificationReport pass(std::string check, std::string detail = {}) {
    return {std::move(check), true, {}, std::move(detail), std::nullopt};
  }
  static VerificationReport fail(std::string check, std::vector<int> counterexample, std::string detail) {
    return {std::move(check), false, std::move(counterexample), std::move(detail), std::nullopt};
  }
};

}  // namespace wallcube

#endif  // WALLCUBE_REPORT_HPP
