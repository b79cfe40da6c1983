#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prook/diagram.hpp"

namespace prook {

/// The concrete objects that make a verification fail.
struct Witness {
  std::string reason;
  std::vector<Diagram> diagrams;
  std::vector<Profile> profiles;
};

std::string to_string(const Witness& w);

/// Outcome of an exhaustive or randomized verification.
///
/// `cases` counts the individual instances examined; the first failing
/// instance, if any, is kept as the witness and stops the check.
struct CheckResult {
  bool passed = true;
  std::size_t cases = 0;
  std::optional<Witness> witness;

  void fail(Witness w) {
    if (passed) {
      passed = false;
      witness = std::move(w);
    }
  }
  /// Folds another result in; the first witness wins.
  void merge(const CheckResult& other) {
    cases += other.cases;
    if (!other.passed && other.witness) fail(*other.witness);
  }
  explicit operator bool() const noexcept { return passed; }
};

}  // namespace prook
