#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rr/automata.hpp"

namespace rr {

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// At most a few, each a serialized DFA followed by the failing inputs.
  std::vector<std::string> counterexamples;

  bool passed() const noexcept { return failures == 0; }
};

struct SelftestOptions {
  std::uint64_t seed = 42;
  /// Replaces the default trial count of the named randomized suites.
  std::map<std::string, std::size_t> trials;
  /// Run only these suites (all when empty).
  std::vector<std::string> only;
  bool parallel = true;
};

struct SelftestReport {
  /// Sorted by name.
  std::vector<SuiteResult> suites;

  bool passed() const;
  /// Byte-deterministic for a given seed and options.
  std::string text() const;
};

/// Names of all acceptance suites, sorted.
std::vector<std::string> suite_names();

/// Default trial count of a suite (exhaustive suites report their case count).
std::size_t default_trials(const std::string& name);

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::optional<std::size_t> trials = std::nullopt);

SelftestReport run_selftest(const SelftestOptions& options);

/// Best-effort counterexample reduction: drop accepting states, then merge
/// state pairs, as long as `fails` keeps holding.
Dfa shrink_counterexample(const Dfa& dfa, const std::function<bool(const Dfa&)>& fails);

}  // namespace rr
