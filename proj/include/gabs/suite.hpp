#pragma once

#include <map>

#include "gabs/corpus.hpp"
#include "gabs/localization.hpp"
#include "gabs/predicates.hpp"

namespace gabs {

struct PropertyCounts {
  long long tested = 0;
  long long holds = 0;
  long long bounded = 0;
  long long not_applicable = 0;
  long long counterexamples = 0;
};

struct SuiteCounterexample {
  std::string property;
  std::string instance;
  std::string detail;
};

struct SuiteReport {
  std::string corpus_fingerprint;
  int bound = 10;
  std::size_t instances = 0;
  std::size_t skipped = 0;
  long long evaluations = 0;
  std::map<std::string, PropertyCounts> property_counts;
  std::vector<SuiteCounterexample> counterexamples;
  long long wall_time_ms = 0;

  bool clean() const { return counterexamples.empty(); }
  std::string to_json(bool include_timing = true) const;
  std::string to_text() const;
};

// Evaluates P1..P12 plus the hierarchy (H1, H2), the trivial-A reduction (T1)
// and the localization invariants (L1, L2) on every corpus instance.  Any
// counterexample is a build-failing event.  `jobs` only affects wall time;
// the report is reduced in canonical instance order.
SuiteReport run_theorem_suite(const Corpus& corpus, int jobs = 1);

}  // namespace gabs
