#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gabs/core.hpp"

namespace gabs {

enum class Verdict { holds, bounded_holds, fails, not_applicable };

std::string to_string(Verdict v);

struct Labeled {
  std::string name;
  Elem value;
  bool operator==(const Labeled&) const = default;
};

// Four-valued check result.  `witness` carries the fixed element certifying
// an existential predicate; `counterexample` carries the violating tuple of a
// Fails verdict and always re-evaluates to a violation.  BoundedHolds always
// carries the bound, Holds never does.
struct CheckOutcome {
  Verdict verdict = Verdict::holds;
  std::optional<Elem> witness;
  std::vector<Labeled> counterexample;
  std::optional<int> bound;
  std::string reason;

  bool ok() const { return verdict == Verdict::holds || verdict == Verdict::bounded_holds; }

  static CheckOutcome pass(bool truncated, Bound b) {
    CheckOutcome o;
    o.verdict = truncated ? Verdict::bounded_holds : Verdict::holds;
    if (truncated) o.bound = b.value;
    return o;
  }
  static CheckOutcome pass_with(Elem w, bool truncated, Bound b) {
    CheckOutcome o = pass(truncated, b);
    o.witness = std::move(w);
    return o;
  }
  static CheckOutcome fail(std::vector<Labeled> ce) {
    CheckOutcome o;
    o.verdict = Verdict::fails;
    o.counterexample = std::move(ce);
    return o;
  }
  static CheckOutcome na(std::string reason) {
    CheckOutcome o;
    o.verdict = Verdict::not_applicable;
    o.reason = std::move(reason);
    return o;
  }
};

}  // namespace gabs
