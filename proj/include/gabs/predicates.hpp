#pragma once

#include "gabs/mult_set.hpp"
#include "gabs/submodule.hpp"

namespace gabs {

// Deterministic witness search for the graded prime / 2-absorbing hierarchy.
// All quantifiers run over homogeneous elements in canonical order; the
// returned witness is the canonically-first fixed element that works, and a
// Fails payload re-evaluates to a violation.

CheckOutcome is_graded_prime(const GradedSubmodule& c);
CheckOutcome is_graded_2_absorbing(const GradedSubmodule& c);
CheckOutcome is_graded_A_prime(const GradedSubmodule& c, const MultiplicativeSet& a);
CheckOutcome is_graded_A_2_absorbing(const GradedSubmodule& c, const MultiplicativeSet& a);

// Validates one specific fixed element against the universal condition;
// independent of the canonical search order.
CheckOutcome is_witness(const Elem& fixed, const GradedSubmodule& c, const MultiplicativeSet& a);

// Component-ideal condition: over all graded ideals I, J and graded
// submodules K on finite carriers, or their principal instances in bounded
// mode.  Agrees with is_graded_A_2_absorbing.
CheckOutcome check_component_ideal_condition(const GradedSubmodule& c, const MultiplicativeSet& a);

// Colon characterization over scalar pairs: (C : a^2 r s) equals (C : a^2 r)
// or (C : a^2 s), or (C : a^3 r s) is all of M.
CheckOutcome colon_characterization(const GradedSubmodule& c, const MultiplicativeSet& a);

// (C : a^3) = (C : a^n) and (C :_R a^3 M) = (C :_R a^n M) for 3 <= n <= n_max;
// requires a positive is_graded_A_2_absorbing verdict.
CheckOutcome stabilization_check(const GradedSubmodule& c, const MultiplicativeSet& a,
                                 int n_max = 8);

// Some a in A makes (C :_M a) a graded 2-absorbing submodule.
CheckOutcome colon_quotient_2abs(const GradedSubmodule& c, const MultiplicativeSet& a);

// Self-certification: re-evaluate a returned counterexample tuple.
bool revalidate_prime_violation(const GradedSubmodule& c, const Elem& fixed, const Elem& r,
                                const Elem& m);
bool revalidate_two_absorbing_violation(const GradedSubmodule& c, const Elem& fixed,
                                        const Elem& r, const Elem& s, const Elem& m);

// Pull a named element out of a counterexample payload.
const Elem* find_label(const std::vector<Labeled>& labels, const std::string& name);

}  // namespace gabs
