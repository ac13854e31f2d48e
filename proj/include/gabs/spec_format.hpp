#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gabs/homomorphism.hpp"
#include "gabs/localization.hpp"
#include "gabs/predicates.hpp"

namespace gabs {

// Parse or validation failure with a field location.
struct spec_error : std::runtime_error {
  explicit spec_error(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what) {}
};

// A parsed and validated structure file: one graded ring, one graded module,
// named submodules and named multiplicative sets.
struct SpecFile {
  Bound bound;
  GradingGroup group;
  GradedRing::Ptr ring;
  GradedModule::Ptr module;
  std::vector<std::pair<std::string, GradedSubmodule>> submodules;
  std::vector<std::pair<std::string, MultiplicativeSet>> mult_sets;
  CheckOutcome ring_validation;
  CheckOutcome module_validation;

  const GradedSubmodule* submodule(const std::string& name) const;
  const MultiplicativeSet* mult_set(const std::string& name) const;
};

SpecFile parse_spec(const std::string& text, std::optional<int> bound_override = std::nullopt);
SpecFile parse_spec_file(const std::string& path,
                         std::optional<int> bound_override = std::nullopt);

// "6" or "(0,1)" or "[0,1]" -> coordinates
Elem parse_element(const std::string& text);

}  // namespace gabs
