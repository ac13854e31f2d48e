#include "gabs/outcome.hpp"

namespace gabs {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "Holds";
    case Verdict::bounded_holds: return "BoundedHolds";
    case Verdict::fails: return "Fails";
    case Verdict::not_applicable: return "NotApplicable";
  }
  return "?";
}

}  // namespace gabs
