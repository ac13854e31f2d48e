#pragma once

#include "gabs/submodule.hpp"

namespace gabs {

// Additive action-preserving map between graded modules over the same ring,
// given by the images of the source carrier's standard generators.
class GradedHomomorphism {
 public:
  static GradedHomomorphism from_generator_images(GradedModule::Ptr src, GradedModule::Ptr dst,
                                                  std::vector<Elem> images);
  static GradedHomomorphism identity(GradedModule::Ptr m);

  const GradedModule::Ptr& source() const { return src_; }
  const GradedModule::Ptr& target() const { return dst_; }
  Elem apply(const Elem& m) const;

  // f(r m) = r f(m) and f(M_g) inside M'_g, on the box
  CheckOutcome validate() const;
  bool is_surjective() const;  // on the box

 private:
  GradedModule::Ptr src_, dst_;
  std::vector<Elem> images_;
};

GradedSubmodule hom_image(const GradedHomomorphism& f, const GradedSubmodule& c);
GradedSubmodule hom_preimage(const GradedHomomorphism& f, const GradedSubmodule& c_target);
GradedSubmodule kernel(const GradedHomomorphism& f);

}  // namespace gabs
