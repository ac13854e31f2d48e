#include "gabs/homomorphism.hpp"

#include <algorithm>
#include <set>

namespace gabs {

GradedHomomorphism GradedHomomorphism::from_generator_images(GradedModule::Ptr src,
                                                             GradedModule::Ptr dst,
                                                             std::vector<Elem> images) {
  if (src->ring() != dst->ring())
    throw structural_error("graded homomorphism needs modules over the same ring");
  if (src->table_backed())
    throw structural_error("homomorphisms are defined on coordinate modules");
  if (images.size() != src->shape().rank())
    throw structural_error("one image per source generator required");
  for (std::size_t j = 0; j < images.size(); ++j) {
    images[j] = dst->shape().reduce(images[j]);
    Coord d = src->shape().orders()[j];
    if (d > 0 && !dst->is_zero(dst->scale_int(d, images[j])))
      throw structural_error("generator image incompatible with coordinate order");
  }
  GradedHomomorphism f;
  f.src_ = std::move(src);
  f.dst_ = std::move(dst);
  f.images_ = std::move(images);
  return f;
}

GradedHomomorphism GradedHomomorphism::identity(GradedModule::Ptr m) {
  std::vector<Elem> images;
  for (std::size_t j = 0; j < m->shape().rank(); ++j) images.push_back(m->shape().unit(j));
  return from_generator_images(m, m, std::move(images));
}

Elem GradedHomomorphism::apply(const Elem& m) const {
  Elem acc = dst_->zero();
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (m.at(j) == 0) continue;
    acc = dst_->add(acc, dst_->scale_int(m[j], images_[j]));
  }
  return acc;
}

CheckOutcome GradedHomomorphism::validate() const {
  bool flagged = !src_->finite() || !dst_->finite() || !scalar_box_complete(*src_);
  for (const Elem& r : src_->ring()->elements())
    for (const Elem& m : src_->elements())
      if (apply(src_->act(r, m)) != dst_->act(r, apply(m)))
        return CheckOutcome::fail({{"r", r}, {"m", m}});
  for (const auto& [d, cs] : src_->components()) {
    for (const Elem& x : cs.box_list) {
      Mem mem = dst_->component_contains(d, apply(x));
      if (mem == Mem::no) return CheckOutcome::fail({{"m", x}});
      if (mem == Mem::unknown) flagged = true;
    }
  }
  return CheckOutcome::pass(flagged, src_->bound());
}

bool GradedHomomorphism::is_surjective() const {
  auto less = [&](const Elem& a, const Elem& b) { return dst_->less(a, b); };
  std::set<Elem, decltype(less)> image(less);
  for (const Elem& m : src_->elements()) image.insert(apply(m));
  for (const Elem& t : dst_->elements())
    if (!image.count(t)) return false;
  return true;
}

GradedSubmodule hom_image(const GradedHomomorphism& f, const GradedSubmodule& c) {
  if (c.parent() != f.source()) throw structural_error("submodule lives in the wrong module");
  std::vector<Elem> out;
  bool flagged = !c.exact();
  for (const Elem& m : c.elements()) {
    Elem y = f.apply(m);
    if (f.target()->in_box(y))
      out.push_back(y);
    else
      flagged = true;
  }
  bool exact = f.target()->finite() && !flagged;
  return GradedSubmodule::trusted(f.target(), std::move(out), exact);
}

GradedSubmodule hom_preimage(const GradedHomomorphism& f, const GradedSubmodule& c_target) {
  if (c_target.parent() != f.target())
    throw structural_error("submodule lives in the wrong module");
  std::vector<Elem> out;
  for (const Elem& m : f.source()->elements())
    if (c_target.contains(f.apply(m)) == Mem::yes) out.push_back(m);
  bool exact = f.source()->finite() && c_target.exact();
  return GradedSubmodule::trusted(f.source(), std::move(out), exact);
}

GradedSubmodule kernel(const GradedHomomorphism& f) {
  return hom_preimage(f, GradedSubmodule::zero(f.target()));
}

}  // namespace gabs
