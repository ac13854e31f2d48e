#include "gabs/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gabs/spec_format.hpp"

namespace gabs {

using nlohmann::json;

CorpusSpec CorpusSpec::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw spec_error("", std::string("syntax error: ") + e.what());
  }
  CorpusSpec s;
  s.bound = j.value("bound", 10);
  if (j.contains("grading_group")) {
    s.grading_group.clear();
    for (const auto& v : j.at("grading_group")) s.grading_group.push_back(v.get<Coord>());
  }
  if (j.contains("modular_rings"))
    for (const auto& v : j.at("modular_rings")) s.modular_rings.push_back(v.get<Coord>());
  if (j.contains("group_algebras"))
    for (const auto& v : j.at("group_algebras"))
      s.group_algebra_bases.push_back(v.is_object() ? v.at("base").get<Coord>()
                                                    : v.get<Coord>());
  s.enumerate_submodules = j.value("enumerate_submodules", true);
  s.enumerate_mult_sets = j.value("enumerate_mult_sets", true);
  s.max_carrier = j.value("max_carrier", std::size_t{16});
  s.max_mult_sets = j.value("max_mult_sets", std::size_t{64});
  if (s.max_carrier == 0 || s.max_mult_sets == 0)
    throw spec_error("caps", "caps must be positive");
  return s;
}

CorpusSpec CorpusSpec::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_error(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::vector<MultiplicativeSet> enumerate_mult_sets(const GradedRing::Ptr& ring, std::size_t cap,
                                                   std::size_t& skipped) {
  std::vector<MultiplicativeSet> out;
  auto add = [&](MultiplicativeSet s) {
    for (const auto& have : out)
      if (have.elements() == s.elements()) return;
    if (out.size() >= cap) {
      ++skipped;
      return;
    }
    out.push_back(std::move(s));
  };
  add(MultiplicativeSet::closure(ring, {}));  // {1}
  for (const Elem& x : ring->homogeneous_elements()) add(MultiplicativeSet::closure(ring, {x}));
  add(MultiplicativeSet::units(ring));
  return out;
}

namespace {

struct Fnv {
  unsigned long long h = 1469598103934665603ULL;
  void eat(const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  }
};

std::string hex(unsigned long long v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::vector<GradedSubmodule> target_lattice(const GradedModule::Ptr& target) {
  return enumerate_graded_submodules(target);
}

void add_hom_cases(CorpusFamily& fam, Coord modulus) {
  const GradedModule::Ptr& m = fam.module;
  // identity
  {
    HomCase h;
    h.name = "id";
    h.f = GradedHomomorphism::identity(m);
    h.target_submodules = fam.submodules;
    h.ker = kernel(h.f);
    h.epi = true;
    fam.homs.push_back(std::move(h));
  }
  // multiplication by a degree-e scalar
  const CompSet* re = fam.ring->component(fam.ring->grading_group().identity());
  if (re) {
    for (const Elem& k : re->box_list) {
      if (fam.ring->is_zero(k) || fam.ring->is_one(k)) continue;
      std::vector<Elem> images;
      for (std::size_t j = 0; j < m->shape().rank(); ++j)
        images.push_back(m->act(k, m->shape().unit(j)));
      HomCase h;
      h.name = "mul(" + fam.ring->show(k) + ")";
      h.f = GradedHomomorphism::from_generator_images(m, m, std::move(images));
      h.target_submodules = fam.submodules;
      h.ker = kernel(h.f);
      h.epi = h.f.is_surjective();
      fam.homs.push_back(std::move(h));
    }
  }
  // reduction onto Z_d for proper divisors d of a modular ring
  if (modulus > 0) {
    for (Coord d = 2; d < modulus; ++d) {
      if (modulus % d != 0) continue;
      GradedModule::Ptr target =
          GradedModule::cyclic_product(fam.ring, {d}, GradingSpec::trivial());
      HomCase h;
      h.name = "mod" + std::to_string(d);
      h.f = GradedHomomorphism::from_generator_images(m, target, {{1}});
      h.target_submodules = target_lattice(target);
      h.ker = kernel(h.f);
      h.epi = h.f.is_surjective();
      fam.homs.push_back(std::move(h));
    }
  }
}

}  // namespace

Corpus enumerate_corpus(const CorpusSpec& spec) {
  Corpus c;
  c.spec = spec;
  GradingGroup g(spec.grading_group);
  Bound b(spec.bound);

  std::vector<std::pair<GradedRing::Ptr, Coord>> rings;
  for (Coord n : spec.modular_rings)
    rings.emplace_back(GradedRing::modular(n, g, GradingSpec::trivial(), b), n);
  for (Coord base : spec.group_algebra_bases)
    rings.emplace_back(GradedRing::group_algebra(base, g, b), 0);

  for (auto& [ring, modulus] : rings) {
    if (static_cast<std::size_t>(ring->shape().size()) > spec.max_carrier) {
      ++c.skipped;
      continue;
    }
    CorpusFamily fam;
    fam.ring = ring;
    fam.module = GradedModule::ring_as_module(ring);
    fam.ring_module = fam.module;
    if (spec.enumerate_submodules)
      fam.submodules = enumerate_graded_submodules(fam.module);
    else
      fam.submodules = {GradedSubmodule::zero(fam.module), GradedSubmodule::whole(fam.module)};
    if (spec.enumerate_mult_sets) {
      fam.mult_sets = enumerate_mult_sets(ring, spec.max_mult_sets, c.skipped);
    } else {
      fam.mult_sets = {MultiplicativeSet::closure(ring, {})};
    }
    add_hom_cases(fam, modulus);
    c.families.push_back(std::move(fam));
  }

  Fnv fp;
  fp.eat("bound=" + std::to_string(spec.bound));
  for (std::size_t fi = 0; fi < c.families.size(); ++fi) {
    const CorpusFamily& fam = c.families[fi];
    fp.eat("|ring=" + fam.ring->describe());
    for (std::size_t si = 0; si < fam.submodules.size(); ++si)
      for (std::size_t mi = 0; mi < fam.mult_sets.size(); ++mi) {
        CorpusInstance inst;
        inst.family = fi;
        inst.submodule = si;
        inst.mult_set = mi;
        inst.id = fam.ring->describe() + " C=" + fam.submodules[si].show() +
                  " A=" + fam.mult_sets[mi].show();
        fp.eat("|" + inst.id);
        c.instances.push_back(std::move(inst));
      }
  }
  c.fingerprint = hex(fp.h);
  return c;
}

}  // namespace gabs
