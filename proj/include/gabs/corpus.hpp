#pragma once

#include "gabs/homomorphism.hpp"
#include "gabs/mult_set.hpp"
#include "gabs/submodule.hpp"

namespace gabs {

// Families of small structures to enumerate: ring-as-module over Z_n moduli
// and group algebras over the grading group, with every graded submodule and
// the singleton-generated multiplicative closures plus {1} and the units.
struct CorpusSpec {
  int bound = 10;
  std::vector<Coord> grading_group{2};
  std::vector<Coord> modular_rings;
  std::vector<Coord> group_algebra_bases;
  bool enumerate_submodules = true;
  bool enumerate_mult_sets = true;
  std::size_t max_carrier = 16;
  std::size_t max_mult_sets = 64;

  static CorpusSpec parse(const std::string& text);
  static CorpusSpec parse_file(const std::string& path);
};

// A graded homomorphism out of the family module, with the graded submodule
// lattice of its target and its kernel.
struct HomCase {
  std::string name;
  GradedHomomorphism f;
  std::vector<GradedSubmodule> target_submodules;
  GradedSubmodule ker;
  bool epi = false;
};

struct CorpusFamily {
  GradedRing::Ptr ring;
  GradedModule::Ptr module;       // ring as module
  GradedModule::Ptr ring_module;  // parent for colon ideals
  std::vector<GradedSubmodule> submodules;
  std::vector<MultiplicativeSet> mult_sets;
  std::vector<HomCase> homs;
};

struct CorpusInstance {
  std::size_t family = 0;
  std::size_t submodule = 0;
  std::size_t mult_set = 0;
  std::string id;
};

struct Corpus {
  CorpusSpec spec;
  std::vector<CorpusFamily> families;
  std::vector<CorpusInstance> instances;
  std::size_t skipped = 0;
  std::string fingerprint;
};

Corpus enumerate_corpus(const CorpusSpec& spec);

// the multiplicative sets enumerated for one ring, deterministic order
std::vector<MultiplicativeSet> enumerate_mult_sets(const GradedRing::Ptr& ring,
                                                   std::size_t cap, std::size_t& skipped);

}  // namespace gabs
