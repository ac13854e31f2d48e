#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gabs/localization.hpp"
#include "gabs/predicates.hpp"
#include "gabs/spec_format.hpp"
#include "gabs/suite.hpp"

namespace {

using namespace gabs;

int exit_code(const CheckOutcome& o) {
  switch (o.verdict) {
    case Verdict::holds:
    case Verdict::bounded_holds: return 0;
    case Verdict::fails: return 1;
    case Verdict::not_applicable: return 2;
  }
  return 3;
}

nlohmann::json outcome_json(const CheckOutcome& o, const GradedModule* m) {
  nlohmann::json j;
  j["verdict"] = to_string(o.verdict);
  j["witness"] = nullptr;
  if (o.witness) j["witness"] = *o.witness;
  if (o.counterexample.empty()) {
    j["counterexample"] = nullptr;
  } else {
    nlohmann::json ce;
    for (const auto& l : o.counterexample) ce[l.name] = l.value;
    j["counterexample"] = ce;
  }
  j["bound"] = nullptr;
  if (o.bound) j["bound"] = *o.bound;
  j["reason"] = o.reason;
  (void)m;
  return j;
}

void print_outcome(const CheckOutcome& o, const SpecFile& f, bool json_format) {
  if (json_format) {
    std::cout << outcome_json(o, f.module.get()).dump(2) << "\n";
    return;
  }
  std::cout << "verdict: " << to_string(o.verdict);
  if (o.bound) std::cout << " (bound " << *o.bound << ")";
  std::cout << "\n";
  if (o.witness) std::cout << "witness: " << f.ring->show(*o.witness) << "\n";
  if (!o.counterexample.empty()) {
    std::cout << "counterexample:";
    for (const auto& l : o.counterexample) {
      bool module_elem = l.name == "m" || l.name == "part" || l.name == "element" ||
                         l.name == "i_mod" || l.name == "j_mod";
      std::cout << " " << l.name << "="
                << (module_elem ? f.module->show(l.value) : show_coords(l.value));
    }
    std::cout << "\n";
  }
  if (!o.reason.empty()) std::cout << "reason: " << o.reason << "\n";
}

const GradedSubmodule& need_submodule(const SpecFile& f, const std::string& name) {
  const GradedSubmodule* s = f.submodule(name);
  if (!s) throw spec_error("submodules", "no submodule named \"" + name + "\"");
  return *s;
}

const MultiplicativeSet& need_mult_set(const SpecFile& f, const std::string& name) {
  const MultiplicativeSet* s = f.mult_set(name);
  if (!s) throw spec_error("mult_sets", "no multiplicative set named \"" + name + "\"");
  return *s;
}

void print_submodule(const GradedSubmodule& s, const std::string& title) {
  std::cout << title << ": " << s.show() << (s.exact() ? "" : " [bounded]") << "\n";
  for (const auto& [d, comp] : s.components()) {
    if (comp.size() <= 1) continue;
    std::cout << "  component " << show_coords(d) << ": ";
    for (std::size_t i = 0; i < comp.size(); ++i)
      std::cout << (i ? "," : "") << s.parent()->show(comp[i]);
    std::cout << "\n";
  }
}

int cmd_validate(const std::string& file, std::optional<int> bound) {
  SpecFile f = parse_spec_file(file, bound);
  std::cout << "ring " << f.ring->describe() << ": " << to_string(f.ring_validation.verdict)
            << "\n";
  std::cout << "module " << f.module->describe() << ": "
            << to_string(f.module_validation.verdict) << "\n";
  for (const auto& [name, s] : f.submodules)
    std::cout << "submodule " << name << " = " << s.show() << (s.exact() ? "" : " [bounded]")
              << "\n";
  for (const auto& [name, a] : f.mult_sets)
    std::cout << "mult set " << name << " = " << a.show() << (a.exact() ? "" : " [bounded]")
              << (a.contains_zero() ? " [contains 0]" : "") << "\n";
  return 0;
}

int cmd_check(const std::string& file, const std::string& predicate, const std::string& sub_name,
              const std::string& multset_name, std::optional<int> bound,
              const std::string& witness, bool json_format) {
  SpecFile f = parse_spec_file(file, bound);
  const GradedSubmodule& c = need_submodule(f, sub_name);
  auto need_a = [&]() -> const MultiplicativeSet& {
    if (multset_name.empty())
      throw spec_error("check", "--predicate " + predicate + " needs --multset");
    return need_mult_set(f, multset_name);
  };

  CheckOutcome o;
  if (!witness.empty()) {
    if (predicate != "a-two-absorbing")
      throw spec_error("check", "--witness applies to --predicate a-two-absorbing only");
    o = is_witness(parse_element(witness), c, need_a());
  } else if (predicate == "prime") {
    o = is_graded_prime(c);
  } else if (predicate == "two-absorbing") {
    o = is_graded_2_absorbing(c);
  } else if (predicate == "a-prime") {
    o = is_graded_A_prime(c, need_a());
  } else if (predicate == "a-two-absorbing") {
    o = is_graded_A_2_absorbing(c, need_a());
  } else if (predicate == "colon-char") {
    o = colon_characterization(c, need_a());
  } else if (predicate == "component-ideal") {
    o = check_component_ideal_condition(c, need_a());
  } else if (predicate == "colon-quotient") {
    o = colon_quotient_2abs(c, need_a());
  } else {
    throw spec_error("check", "unknown predicate \"" + predicate + "\"");
  }
  print_outcome(o, f, json_format);
  return exit_code(o);
}

int cmd_colon(const std::string& file, const std::string& sub_name, const std::string& divisor,
              const std::string& ideal_name, std::optional<int> bound) {
  SpecFile f = parse_spec_file(file, bound);
  const GradedSubmodule& c = need_submodule(f, sub_name);
  if (!divisor.empty() && !ideal_name.empty())
    throw spec_error("colon", "use either --divisor or --ideal");
  if (!divisor.empty()) {
    print_submodule(colon_module(c, parse_element(divisor)), "(C :_M " + divisor + ")");
  } else if (!ideal_name.empty()) {
    print_submodule(colon_module(c, need_submodule(f, ideal_name)),
                    "(C :_M " + ideal_name + ")");
  } else {
    print_submodule(colon_ring(c), "(C :_R M)");
  }
  return 0;
}

int cmd_saturate(const std::string& file, const std::string& multset_name,
                 std::optional<int> bound) {
  SpecFile f = parse_spec_file(file, bound);
  const MultiplicativeSet& a = need_mult_set(f, multset_name);
  MultiplicativeSet star = saturate(a);
  std::cout << "A  = " << a.show() << (a.exact() ? "" : " [bounded]") << "\n";
  std::cout << "A* = " << star.show() << (star.exact() ? "" : " [bounded]") << "\n";
  return 0;
}

int cmd_localize(const std::string& file, const std::string& multset_name,
                 const std::string& sub_name, std::optional<int> bound) {
  SpecFile f = parse_spec_file(file, bound);
  const MultiplicativeSet& a = need_mult_set(f, multset_name);
  LocalizedModule lm = localize_module(f.module, a);
  std::cout << "A^-1R: " << lm.ring_part.reps.size() << " classes\n";
  for (std::size_t i = 0; i < lm.ring_part.reps.size(); ++i)
    std::cout << "  [" << i << "] " << lm.ring_part.ring->show({static_cast<Coord>(i)}) << "\n";
  std::cout << "A^-1M: " << lm.reps.size() << " classes\n";
  for (std::size_t i = 0; i < lm.reps.size(); ++i)
    std::cout << "  [" << i << "] " << lm.module->show({static_cast<Coord>(i)}) << "\n";
  std::cout << "ring validation: "
            << to_string(validate_graded_ring(*lm.ring_part.ring).verdict) << "\n";
  std::cout << "module validation: " << to_string(validate_graded_module(*lm.module).verdict)
            << "\n";
  if (!sub_name.empty()) {
    const GradedSubmodule& c = need_submodule(f, sub_name);
    print_submodule(localize_submodule(c, a, lm), "A^-1" + sub_name);
  }
  return 0;
}

Corpus corpus_from_spec_file(const SpecFile& f) {
  Corpus c;
  c.spec.bound = f.bound.value;
  CorpusFamily fam;
  fam.ring = f.ring;
  fam.module = f.module;
  fam.ring_module = GradedModule::ring_as_module(f.ring);
  for (const auto& [name, s] : f.submodules) fam.submodules.push_back(s);
  for (const auto& [name, a] : f.mult_sets) fam.mult_sets.push_back(a);
  if (fam.submodules.empty()) fam.submodules.push_back(GradedSubmodule::zero(f.module));
  if (fam.mult_sets.empty())
    fam.mult_sets.push_back(MultiplicativeSet::closure(f.ring, {}));
  HomCase h;
  h.name = "id";
  h.f = GradedHomomorphism::identity(f.module);
  h.target_submodules = fam.submodules;
  h.ker = kernel(h.f);
  h.epi = true;
  fam.homs.push_back(std::move(h));
  c.families.push_back(std::move(fam));
  for (std::size_t si = 0; si < c.families[0].submodules.size(); ++si)
    for (std::size_t mi = 0; mi < c.families[0].mult_sets.size(); ++mi) {
      CorpusInstance inst;
      inst.family = 0;
      inst.submodule = si;
      inst.mult_set = mi;
      inst.id = f.module->describe() + " C=" + c.families[0].submodules[si].show() +
                " A=" + c.families[0].mult_sets[mi].show();
      c.instances.push_back(std::move(inst));
    }
  c.fingerprint = "file";
  return c;
}

int cmd_verify(const std::string& file, const std::string& corpus_file, int jobs,
               const std::string& format, std::optional<int> bound) {
  Corpus corpus;
  if (!corpus_file.empty()) {
    CorpusSpec spec = CorpusSpec::parse_file(corpus_file);
    if (bound) spec.bound = *bound;
    corpus = enumerate_corpus(spec);
  } else if (!file.empty()) {
    corpus = corpus_from_spec_file(parse_spec_file(file, bound));
  } else {
    throw spec_error("verify", "give a structure file or --corpus");
  }
  SuiteReport report = run_theorem_suite(corpus, jobs);
  if (format == "json")
    std::cout << report.to_json() << "\n";
  else
    std::cout << report.to_text();
  return report.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded module predicate checker"};
  app.require_subcommand(1);

  std::string file, predicate, sub_name, multset_name, witness, divisor, ideal_name;
  std::string corpus_file, format = "text";
  std::optional<int> bound;
  int jobs = 1;

  auto* validate = app.add_subcommand("validate", "parse a structure file and run validators");
  validate->add_option("file", file)->required();
  validate->add_option("--bound", bound);

  auto* check = app.add_subcommand("check", "decide a predicate on a named submodule");
  check->add_option("file", file)->required();
  check->add_option("--predicate", predicate)->required();
  check->add_option("--submodule", sub_name)->required();
  check->add_option("--multset", multset_name);
  check->add_option("--bound", bound);
  check->add_option("--witness", witness);
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* colon = app.add_subcommand("colon", "colon ideal / colon submodule");
  colon->add_option("file", file)->required();
  colon->add_option("--submodule", sub_name)->required();
  colon->add_option("--divisor", divisor);
  colon->add_option("--ideal", ideal_name);
  colon->add_option("--bound", bound);

  auto* saturate_cmd = app.add_subcommand("saturate", "saturation A* of a multiplicative set");
  saturate_cmd->add_option("file", file)->required();
  saturate_cmd->add_option("--multset", multset_name)->required();
  saturate_cmd->add_option("--bound", bound);

  auto* localize = app.add_subcommand("localize", "ring and module of fractions");
  localize->add_option("file", file)->required();
  localize->add_option("--multset", multset_name)->required();
  localize->add_option("--submodule", sub_name);
  localize->add_option("--bound", bound);

  auto* verify = app.add_subcommand("verify", "run the whole property suite");
  verify->add_option("file", file);
  verify->add_option("--corpus", corpus_file);
  verify->add_option("--jobs", jobs)->check(CLI::Range(1, 64));
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--bound", bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return 3;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, bound);
    if (check->parsed())
      return cmd_check(file, predicate, sub_name, multset_name, bound, witness,
                       format == "json");
    if (colon->parsed()) return cmd_colon(file, sub_name, divisor, ideal_name, bound);
    if (saturate_cmd->parsed()) return cmd_saturate(file, multset_name, bound);
    if (localize->parsed()) return cmd_localize(file, multset_name, sub_name, bound);
    if (verify->parsed()) return cmd_verify(file, corpus_file, jobs, format, bound);
  } catch (const spec_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
