#include "gabs/suite.hpp"

#include <atomic>
#include <chrono>
#include <optional>
#include <thread>

#include "json.hpp"

namespace gabs {

namespace {

enum class Bucket { holds, bounded, na, counterexample };

struct Finding {
  std::string property;
  Bucket bucket;
  std::string detail;
};

// positive / fails / not-applicable verdict class, for route agreement
int verdict_class(const CheckOutcome& o) {
  switch (o.verdict) {
    case Verdict::holds:
    case Verdict::bounded_holds: return 0;
    case Verdict::fails: return 1;
    case Verdict::not_applicable: return 2;
  }
  return 3;
}

Bucket pass_bucket(const CheckOutcome& o) {
  return o.verdict == Verdict::bounded_holds ? Bucket::bounded : Bucket::holds;
}

// per-(submodule, mult_set) base predicate results for one family
struct FamilyBase {
  std::vector<CheckOutcome> two_absorbing;                // by submodule
  std::vector<std::vector<CheckOutcome>> a_two_absorbing; // [submodule][mult_set]
  std::vector<std::vector<CheckOutcome>> a_prime;
  std::vector<std::optional<LocalizedModule>> localized;  // by mult_set
  std::vector<std::string> localization_error;
};

FamilyBase build_family_base(const CorpusFamily& fam) {
  FamilyBase base;
  std::size_t ns = fam.submodules.size(), nm = fam.mult_sets.size();
  base.two_absorbing.reserve(ns);
  base.a_two_absorbing.assign(ns, {});
  base.a_prime.assign(ns, {});
  for (std::size_t i = 0; i < ns; ++i) {
    base.two_absorbing.push_back(is_graded_2_absorbing(fam.submodules[i]));
    base.a_two_absorbing[i].reserve(nm);
    base.a_prime[i].reserve(nm);
    for (std::size_t j = 0; j < nm; ++j) {
      base.a_two_absorbing[i].push_back(is_graded_A_2_absorbing(fam.submodules[i], fam.mult_sets[j]));
      base.a_prime[i].push_back(is_graded_A_prime(fam.submodules[i], fam.mult_sets[j]));
    }
  }
  base.localized.assign(nm, std::nullopt);
  base.localization_error.assign(nm, "");
  for (std::size_t j = 0; j < nm; ++j) {
    if (!fam.module->finite()) {
      base.localization_error[j] = "infinite carrier";
      continue;
    }
    try {
      base.localized[j] = localize_module(fam.module, fam.mult_sets[j]);
    } catch (const structural_error& e) {
      base.localization_error[j] = e.what();
    }
  }
  return base;
}

std::string describe_outcome(const CheckOutcome& o) {
  std::string s = to_string(o.verdict);
  if (o.witness) s += " witness=" + show_coords(*o.witness);
  if (!o.counterexample.empty()) {
    s += " ce=";
    for (const auto& l : o.counterexample) s += l.name + ":" + show_coords(l.value) + " ";
  }
  if (!o.reason.empty()) s += " (" + o.reason + ")";
  return s;
}

class InstanceEvaluator {
 public:
  InstanceEvaluator(const Corpus& corpus, const std::vector<FamilyBase>& bases)
      : corpus_(corpus), bases_(bases) {}

  std::vector<Finding> evaluate(const CorpusInstance& inst) const {
    const CorpusFamily& fam = corpus_.families[inst.family];
    const FamilyBase& base = bases_[inst.family];
    const GradedSubmodule& c = fam.submodules[inst.submodule];
    const MultiplicativeSet& a = fam.mult_sets[inst.mult_set];
    const CheckOutcome& ga2 = base.a_two_absorbing[inst.submodule][inst.mult_set];
    std::vector<Finding> out;

    auto expect_ok = [&](const std::string& prop, const CheckOutcome& got,
                         const std::string& detail) {
      if (got.ok())
        out.push_back({prop, pass_bucket(got), ""});
      else
        out.push_back({prop, Bucket::counterexample, detail + " got " + describe_outcome(got)});
    };

    // P1: enlarging A preserves the verdict while A2 stays off the colon
    for (std::size_t j2 = 0; j2 < fam.mult_sets.size(); ++j2) {
      if (j2 == inst.mult_set) continue;
      if (!a.subset_of(fam.mult_sets[j2])) continue;
      const CheckOutcome& bigger = base.a_two_absorbing[inst.submodule][j2];
      if (!ga2.ok() || bigger.verdict == Verdict::not_applicable) {
        out.push_back({"P1", Bucket::na, ""});
        continue;
      }
      expect_ok("P1", bigger, "A2=" + fam.mult_sets[j2].show());
    }

    // P2: saturation invariance (verdict classes match exactly)
    {
      MultiplicativeSet star = saturate(a);
      CheckOutcome under_star = is_graded_A_2_absorbing(c, star);
      if (verdict_class(under_star) == verdict_class(ga2))
        out.push_back({"P2", ga2.ok() ? pass_bucket(ga2) : Bucket::holds, ""});
      else
        out.push_back({"P2", Bucket::counterexample,
                       "A*=" + star.show() + " base=" + describe_outcome(ga2) +
                           " star=" + describe_outcome(under_star)});
    }

    // P3: localization sends a positive instance to a graded 2-absorbing image
    if (!ga2.ok()) {
      out.push_back({"P3", Bucket::na, ""});
    } else if (!base.localized[inst.mult_set]) {
      out.push_back({"P3", Bucket::na, base.localization_error[inst.mult_set]});
    } else {
      const LocalizedModule& lm = *base.localized[inst.mult_set];
      GradedSubmodule lc = localize_submodule(c, a, lm);
      if (!lc.is_proper()) {
        out.push_back({"P3", Bucket::na, "localized submodule equals the whole module"});
      } else {
        expect_ok("P3", is_graded_2_absorbing(lc), "A^-1C=" + lc.show());
      }
    }

    // P4: component-ideal condition agrees with the definition
    {
      CheckOutcome v = check_component_ideal_condition(c, a);
      if (verdict_class(v) != verdict_class(ga2)) {
        out.push_back({"P4", Bucket::counterexample,
                       "definition=" + describe_outcome(ga2) +
                           " component-ideal=" + describe_outcome(v)});
      } else if (v.ok() && v.witness && !is_witness(*v.witness, c, a).ok()) {
        out.push_back({"P4", Bucket::counterexample,
                       "witness fails recheck: " + describe_outcome(v)});
      } else {
        out.push_back({"P4", v.ok() ? pass_bucket(v) : Bucket::holds, ""});
      }
    }

    // P5: ideal specialization on ring-as-module instances, (C :_R R) = C
    if (!fam.module->is_ring_module()) {
      out.push_back({"P5", Bucket::na, ""});
    } else {
      GradedSubmodule self_colon = colon_ring(c, fam.ring_module);
      if (!self_colon.same_set(c))
        out.push_back({"P5", Bucket::counterexample,
                       "(C:R) = " + self_colon.show() + " differs from C = " + c.show()});
      else
        out.push_back({"P5", Bucket::holds, ""});
    }

    // P6: the colon ideal inherits the predicate
    if (!ga2.ok()) {
      out.push_back({"P6", Bucket::na, ""});
    } else {
      GradedSubmodule ideal = colon_ring(c, fam.ring_module);
      expect_ok("P6", is_graded_A_2_absorbing(ideal, a), "(C:M)=" + ideal.show());
    }

    // P7: colon characterization agreement, with the a^3 witness transfer
    {
      CheckOutcome v = colon_characterization(c, a);
      if (verdict_class(v) != verdict_class(ga2)) {
        out.push_back({"P7", Bucket::counterexample,
                       "definition=" + describe_outcome(ga2) +
                           " colon-char=" + describe_outcome(v)});
      } else if (v.ok() && v.witness) {
        const GradedRing& ring = *fam.ring;
        Elem cubed = ring.mul(ring.mul(*v.witness, *v.witness), *v.witness);
        if (!is_witness(cubed, c, a).ok())
          out.push_back({"P7", Bucket::counterexample,
                         "a^3 fails recheck for " + describe_outcome(v)});
        else
          out.push_back({"P7", pass_bucket(v), ""});
      } else {
        out.push_back({"P7", Bucket::holds, ""});
      }
    }

    // P8: colon stabilization at the witness
    if (!ga2.ok()) {
      out.push_back({"P8", Bucket::na, ""});
    } else {
      expect_ok("P8", stabilization_check(c, a), "");
    }

    // P9: colon-quotient agreement, witness transfers directly
    {
      CheckOutcome v = colon_quotient_2abs(c, a);
      if (verdict_class(v) != verdict_class(ga2)) {
        out.push_back({"P9", Bucket::counterexample,
                       "definition=" + describe_outcome(ga2) +
                           " colon-quotient=" + describe_outcome(v)});
      } else if (v.ok() && v.witness && !is_witness(*v.witness, c, a).ok()) {
        out.push_back({"P9", Bucket::counterexample,
                       "witness fails recheck: " + describe_outcome(v)});
      } else {
        out.push_back({"P9", v.ok() ? pass_bucket(v) : Bucket::holds, ""});
      }
    }

    // P10 / P11: transfer along graded homomorphisms
    for (const HomCase& h : fam.homs) {
      for (const GradedSubmodule& ct : h.target_submodules) {
        CheckOutcome target_verdict = is_graded_A_2_absorbing(ct, a);
        if (!target_verdict.ok()) {
          out.push_back({"P10", Bucket::na, ""});
          continue;
        }
        GradedSubmodule pre = hom_preimage(h.f, ct);
        CheckOutcome pre_verdict = is_graded_A_2_absorbing(pre, a);
        if (pre_verdict.verdict == Verdict::not_applicable) {
          out.push_back({"P10", Bucket::na, ""});
          continue;
        }
        expect_ok("P10", pre_verdict, "hom=" + h.name + " C'=" + ct.show());
      }
      if (!h.epi) {
        out.push_back({"P11", Bucket::na, ""});
      } else {
        bool ker_inside = true;
        for (const Elem& k : h.ker.elements())
          if (c.contains(k) != Mem::yes) {
            ker_inside = false;
            break;
          }
        if (!ga2.ok() || !ker_inside) {
          out.push_back({"P11", Bucket::na, ""});
        } else {
          GradedSubmodule image = hom_image(h.f, c);
          expect_ok("P11", is_graded_A_2_absorbing(image, a), "hom=" + h.name);
        }
      }
    }

    // P12: intersection of two graded A-prime submodules
    for (std::size_t i2 = inst.submodule; i2 < fam.submodules.size(); ++i2) {
      const CheckOutcome& p1 = base.a_prime[inst.submodule][inst.mult_set];
      const CheckOutcome& p2 = base.a_prime[i2][inst.mult_set];
      if (!p1.ok() || !p2.ok()) {
        out.push_back({"P12", Bucket::na, ""});
        continue;
      }
      GradedSubmodule meet = intersect(c, fam.submodules[i2]);
      expect_ok("P12", is_graded_A_2_absorbing(meet, a),
                "C2=" + fam.submodules[i2].show() + " C1^C2=" + meet.show());
    }

    // H1: graded A-prime implies graded A-2-absorbing
    {
      const CheckOutcome& p = base.a_prime[inst.submodule][inst.mult_set];
      if (!p.ok())
        out.push_back({"H1", Bucket::na, ""});
      else
        expect_ok("H1", ga2, "A-prime=" + describe_outcome(p));
    }

    // H2: graded 2-absorbing with disjoint colon implies graded A-2-absorbing
    {
      const CheckOutcome& t = base.two_absorbing[inst.submodule];
      if (!t.ok() || ga2.verdict == Verdict::not_applicable)
        out.push_back({"H2", Bucket::na, ""});
      else
        expect_ok("H2", ga2, "2-absorbing=" + describe_outcome(t));
    }

    // T1: with A = {1} the relative and plain predicates coincide
    if (a.elements().size() == 1 && fam.ring->is_one(a.elements()[0])) {
      const CheckOutcome& t = base.two_absorbing[inst.submodule];
      bool same_class = verdict_class(t) == verdict_class(ga2);
      bool na_iff_whole =
          (ga2.verdict == Verdict::not_applicable) == !c.is_proper();
      if (same_class && na_iff_whole)
        out.push_back({"T1", Bucket::holds, ""});
      else
        out.push_back({"T1", Bucket::counterexample,
                       "plain=" + describe_outcome(t) + " relative=" + describe_outcome(ga2)});
    } else {
      out.push_back({"T1", Bucket::na, ""});
    }

    // L1 / L2 once per (family, mult set): localized validators + saturation
    if (inst.submodule == 0) {
      if (!base.localized[inst.mult_set]) {
        out.push_back({"L1", Bucket::na, base.localization_error[inst.mult_set]});
        out.push_back({"L2", Bucket::na, base.localization_error[inst.mult_set]});
      } else {
        const LocalizedModule& lm = *base.localized[inst.mult_set];
        CheckOutcome vr = validate_graded_ring(*lm.ring_part.ring);
        CheckOutcome vm = validate_graded_module(*lm.module);
        if (vr.ok() && vm.ok())
          out.push_back({"L1", Bucket::holds, ""});
        else
          out.push_back({"L1", Bucket::counterexample,
                         "ring=" + describe_outcome(vr) + " module=" + describe_outcome(vm)});
        MultiplicativeSet star = saturate(a);
        bool all_match = true;
        std::string bad;
        for (const Elem& x : fam.ring->homogeneous_elements()) {
          bool in_star = star.contains(x);
          int cls = lm.ring_part.class_of(x, fam.ring->one());
          bool unit = lm.ring_part.is_unit(cls);
          if (in_star != unit) {
            all_match = false;
            bad = fam.ring->show(x);
            break;
          }
        }
        if (all_match)
          out.push_back({"L2", Bucket::holds, ""});
        else
          out.push_back({"L2", Bucket::counterexample,
                         "saturation mismatch at " + bad + " for A=" + a.show()});
      }
    }

    // every Fails seen along the way must re-validate
    auto recheck = [&](const CheckOutcome& o) {
      if (o.verdict != Verdict::fails) return true;
      const Elem* fa = find_label(o.counterexample, "a");
      const Elem* r = find_label(o.counterexample, "r");
      const Elem* s = find_label(o.counterexample, "s");
      const Elem* m = find_label(o.counterexample, "m");
      Elem one = fam.ring->one();
      if (r && s && m)
        return revalidate_two_absorbing_violation(c, fa ? *fa : one, *r, *s, *m);
      if (r && m) return revalidate_prime_violation(c, fa ? *fa : one, *r, *m);
      return true;
    };
    if (!recheck(ga2))
      out.push_back({"H1", Bucket::counterexample,
                     "counterexample does not re-validate: " + describe_outcome(ga2)});

    return out;
  }

 private:
  const Corpus& corpus_;
  const std::vector<FamilyBase>& bases_;
};

}  // namespace

SuiteReport run_theorem_suite(const Corpus& corpus, int jobs) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.corpus_fingerprint = corpus.fingerprint;
  report.bound = corpus.spec.bound;
  report.instances = corpus.instances.size();
  report.skipped = corpus.skipped;

  std::vector<FamilyBase> bases;
  bases.reserve(corpus.families.size());
  for (const CorpusFamily& fam : corpus.families) bases.push_back(build_family_base(fam));

  InstanceEvaluator eval(corpus, bases);
  std::vector<std::vector<Finding>> results(corpus.instances.size());
  if (jobs < 1) jobs = 1;
  if (jobs == 1) {
    for (std::size_t i = 0; i < corpus.instances.size(); ++i)
      results[i] = eval.evaluate(corpus.instances[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= corpus.instances.size()) return;
        results[i] = eval.evaluate(corpus.instances[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const Finding& f : results[i]) {
      PropertyCounts& pc = report.property_counts[f.property];
      ++pc.tested;
      ++report.evaluations;
      switch (f.bucket) {
        case Bucket::holds: ++pc.holds; break;
        case Bucket::bounded: ++pc.bounded; break;
        case Bucket::na: ++pc.not_applicable; break;
        case Bucket::counterexample:
          ++pc.counterexamples;
          report.counterexamples.push_back({f.property, corpus.instances[i].id, f.detail});
          break;
      }
    }
  }

  auto end = std::chrono::steady_clock::now();
  report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  return report;
}

std::string SuiteReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["verdict"] = clean() ? "Holds" : "Fails";
  j["corpus_fingerprint"] = corpus_fingerprint;
  j["bound"] = bound;
  j["instances"] = instances;
  j["skipped"] = skipped;
  j["evaluations"] = evaluations;
  nlohmann::json pc;
  for (const auto& [name, c] : property_counts) {
    pc[name] = {{"instances_tested", c.tested},
                {"holds", c.holds},
                {"bounded", c.bounded},
                {"not_applicable", c.not_applicable},
                {"counterexamples", c.counterexamples}};
  }
  j["property_counts"] = pc;
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& ce : counterexamples)
    ces.push_back({{"property", ce.property}, {"instance", ce.instance}, {"detail", ce.detail}});
  j["counterexamples"] = ces;
  if (include_timing) j["wall_time_ms"] = wall_time_ms;
  return j.dump(2);
}

std::string SuiteReport::to_text() const {
  std::string s;
  s += "corpus fingerprint: " + corpus_fingerprint + "\n";
  s += "instances: " + std::to_string(instances) +
       ", evaluations: " + std::to_string(evaluations) + "\n";
  for (const auto& [name, c] : property_counts) {
    s += name + ": tested=" + std::to_string(c.tested) + " holds=" + std::to_string(c.holds) +
         " bounded=" + std::to_string(c.bounded) +
         " n/a=" + std::to_string(c.not_applicable) +
         " counterexamples=" + std::to_string(c.counterexamples) + "\n";
  }
  if (counterexamples.empty()) {
    s += "no counterexamples\n";
  } else {
    for (const auto& ce : counterexamples)
      s += "COUNTEREXAMPLE " + ce.property + " @ " + ce.instance + ": " + ce.detail + "\n";
  }
  s += "wall time: " + std::to_string(wall_time_ms) + " ms\n";
  return s;
}

}  // namespace gabs
