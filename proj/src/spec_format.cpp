#include "gabs/spec_format.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gabs {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw spec_error(where, what);
}

Elem parse_coords(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integer coordinates");
  Elem e;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(where, "coordinates must be integers");
    e.push_back(v.get<Coord>());
  }
  return e;
}

std::vector<Elem> parse_elem_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of elements");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_coords(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

GradingSpec parse_grading(const json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "trivial") return GradingSpec::trivial();
  if (j.is_array()) {
    std::vector<Degree> degs;
    for (std::size_t i = 0; i < j.size(); ++i)
      degs.push_back(parse_coords(j[i], where + "[" + std::to_string(i) + "]"));
    return GradingSpec::by_coordinate(std::move(degs));
  }
  if (j.is_object() && j.contains("components")) {
    std::vector<std::pair<Degree, std::vector<Elem>>> comps;
    for (const auto& c : j.at("components")) {
      Degree d = parse_coords(c.at("degree"), where + ".degree");
      comps.emplace_back(d, parse_elem_list(c.at("generators"), where + ".generators"));
    }
    return GradingSpec::by_generators(std::move(comps));
  }
  fail(where, "grading must be \"trivial\", a per-coordinate degree list, or components");
}

std::vector<Coord> parse_orders(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of coordinate orders");
  std::vector<Coord> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(where, "orders must be integers");
    out.push_back(v.get<Coord>());
  }
  return out;
}

GradedRing::Ptr build_ring(const json& j, const GradingGroup& g, Bound b) {
  if (!j.is_object() || !j.contains("kind")) fail("ring", "missing constructor kind");
  std::string kind = j.at("kind").get<std::string>();
  GradingSpec spec = j.contains("grading") ? parse_grading(j.at("grading"), "ring.grading")
                                           : GradingSpec::trivial();
  try {
    if (kind == "modular") return GradedRing::modular(j.at("modulus").get<Coord>(), g, spec, b);
    if (kind == "integers") return GradedRing::integers(g, spec, b);
    if (kind == "product")
      return GradedRing::product(parse_orders(j.at("orders"), "ring.orders"), g, spec, b);
    if (kind == "group_algebra") return GradedRing::group_algebra(j.at("base").get<Coord>(), g, b);
    if (kind == "table") {
      std::vector<Coord> orders = parse_orders(j.at("orders"), "ring.orders");
      Elem one = parse_coords(j.at("one"), "ring.one");
      std::vector<std::vector<Elem>> products;
      for (std::size_t i = 0; i < j.at("products").size(); ++i)
        products.push_back(parse_elem_list(j.at("products")[i],
                                           "ring.products[" + std::to_string(i) + "]"));
      return GradedRing::structure_table(std::move(orders), std::move(one), std::move(products),
                                         g, spec, b);
    }
  } catch (const json::exception& e) {
    fail("ring", e.what());
  } catch (const structural_error& e) {
    fail("ring", e.what());
  }
  fail("ring.kind", "unsupported constructor \"" + kind + "\"");
}

GradedModule::Ptr build_module(const json& j, GradedRing::Ptr ring) {
  if (!j.is_object() || !j.contains("kind")) fail("module", "missing constructor kind");
  std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "ring_as_module") return GradedModule::ring_as_module(std::move(ring));
    if (kind == "cyclic_product") {
      std::vector<Coord> orders = parse_orders(j.at("orders"), "module.orders");
      GradingSpec spec =
          j.contains("component_assignment")
              ? parse_grading(j.at("component_assignment"), "module.component_assignment")
          : j.contains("grading") ? parse_grading(j.at("grading"), "module.grading")
                                  : GradingSpec::trivial();
      return GradedModule::cyclic_product(std::move(ring), std::move(orders), spec);
    }
    if (kind == "table") {
      std::vector<Coord> orders = parse_orders(j.at("orders"), "module.orders");
      std::vector<std::vector<Elem>> action;
      for (std::size_t i = 0; i < j.at("action").size(); ++i)
        action.push_back(
            parse_elem_list(j.at("action")[i], "module.action[" + std::to_string(i) + "]"));
      GradingSpec spec = j.contains("grading") ? parse_grading(j.at("grading"), "module.grading")
                                               : GradingSpec::trivial();
      return GradedModule::action_table(std::move(ring), std::move(orders), std::move(action),
                                        spec);
    }
  } catch (const json::exception& e) {
    fail("module", e.what());
  } catch (const structural_error& e) {
    fail("module", e.what());
  }
  fail("module.kind", "unsupported constructor \"" + kind + "\"");
}

}  // namespace

const GradedSubmodule* SpecFile::submodule(const std::string& name) const {
  for (const auto& [n, s] : submodules)
    if (n == name) return &s;
  return nullptr;
}

const MultiplicativeSet* SpecFile::mult_set(const std::string& name) const {
  for (const auto& [n, s] : mult_sets)
    if (n == name) return &s;
  return nullptr;
}

SpecFile parse_spec(const std::string& text, std::optional<int> bound_override) {
  json j;
  try {
    j = json::parse(text, nullptr, true, true);  // allow comments
  } catch (const json::parse_error& e) {
    fail("", std::string("syntax error: ") + e.what());
  }
  if (!j.is_object()) fail("", "top level must be an object");

  SpecFile f;
  int bound = j.value("bound", 10);
  if (bound_override) bound = *bound_override;
  if (bound < 1 || bound > 100000) fail("bound", "bound must be in [1, 100000]");
  f.bound = Bound(bound);

  try {
    f.group = GradingGroup(parse_orders(j.at("grading_group"), "grading_group"));
  } catch (const json::exception& e) {
    fail("grading_group", e.what());
  } catch (const structural_error& e) {
    fail("grading_group", e.what());
  }

  if (!j.contains("ring")) fail("ring", "missing");
  f.ring = build_ring(j.at("ring"), f.group, f.bound);
  if (!j.contains("module")) fail("module", "missing");
  f.module = build_module(j.at("module"), f.ring);

  f.ring_validation = validate_graded_ring(*f.ring);
  if (f.ring_validation.verdict == Verdict::fails)
    fail("ring", "grading/ring axioms violated (reason: " +
                     (f.ring_validation.reason.empty() ? "axiom" : f.ring_validation.reason) +
                     ")");
  f.module_validation = validate_graded_module(*f.module);
  if (f.module_validation.verdict == Verdict::fails)
    fail("module", "grading/action axioms violated (reason: " +
                       (f.module_validation.reason.empty() ? "axiom"
                                                           : f.module_validation.reason) +
                       ")");

  if (j.contains("submodules")) {
    if (!j.at("submodules").is_object()) fail("submodules", "expected name -> definition map");
    for (const auto& [name, def] : j.at("submodules").items()) {
      std::string where = "submodules." + name;
      try {
        if (def.is_string() && def.get<std::string>() == "zero") {
          f.submodules.emplace_back(name, GradedSubmodule::zero(f.module));
        } else if (def.is_object() && def.contains("elements")) {
          f.submodules.emplace_back(
              name, GradedSubmodule::from_elements(
                        f.module, parse_elem_list(def.at("elements"), where + ".elements")));
        } else if (def.is_object() && def.contains("generators")) {
          f.submodules.emplace_back(
              name, generate_submodule(
                        f.module, parse_elem_list(def.at("generators"), where + ".generators")));
        } else {
          fail(where, "expected \"zero\", {elements: ...} or {generators: ...}");
        }
      } catch (const structural_error& e) {
        fail(where, e.what());
      } catch (const std::invalid_argument& e) {
        fail(where, e.what());
      }
    }
  }

  if (j.contains("mult_sets")) {
    if (!j.at("mult_sets").is_object()) fail("mult_sets", "expected name -> definition map");
    for (const auto& [name, def] : j.at("mult_sets").items()) {
      std::string where = "mult_sets." + name;
      try {
        if (def.is_object() && def.contains("kind")) {
          std::string kind = def.at("kind").get<std::string>();
          if (kind == "units")
            f.mult_sets.emplace_back(name, MultiplicativeSet::units(f.ring));
          else if (kind == "nonzero_integers")
            f.mult_sets.emplace_back(name, MultiplicativeSet::nonzero_integers(f.ring));
          else
            fail(where + ".kind", "unsupported constructor \"" + kind + "\"");
        } else if (def.is_object() && def.contains("generators")) {
          f.mult_sets.emplace_back(
              name, MultiplicativeSet::closure(
                        f.ring, parse_elem_list(def.at("generators"), where + ".generators")));
        } else {
          fail(where, "expected {kind: ...} or {generators: ...}");
        }
      } catch (const structural_error& e) {
        fail(where, e.what());
      } catch (const std::invalid_argument& e) {
        fail(where, e.what());
      }
    }
  }

  return f;
}

SpecFile parse_spec_file(const std::string& path, std::optional<int> bound_override) {
  std::ifstream in(path);
  if (!in) throw spec_error(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), bound_override);
}

Elem parse_element(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') s += c;
  Elem e;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      e.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw spec_error("element", "cannot parse coordinate \"" + part + "\"");
    }
  }
  if (e.empty()) throw spec_error("element", "empty element literal");
  return e;
}

}  // namespace gabs
