#include "btms/suite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "btms/format.hpp"

#include "json.hpp"

namespace btms {

const char* to_string(Sense s) {
  return s == Sense::minimize ? "minimize" : "maximize";
}

const char* to_string(SuiteMode m) {
  return m == SuiteMode::edited ? "edited" : "strict";
}

ConstraintSpec ConstraintSpec::on_poly(std::string label, Polynomial p,
                                       double lower, double upper) {
  ConstraintSpec c;
  c.label = std::move(label);
  c.expr = std::move(p);
  c.lower = lower;
  c.upper = upper;
  return c;
}

ConstraintSpec ConstraintSpec::on_objective(std::string label, std::size_t index,
                                            double lower, double upper) {
  ConstraintSpec c;
  c.label = std::move(label);
  c.objective_index = index;
  c.lower = lower;
  c.upper = upper;
  return c;
}

std::vector<std::string> ProblemDescriptor::variable_names() const {
  std::vector<std::string> names;
  names.reserve(variables.size());
  for (const auto& v : variables) names.push_back(v.symbol);
  return names;
}

void ProblemDescriptor::validate() const {
  if (id.empty()) throw ValidationError("problem id is empty");
  if (variables.empty()) throw ValidationError(id + ": no variables");
  if (objectives.empty()) throw ValidationError(id + ": no objectives");
  for (const auto& v : variables) {
    if (v.symbol.empty()) throw ValidationError(id + ": variable without symbol");
    if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) {
      throw ValidationError(id + ": bounds of " + v.symbol + " must be finite");
    }
    if (!(v.lower < v.upper)) {
      throw ValidationError(id + ": bounds of " + v.symbol + " are inverted");
    }
  }
  for (const auto& o : objectives) {
    if (o.body.var_count() != var_count()) {
      throw ValidationError(id + ": objective " + o.name + " has dimension " +
                            std::to_string(o.body.var_count()) + ", expected " +
                            std::to_string(var_count()));
    }
  }
  for (const auto& c : constraints) {
    if (c.expr.has_value() == c.objective_index.has_value()) {
      throw ValidationError(id + ": constraint " + c.label +
                            " must reference exactly one of poly/objective");
    }
    if (c.expr && c.expr->var_count() != var_count()) {
      throw ValidationError(id + ": constraint " + c.label + " has dimension " +
                            std::to_string(c.expr->var_count()));
    }
    if (c.objective_index && *c.objective_index >= objectives.size()) {
      throw ValidationError(id + ": constraint " + c.label +
                            " references objective " +
                            std::to_string(*c.objective_index));
    }
    if (c.lower == -kInf && c.upper == kInf) {
      throw ValidationError(id + ": constraint " + c.label + " has no finite bound");
    }
    if (!(c.lower <= c.upper)) {
      throw ValidationError(id + ": constraint " + c.label + " bounds inverted");
    }
  }
}

const ProblemDescriptor& find_problem(const std::vector<ProblemDescriptor>& suite,
                                      const std::string& id) {
  for (const auto& p : suite) {
    if (p.id == id) return p;
  }
  throw ValidationError("unknown problem id: " + id);
}

EvaluationResult evaluate(const ProblemDescriptor& p, std::span<const double> x) {
  if (x.size() != p.var_count()) {
    throw ValidationError(p.id + ": point has dimension " +
                          std::to_string(x.size()) + ", expected " +
                          std::to_string(p.var_count()));
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!std::isfinite(x[j])) {
      throw ValidationError(p.id + ": non-finite component " + std::to_string(j));
    }
    if (x[j] < p.variables[j].lower || x[j] > p.variables[j].upper) {
      throw ValidationError(p.id + ": component " + p.variables[j].symbol + " = " +
                            g17(x[j]) + " outside [" + g17(p.variables[j].lower) +
                            ", " + g17(p.variables[j].upper) + "]");
    }
  }

  EvaluationResult r;
  r.x.assign(x.begin(), x.end());
  r.f.reserve(p.objectives.size());
  for (const auto& o : p.objectives) r.f.push_back(o.body.eval(x));

  r.constraint_values.reserve(p.constraints.size());
  r.violations.reserve(p.constraints.size());
  for (const auto& c : p.constraints) {
    double v = c.expr ? c.expr->eval(x) : r.f[*c.objective_index];
    double viol = std::max(0.0, std::max(c.lower - v, v - c.upper));
    r.constraint_values.push_back(v);
    r.violations.push_back(viol);
    r.cv += viol;
  }
  r.feasible = r.cv == 0.0;
  return r;
}

std::vector<double> repair_to_box(const ProblemDescriptor& p,
                                  std::span<const double> x) {
  if (x.size() != p.var_count()) {
    throw ValidationError(p.id + ": repair_to_box dimension mismatch");
  }
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = std::clamp(out[j], p.variables[j].lower, p.variables[j].upper);
  }
  return out;
}

std::vector<double> random_point(const ProblemDescriptor& p, Rng& rng) {
  std::vector<double> x(p.var_count());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = rng.uniform(p.variables[j].lower, p.variables[j].upper);
  }
  return x;
}

// ---------------------------------------------------------------- JSON

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string export_problem(const ProblemDescriptor& p) {
  const auto names = p.variable_names();
  std::ostringstream os;
  os << "{\n";
  os << "  \"id\": \"" << json_escape(p.id) << "\",\n";
  os << "  \"title\": \"" << json_escape(p.title) << "\",\n";
  os << "  \"citation\": \"" << json_escape(p.citation) << "\",\n";
  os << "  \"variables\": [\n";
  for (std::size_t i = 0; i < p.variables.size(); ++i) {
    const auto& v = p.variables[i];
    os << "    {\"symbol\": \"" << json_escape(v.symbol) << "\", \"units\": \""
       << json_escape(v.units) << "\", \"lower\": " << g17(v.lower)
       << ", \"upper\": " << g17(v.upper) << "}"
       << (i + 1 < p.variables.size() ? "," : "") << "\n";
  }
  os << "  ],\n";
  os << "  \"objectives\": [\n";
  for (std::size_t i = 0; i < p.objectives.size(); ++i) {
    const auto& o = p.objectives[i];
    os << "    {\"name\": \"" << json_escape(o.name) << "\", \"units\": \""
       << json_escape(o.units) << "\", \"printed_sense\": \""
       << to_string(o.printed_sense) << "\", \"poly\": \""
       << json_escape(to_string(o.body, names)) << "\"}"
       << (i + 1 < p.objectives.size() ? "," : "") << "\n";
  }
  os << "  ],\n";
  os << "  \"constraints\": [";
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& c = p.constraints[i];
    os << (i == 0 ? "\n" : "") << "    {\"label\": \"" << json_escape(c.label)
       << "\", ";
    if (c.expr) {
      os << "\"poly\": \"" << json_escape(to_string(*c.expr, names)) << "\"";
    } else {
      os << "\"objective_index\": " << *c.objective_index;
    }
    if (c.lower != -kInf) os << ", \"lower\": " << g17(c.lower);
    if (c.upper != kInf) os << ", \"upper\": " << g17(c.upper);
    os << "}" << (i + 1 < p.constraints.size() ? "," : "") << "\n";
  }
  os << (p.constraints.empty() ? "]\n" : "  ]\n");
  os << "}\n";
  return os.str();
}

namespace {

using nlohmann::json;

void require_keys(const json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional,
                  const std::string& where) {
  for (const char* k : required) {
    if (!j.contains(k)) {
      throw ValidationError(where + ": missing key \"" + k + "\"");
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : required) known = known || it.key() == k;
    for (const char* k : optional) known = known || it.key() == k;
    if (!known) {
      throw ValidationError(where + ": unknown key \"" + it.key() + "\"");
    }
  }
}

double number_at(const json& j, const char* key, const std::string& where) {
  if (!j.at(key).is_number()) {
    throw ValidationError(where + ": \"" + key + "\" must be a number");
  }
  return j.at(key).get<double>();
}

}  // namespace

ProblemDescriptor import_problem(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("problem JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("problem JSON: not an object");
  require_keys(j, {"id", "variables", "objectives", "constraints"},
               {"title", "citation"}, "problem JSON");

  ProblemDescriptor p;
  p.id = j.at("id").get<std::string>();
  p.title = j.value("title", "");
  p.citation = j.value("citation", "");

  if (!j.at("variables").is_array() || j.at("variables").empty()) {
    throw ValidationError("problem JSON: \"variables\" must be a nonempty array");
  }
  for (const auto& jv : j.at("variables")) {
    require_keys(jv, {"symbol", "lower", "upper"}, {"units", "description"},
                 "variable");
    VariableSpec v;
    v.symbol = jv.at("symbol").get<std::string>();
    v.description = jv.value("description", "");
    v.units = jv.value("units", "");
    v.lower = number_at(jv, "lower", "variable " + v.symbol);
    v.upper = number_at(jv, "upper", "variable " + v.symbol);
    p.variables.push_back(std::move(v));
  }
  const auto names = p.variable_names();

  if (!j.at("objectives").is_array() || j.at("objectives").empty()) {
    throw ValidationError("problem JSON: \"objectives\" must be a nonempty array");
  }
  for (const auto& jo : j.at("objectives")) {
    require_keys(jo, {"name", "poly"}, {"units", "printed_sense", "description"},
                 "objective");
    ObjectiveSpec o;
    o.name = jo.at("name").get<std::string>();
    o.description = jo.value("description", "");
    o.units = jo.value("units", "");
    std::string sense = jo.value("printed_sense", "minimize");
    if (sense != "minimize" && sense != "maximize") {
      throw ValidationError("objective " + o.name + ": bad printed_sense \"" +
                            sense + "\"");
    }
    o.printed_sense = sense == "minimize" ? Sense::minimize : Sense::maximize;
    o.body = parse_polynomial(jo.at("poly").get<std::string>(), names);
    p.objectives.push_back(std::move(o));
  }

  if (!j.at("constraints").is_array()) {
    throw ValidationError("problem JSON: \"constraints\" must be an array");
  }
  for (const auto& jc : j.at("constraints")) {
    require_keys(jc, {"label"}, {"poly", "objective_index", "lower", "upper"},
                 "constraint");
    ConstraintSpec c;
    c.label = jc.at("label").get<std::string>();
    if (jc.contains("poly")) {
      c.expr = parse_polynomial(jc.at("poly").get<std::string>(), names);
    }
    if (jc.contains("objective_index")) {
      c.objective_index = jc.at("objective_index").get<std::size_t>();
    }
    if (jc.contains("lower")) c.lower = number_at(jc, "lower", c.label);
    if (jc.contains("upper")) c.upper = number_at(jc, "upper", c.label);
    p.constraints.push_back(std::move(c));
  }

  p.validate();
  return p;
}

ProblemDescriptor apply_sense_overrides(
    const ProblemDescriptor& p, const std::map<std::string, Sense>& overrides) {
  ProblemDescriptor out = p;
  for (const auto& [name, sense] : overrides) {
    auto it = std::find_if(out.objectives.begin(), out.objectives.end(),
                           [&](const ObjectiveSpec& o) { return o.name == name; });
    if (it == out.objectives.end()) {
      throw ValidationError(p.id + ": sense override for unknown objective \"" +
                            name + "\"");
    }
    if (sense == Sense::minimize) continue;  // stored bodies already minimize
    it->body = it->body.scaled(-1.0);
    std::size_t idx = static_cast<std::size_t>(it - out.objectives.begin());
    for (auto& c : out.constraints) {
      if (c.objective_index && *c.objective_index == idx) {
        double lo = c.lower, hi = c.upper;
        c.lower = hi == kInf ? -kInf : -hi;
        c.upper = lo == -kInf ? kInf : -lo;
      }
    }
  }
  return out;
}

}  // namespace btms
