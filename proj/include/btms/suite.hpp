#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "btms/polynomial.hpp"
#include "btms/rng.hpp"

namespace btms {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { minimize, maximize };

// How to read the one anomalous term in BTMS-9 f3 (see suite_data.cpp):
// edited keeps it on x3, strict_paper drops it.
enum class SuiteMode { edited, strict_paper };

const char* to_string(Sense s);
const char* to_string(SuiteMode m);

struct VariableSpec {
  std::string symbol;
  std::string description;
  std::string units;
  double lower = 0.0;
  double upper = 0.0;
};

// Stored bodies are always minimization targets; printed_sense records how the
// source publication stated the objective.
struct ObjectiveSpec {
  std::string name;
  std::string description;
  std::string units;
  Sense printed_sense = Sense::minimize;
  Polynomial body;
};

// expr <= upper and expr >= lower, either bound may be infinite (not both).
// The expression is its own polynomial or a reference to an objective.
struct ConstraintSpec {
  std::string label;
  std::optional<Polynomial> expr;
  std::optional<std::size_t> objective_index;
  double lower = -kInf;
  double upper = kInf;

  static ConstraintSpec on_poly(std::string label, Polynomial p, double lower,
                                double upper);
  static ConstraintSpec on_objective(std::string label, std::size_t index,
                                     double lower, double upper);
};

struct ProblemDescriptor {
  std::string id;
  std::string title;
  std::string citation;
  std::vector<VariableSpec> variables;
  std::vector<ObjectiveSpec> objectives;
  std::vector<ConstraintSpec> constraints;

  std::size_t var_count() const { return variables.size(); }
  std::size_t objective_count() const { return objectives.size(); }
  std::vector<std::string> variable_names() const;

  void validate() const;  // throws ValidationError on any broken invariant
};

struct EvaluationResult {
  std::vector<double> x;
  std::vector<double> f;                  // minimization orientation
  std::vector<double> constraint_values;  // raw expression values
  std::vector<double> violations;         // >= 0, one per constraint
  double cv = 0.0;                        // sum of violations
  bool feasible = true;                   // cv == 0
};

// The twelve problems, ids BTMS-1 .. BTMS-12.
std::vector<ProblemDescriptor> build_suite(SuiteMode mode = SuiteMode::edited);

const ProblemDescriptor& find_problem(const std::vector<ProblemDescriptor>& suite,
                                      const std::string& id);

// Pure. x must be inside the box; box bounds are hard, never part of cv.
EvaluationResult evaluate(const ProblemDescriptor& p, std::span<const double> x);

std::vector<double> repair_to_box(const ProblemDescriptor& p,
                                  std::span<const double> x);

// Uniform over the box; deterministic given the generator state.
std::vector<double> random_point(const ProblemDescriptor& p, Rng& rng);

// Problem JSON; numbers carry 17 significant digits, infinite constraint
// bounds are omitted. import(export(p)) evaluates identically to p.
std::string export_problem(const ProblemDescriptor& p);
ProblemDescriptor import_problem(const std::string& json_text);

// Flips the stored minimization body of the named objectives so that a
// "maximize" override optimizes the negated quantity; range constraints that
// reference a flipped objective get their bounds mirrored, preserving cv.
ProblemDescriptor apply_sense_overrides(
    const ProblemDescriptor& p, const std::map<std::string, Sense>& overrides);

}  // namespace btms
