#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lifecycle/howard.hpp"
#include "lifecycle/model.hpp"
#include "lifecycle/staged.hpp"
#include "lifecycle/tree.hpp"
#include "lifecycle/validation.hpp"

namespace lifecycle {

using ProblemModel = std::variant<ControlledMarkovProblem, TreeNode, StagedModel>;

struct LoadedModel {
    ProblemModel model;
    // e.g. annotated sub-stochastic controls in a staged file.
    std::vector<std::string> warnings;
};

// One JSON document format for all three model kinds, selected by the
// top-level "kind" tag ("mdp" | "tree" | "staged"). Models are validated on
// load; ParseError carries the failing field's path.
LoadedModel parse_problem_text(std::string_view text, const std::string& origin);
LoadedModel parse_problem_file(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const ControlledMarkovProblem& problem);
nlohmann::ordered_json to_json(const TreeNode& root);
nlohmann::ordered_json to_json(const StagedModel& model);

// Serializes a model back into the document format (round-trips exactly).
std::string render_problem(const ProblemModel& model);

// Human-readable numbers use fixed precision (3 decimals by default);
// machine output always carries full-precision values.
struct RenderOptions {
    int precision = 3;
};

std::string format_number(double value, const RenderOptions& options);

// "a,b,c" with 1-based action indices, the external policy convention.
std::string format_policy(const PolicyVector& policy);
PolicyVector parse_policy(std::string_view text);  // throws ParseError

std::string render_improvement_table(const ImprovementTable& table, const RenderOptions& options);
std::string render_trace_human(const ControlledMarkovProblem& problem,
                               const IterationTrace& trace,
                               const RenderOptions& options,
                               bool include_tables);
nlohmann::ordered_json trace_to_json(const ControlledMarkovProblem& problem,
                                     const IterationTrace& trace);

std::string render_enumeration_human(const EnumerationResult& result, const RenderOptions& options);
nlohmann::ordered_json enumeration_to_json(const EnumerationResult& result);

std::string render_simulation_human(const ControlledMarkovProblem& problem,
                                    const SimulationReport& report,
                                    const RenderOptions& options);
nlohmann::ordered_json simulation_to_json(const ControlledMarkovProblem& problem,
                                          const SimulationReport& report);

std::string render_rolled_tree_human(const TreeNode& tree, const RolledBackNode& rolled,
                                     const RenderOptions& options);
nlohmann::ordered_json rolled_tree_to_json(const TreeNode& tree, const RolledBackNode& rolled);

std::string render_stage_values_human(const StagedModel& model, const StageValues& values,
                                      double initial_value, const RenderOptions& options);
nlohmann::ordered_json stage_values_to_json(const StagedModel& model, const StageValues& values,
                                            double initial_value);

}  // namespace lifecycle
