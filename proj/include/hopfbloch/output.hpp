#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfbloch/gates.hpp"
#include "hopfbloch/hopf.hpp"
#include "hopfbloch/state.hpp"

namespace hopfbloch {

inline constexpr const char* kSchemaVersion = "1";

enum class AssignmentSelection { A, B, both };

std::vector<Assignment> assignments(AssignmentSelection sel);
std::string_view selection_name(AssignmentSelection sel);
/// "A", "B" or "both".
AssignmentSelection parse_selection(std::string_view name);

/// Magnitudes below this are written as 0.
inline constexpr double kOutputZero = 1e-14;

/// Flushes |v| < kOutputZero to 0, rounds to 15 significant digits and folds
/// -0 into 0, so the JSON writer's shortest round-trip form is stable.
double round15(double v);

double degrees(double radians);

/// One OutputRecord: amplitudes, a block per selected assignment, both reduced
/// density matrices, concurrence and the coherence d of each qubit.
nlohmann::ordered_json output_record(const TwoQubitState& s, AssignmentSelection sel);

/// Record of a trajectory step, with its step index and gate annotation.
nlohmann::ordered_json output_record(const TrajectoryStep& step, AssignmentSelection sel);

/// {version, input, records[]}.
nlohmann::ordered_json document(const nlohmann::ordered_json& input, nlohmann::ordered_json records);

/// Document for `map`: `input` describes how the state was given.
nlohmann::ordered_json map_document(const TwoQubitState& s, nlohmann::ordered_json input, AssignmentSelection sel);

/// Document for `run`: the final record, or one record per step.
nlohmann::ordered_json run_document(const Circuit& c, bool all_steps, AssignmentSelection sel);

/// Serialized document, two-space indent, trailing newline.
std::string dump(const nlohmann::ordered_json& doc);

/// Aligned plain-text table of the same quantities.
std::string text_table(const TwoQubitState& s, AssignmentSelection sel);

}  // namespace hopfbloch
