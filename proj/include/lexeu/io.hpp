#pragma once

#include "lexeu/feasibility.hpp"
#include "lexeu/lottery.hpp"
#include "lexeu/table.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace lexeu {

using Json = nlohmann::ordered_json;

/// Parse JSON text; syntax errors become ParseError with "source:line:column".
Json parse_json_text(std::string_view text, const std::string& source = "<input>");
/// Read and parse a file; ParseError when it cannot be opened.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Sorted array of state labels.
Json event_to_json(const Event& e);
/// Array of labels; throws ParseError naming unknown states.
Event event_from_json(const Json& j, const StateSpacePtr& space);
/// Comma-joined labels in state order; "" for ∅.
std::string event_key(const Event& e);
/// Inverse of event_key; whitespace around labels is ignored and order is free.
Event event_from_key(std::string_view key, const StateSpacePtr& space);
/// "s1,s3" or "s1 s3" style command-line event lists; "" and "{}" are ∅.
Event event_from_arg(std::string_view text, const StateSpacePtr& space);

/// {"states":[...], "outcomes":[...], "levels":[{"support", "prob", "utility"}]}.
Json model_to_json(const GsleuModel& m);
/// Schema and rational checks with JSON-path context; does not validate invariants.
GsleuModel model_from_json(const Json& j);
/// Parse and require_valid().
GsleuModel parse_model(const std::string& path);

struct NamedAct {
    std::string name;
    Act act;
};

/// {"name": "f", "map": {"s1": "b", ...}}.
Json act_to_json(const std::string& name, const Act& f);
/// Every state required; throws ParseError naming missing or unknown states and outcomes.
NamedAct act_from_json(const Json& j, const StateSpacePtr& space, const OutcomeSpacePtr& outcomes);
NamedAct parse_act(const std::string& path, const StateSpacePtr& space, const OutcomeSpacePtr& outcomes);

/// {"a": "1/2", "b": "1/2"} over the support.
Json lottery_to_json(const Lottery& l);
Lottery lottery_from_json(const Json& j, const OutcomeSpacePtr& outcomes);

/**
 * {"states", "outcomes", "acts": [act objects], "prefs": {"<event>": [[names], ...]},
 * "unconditional": [[names], ...]}. "states", "outcomes" and "unconditional" are optional
 * on input; the ∅ entry may be "degenerate".
 */
Json table_to_json(const PreferenceTable& t);
PreferenceTable table_from_json(const Json& j);
PreferenceTable parse_table(const std::string& path);

/// Debug form of a linear system.
Json system_to_json(const ConstraintSystem& sys);

}  // namespace lexeu
