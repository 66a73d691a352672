#include "lexeu/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace lexeu {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(begin, end - begin + 1));
}

const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) {
        throw ParseError(path + ": expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(path + ": missing \"" + key + "\"");
    }
    return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& path) {
    if (!j.is_array()) {
        throw ParseError(path + ": expected an array of strings");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) {
            throw ParseError(path + "[" + std::to_string(i) + "]: expected a string");
        }
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

Rational rational_from_json(const Json& j, const std::string& path) {
    try {
        if (j.is_string()) {
            return parse_rational(trim(j.get<std::string>()));
        }
        if (j.is_number_integer()) {
            return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
        }
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
    throw ParseError(path + ": expected a rational string \"p/q\" or an integer");
}

std::size_t state_index(const StateSpacePtr& space, const std::string& label, const std::string& path) {
    auto idx = space->index_of(label);
    if (!idx) {
        throw ParseError(path + ": unknown state \"" + label + "\"");
    }
    return *idx;
}

std::size_t outcome_index(const OutcomeSpacePtr& outcomes, const std::string& label, const std::string& path) {
    auto idx = outcomes->index_of(label);
    if (!idx) {
        throw ParseError(path + ": unknown outcome \"" + label + "\"");
    }
    return *idx;
}

Json tiers_to_json(const TierArray& tiers, const std::vector<std::string>& names) {
    std::uint32_t top = 0;
    for (auto t : tiers) {
        top = std::max(top, t);
    }
    Json out = Json::array();
    std::vector<Json> groups(std::size_t{top} + 1, Json::array());
    for (std::size_t f = 0; f < tiers.size(); ++f) {
        groups[tiers[f]].push_back(names[f]);
    }
    for (auto& g : groups) {
        out.push_back(std::move(g));
    }
    return out;
}

TierArray tiers_from_json(const Json& j, const std::map<std::string, std::uint64_t>& codes, std::size_t acts,
                          const std::string& path) {
    TierArray tiers(acts, 0);
    if (j.is_string()) {
        if (j.get<std::string>() != "degenerate") {
            throw ParseError(path + ": expected a tier list or \"degenerate\"");
        }
        return tiers;
    }
    if (!j.is_array()) {
        throw ParseError(path + ": expected a tier list");
    }
    std::vector<bool> seen(acts, false);
    std::uint32_t tier = 0;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const auto names = string_list(j[t], path + "[" + std::to_string(t) + "]");
        if (names.empty()) {
            continue;
        }
        for (const auto& name : names) {
            auto it = codes.find(name);
            if (it == codes.end()) {
                throw ParseError(path + ": unknown act \"" + name + "\"");
            }
            if (seen[it->second]) {
                throw IncompleteTable(path + ": act \"" + name + "\" ranked twice");
            }
            seen[it->second] = true;
            tiers[it->second] = tier;
        }
        ++tier;
    }
    for (std::size_t f = 0; f < acts; ++f) {
        if (!seen[f]) {
            throw IncompleteTable(path + ": act code " + std::to_string(f) + " is not ranked");
        }
    }
    return tiers;
}

}  // namespace

Json parse_json_text(std::string_view text, const std::string& source) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        const auto pos = what.find("syntax error");
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                         (pos == std::string::npos ? what : what.substr(pos)));
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError(path + ": cannot write file");
    }
    out << text;
}

Json event_to_json(const Event& e) {
    Json out = Json::array();
    for (const auto& label : e.labels()) {
        out.push_back(label);
    }
    return out;
}

Event event_from_json(const Json& j, const StateSpacePtr& space) {
    Mask mask = 0;
    for (const auto& label : string_list(j, "event")) {
        mask |= Mask{1} << state_index(space, label, "event");
    }
    return Event(space, mask);
}

std::string event_key(const Event& e) {
    std::string out;
    for (const auto& label : e.labels()) {
        out += (out.empty() ? "" : ",") + label;
    }
    return out;
}

Event event_from_key(std::string_view key, const StateSpacePtr& space) {
    Mask mask = 0;
    std::size_t start = 0;
    while (start <= key.size()) {
        auto comma = key.find(',', start);
        if (comma == std::string_view::npos) {
            comma = key.size();
        }
        const auto label = trim(key.substr(start, comma - start));
        if (!label.empty()) {
            mask |= Mask{1} << state_index(space, label, "event \"" + std::string(key) + "\"");
        } else if (comma != key.size() || start != 0) {
            throw ParseError("event \"" + std::string(key) + "\": empty state label");
        }
        start = comma + 1;
    }
    return Event(space, mask);
}

Event event_from_arg(std::string_view text, const StateSpacePtr& space) {
    std::string s = trim(text);
    if (!s.empty() && s.front() == '{' && s.back() == '}') {
        s = s.substr(1, s.size() - 2);
    }
    for (auto& c : s) {
        if (c == ' ' || c == '\t') {
            c = ',';
        }
    }
    Mask mask = 0;
    std::stringstream in(s);
    std::string label;
    while (std::getline(in, label, ',')) {
        label = trim(label);
        if (!label.empty()) {
            mask |= Mask{1} << state_index(space, label, "event \"" + std::string(text) + "\"");
        }
    }
    return Event(space, mask);
}

Json model_to_json(const GsleuModel& m) {
    Json out;
    out["states"] = m.space()->labels();
    out["outcomes"] = m.outcomes()->labels();
    out["levels"] = Json::array();
    for (const auto& level : m.levels()) {
        Json lj;
        lj["support"] = event_to_json(level.support);
        Json prob = Json::object();
        for (auto s : level.support.members()) {
            prob[m.space()->label(s)] = format_rational(level.prob[s]);
        }
        lj["prob"] = std::move(prob);
        Json utility = Json::object();
        for (std::size_t o = 0; o < m.outcomes()->size(); ++o) {
            utility[m.outcomes()->label(o)] = format_rational(level.utility[o]);
        }
        lj["utility"] = std::move(utility);
        out["levels"].push_back(std::move(lj));
    }
    return out;
}

GsleuModel model_from_json(const Json& j) {
    auto space = make_state_space(string_list(member(j, "states", "model"), "states"));
    auto outcomes = make_outcome_space(string_list(member(j, "outcomes", "model"), "outcomes"));
    const auto& lj = member(j, "levels", "model");
    if (!lj.is_array()) {
        throw ParseError("levels: expected an array");
    }
    std::vector<Level> levels;
    for (std::size_t k = 0; k < lj.size(); ++k) {
        const std::string path = "levels[" + std::to_string(k) + "]";
        Mask support = 0;
        for (const auto& label : string_list(member(lj[k], "support", path), path + ".support")) {
            support |= Mask{1} << state_index(space, label, path + ".support");
        }
        Level level{Event(space, support), std::vector<Rational>(space->size()),
                    std::vector<Rational>(outcomes->size())};
        const auto& prob = member(lj[k], "prob", path);
        if (!prob.is_object()) {
            throw ParseError(path + ".prob: expected an object");
        }
        for (const auto& [label, value] : prob.items()) {
            level.prob[state_index(space, label, path + ".prob")] = rational_from_json(value, path + ".prob." + label);
        }
        for (auto s : level.support.members()) {
            if (!prob.contains(space->label(s))) {
                throw ParseError(path + ".prob: missing state \"" + space->label(s) + "\"");
            }
        }
        const auto& utility = member(lj[k], "utility", path);
        if (!utility.is_object()) {
            throw ParseError(path + ".utility: expected an object");
        }
        for (const auto& [label, value] : utility.items()) {
            level.utility[outcome_index(outcomes, label, path + ".utility")] =
                rational_from_json(value, path + ".utility." + label);
        }
        for (const auto& label : outcomes->labels()) {
            if (!utility.contains(label)) {
                throw ParseError(path + ".utility: missing outcome \"" + label + "\"");
            }
        }
        levels.push_back(std::move(level));
    }
    return GsleuModel(space, outcomes, std::move(levels));
}

GsleuModel parse_model(const std::string& path) {
    GsleuModel m = [&] {
        try {
            return model_from_json(read_json_file(path));
        } catch (const ParseError& e) {
            const std::string what = e.what();
            if (what.rfind(path, 0) == 0) {
                throw;
            }
            throw ParseError(path + ": " + what);
        }
    }();
    require_valid(m);
    return m;
}

Json act_to_json(const std::string& name, const Act& f) {
    Json out;
    out["name"] = name;
    Json map = Json::object();
    for (std::size_t s = 0; s < f.space()->size(); ++s) {
        map[f.space()->label(s)] = f.outcome_label(s);
    }
    out["map"] = std::move(map);
    return out;
}

NamedAct act_from_json(const Json& j, const StateSpacePtr& space, const OutcomeSpacePtr& outcomes) {
    std::string name = "f";
    if (j.is_object() && j.contains("name")) {
        if (!j["name"].is_string()) {
            throw ParseError("act: \"name\" must be a string");
        }
        name = j["name"].get<std::string>();
    }
    const std::string path = "act " + name;
    const auto& map = member(j, "map", path);
    if (!map.is_object()) {
        throw ParseError(path + ".map: expected an object");
    }
    std::vector<std::uint32_t> assignment(space->size(), 0);
    std::vector<bool> seen(space->size(), false);
    for (const auto& [label, value] : map.items()) {
        const auto s = state_index(space, label, path + ".map");
        if (!value.is_string()) {
            throw ParseError(path + ".map." + label + ": expected an outcome label");
        }
        assignment[s] = static_cast<std::uint32_t>(outcome_index(outcomes, value.get<std::string>(), path + ".map." + label));
        seen[s] = true;
    }
    for (std::size_t s = 0; s < space->size(); ++s) {
        if (!seen[s]) {
            throw ParseError(path + ".map: missing state \"" + space->label(s) + "\"");
        }
    }
    return {name, Act(space, outcomes, std::move(assignment))};
}

NamedAct parse_act(const std::string& path, const StateSpacePtr& space, const OutcomeSpacePtr& outcomes) {
    try {
        return act_from_json(read_json_file(path), space, outcomes);
    } catch (const ParseError& e) {
        const std::string what = e.what();
        if (what.rfind(path, 0) == 0) {
            throw;
        }
        throw ParseError(path + ": " + what);
    }
}

Json lottery_to_json(const Lottery& l) {
    Json out = Json::object();
    for (const auto& [o, w] : l.support()) {
        out[l.outcomes()->label(o)] = format_rational(w);
    }
    return out;
}

Lottery lottery_from_json(const Json& j, const OutcomeSpacePtr& outcomes) {
    if (!j.is_object()) {
        throw ParseError("lottery: expected an object of outcome weights");
    }
    std::vector<std::pair<std::size_t, Rational>> raw;
    for (const auto& [label, value] : j.items()) {
        raw.emplace_back(outcome_index(outcomes, label, "lottery"), rational_from_json(value, "lottery." + label));
    }
    return normalize_lottery(outcomes, raw);
}

Json table_to_json(const PreferenceTable& t) {
    Json out;
    out["states"] = t.space()->labels();
    out["outcomes"] = t.outcomes()->labels();
    out["acts"] = Json::array();
    for (std::uint64_t f = 0; f < t.act_count(); ++f) {
        out["acts"].push_back(act_to_json(t.act_names()[f], t.act(f)));
    }
    Json prefs = Json::object();
    for (Mask a = 0; a < t.event_count(); ++a) {
        const auto key = event_key(Event(t.space(), a));
        if (a == 0) {
            prefs[key] = "degenerate";
        } else {
            prefs[key] = tiers_to_json(t.tiers(a), t.act_names());
        }
    }
    out["prefs"] = std::move(prefs);
    if (t.unconditional()) {
        out["unconditional"] = tiers_to_json(*t.unconditional(), t.act_names());
    }
    return out;
}

PreferenceTable table_from_json(const Json& j) {
    const auto& acts = member(j, "acts", "table");
    if (!acts.is_array() || acts.empty()) {
        throw ParseError("table.acts: expected a nonempty array of acts");
    }
    std::vector<std::string> states;
    if (j.contains("states")) {
        states = string_list(j["states"], "table.states");
    } else {
        for (const auto& [label, value] : member(acts[0], "map", "table.acts[0]").items()) {
            (void)value;
            states.push_back(label);
        }
    }
    std::vector<std::string> outcome_labels;
    if (j.contains("outcomes")) {
        outcome_labels = string_list(j["outcomes"], "table.outcomes");
    } else {
        std::set<std::string> seen;
        for (std::size_t i = 0; i < acts.size(); ++i) {
            const auto& map = member(acts[i], "map", "table.acts[" + std::to_string(i) + "]");
            for (const auto& label : states) {
                if (map.contains(label) && map[label].is_string() && seen.insert(map[label].get<std::string>()).second) {
                    outcome_labels.push_back(map[label].get<std::string>());
                }
            }
        }
    }
    auto space = make_state_space(std::move(states));
    auto outcomes = make_outcome_space(std::move(outcome_labels));
    const auto total = act_count(space->size(), outcomes->size());
    if (space->size() >= 63 || acts.size() != total) {
        throw IncompleteTable("table lists " + std::to_string(acts.size()) + " acts; the full act set has " +
                              std::to_string(total));
    }
    std::vector<std::string> names(total);
    std::vector<bool> filled(total, false);
    std::map<std::string, std::uint64_t> codes;
    for (const auto& aj : acts) {
        auto named = act_from_json(aj, space, outcomes);
        const auto code = named.act.code();
        if (filled[code]) {
            throw IncompleteTable("act " + named.act.to_string() + " is listed twice");
        }
        if (!codes.emplace(named.name, code).second) {
            throw ParseError("table.acts: duplicate act name \"" + named.name + "\"");
        }
        filled[code] = true;
        names[code] = named.name;
    }
    const auto& prefs = member(j, "prefs", "table");
    if (!prefs.is_object()) {
        throw ParseError("table.prefs: expected an object");
    }
    const std::size_t events = std::size_t{1} << space->size();
    std::vector<TierArray> tiers(events);
    std::vector<bool> present(events, false);
    for (const auto& [key, value] : prefs.items()) {
        const auto e = event_from_key(key, space);
        if (present[e.mask()]) {
            throw ParseError("table.prefs: event \"" + key + "\" appears twice");
        }
        present[e.mask()] = true;
        tiers[e.mask()] = tiers_from_json(value, codes, total, "table.prefs[\"" + key + "\"]");
    }
    for (Mask a = 0; a < events; ++a) {
        if (!present[a]) {
            throw IncompleteTable("table.prefs: no entry for event \"" + event_key(Event(space, a)) + "\"");
        }
    }
    std::optional<TierArray> unconditional;
    if (j.contains("unconditional")) {
        unconditional = tiers_from_json(j["unconditional"], codes, total, "table.unconditional");
    }
    return PreferenceTable(space, outcomes, std::move(names), std::move(tiers), std::move(unconditional));
}

PreferenceTable parse_table(const std::string& path) {
    try {
        return table_from_json(read_json_file(path));
    } catch (const ParseError& e) {
        const std::string what = e.what();
        if (what.rfind(path, 0) == 0) {
            throw;
        }
        throw ParseError(path + ": " + what);
    }
}

Json system_to_json(const ConstraintSystem& sys) {
    Json out;
    out["variables"] = sys.variables();
    out["constraints"] = Json::array();
    for (const auto& c : sys.constraints()) {
        Json cj;
        Json coef = Json::object();
        for (const auto& [name, value] : c.coefficients) {
            coef[name] = format_rational(value);
        }
        cj["coefficients"] = std::move(coef);
        cj["relation"] = std::string(symbol(c.relation));
        cj["rhs"] = format_rational(c.rhs);
        if (!c.label.empty()) {
            cj["label"] = c.label;
        }
        out["constraints"].push_back(std::move(cj));
    }
    return out;
}

}  // namespace lexeu
