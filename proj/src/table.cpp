#include "lexeu/table.hpp"

#include "lexeu/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lexeu {

PreferenceTable::PreferenceTable(StateSpacePtr space, OutcomeSpacePtr outcomes,
                                 std::vector<std::string> act_names, std::vector<TierArray> tiers,
                                 std::optional<TierArray> unconditional)
    : space_(std::move(space)),
      outcomes_(std::move(outcomes)),
      act_names_(std::move(act_names)),
      tiers_(std::move(tiers)),
      unconditional_(std::move(unconditional)) {
    const auto n = space_->size();
    const auto acts = lexeu::act_count(n, outcomes_->size());
    if (n >= 63 || act_names_.size() != acts) {
        throw IncompleteTable("table must list all " + std::to_string(acts) + " acts");
    }
    if (tiers_.size() != (std::size_t{1} << n)) {
        throw IncompleteTable("table must have an entry for every event");
    }
    auto check_dense = [&](const TierArray& t, const std::string& where) {
        if (t.size() != acts) {
            throw IncompleteTable("entry " + where + " does not rank every act");
        }
        std::uint32_t top = 0;
        for (auto v : t) {
            top = std::max(top, v);
        }
        std::vector<bool> used(std::size_t{top} + 1, false);
        for (auto v : t) {
            used[v] = true;
        }
        if (std::find(used.begin(), used.end(), false) != used.end()) {
            throw IncompleteTable("entry " + where + " has empty tiers");
        }
    };
    for (std::size_t a = 0; a < tiers_.size(); ++a) {
        check_dense(tiers_[a], "for event mask " + std::to_string(a));
    }
    if (std::any_of(tiers_[0].begin(), tiers_[0].end(), [](auto v) { return v != 0; })) {
        throw IncompleteTable("the empty-event entry must be degenerate");
    }
    if (unconditional_) {
        check_dense(*unconditional_, "unconditional");
    }
}

Ordering PreferenceTable::prefer(Mask a, std::uint64_t f, std::uint64_t g) const {
    const auto tf = tiers_.at(a).at(f);
    const auto tg = tiers_[a].at(g);
    return tf < tg ? Ordering::StrictlyPrefer : (tg < tf ? Ordering::StrictlyDisprefer : Ordering::Indifferent);
}

std::string default_act_name(std::uint64_t code) { return "f" + std::to_string(code); }

void check_table_caps(std::size_t states, std::size_t outcomes, const TableCaps& caps) {
    if (states > caps.state_cap) {
        throw CapExceeded("table needs 2^" + std::to_string(states) + " events, state cap is " +
                              std::to_string(caps.state_cap),
                          states, caps.state_cap);
    }
    const auto acts = act_count(states, outcomes);
    if (acts > caps.act_cap) {
        throw CapExceeded("table needs " + std::to_string(acts) + " acts, cap is " +
                              std::to_string(caps.act_cap),
                          acts, caps.act_cap);
    }
}

PreferenceTable derive_table(const GsleuModel& m, const TableCaps& caps) {
    require_valid(m);
    const auto n = m.space()->size();
    const auto o = m.outcomes()->size();
    check_table_caps(n, o, caps);
    const auto acts = act_count(n, o);
    std::vector<std::vector<std::uint32_t>> assignments(acts);
    for (std::uint64_t c = 0; c < acts; ++c) {
        assignments[c] = act_from_code(c, m.space(), m.outcomes()).assignment();
    }
    // weight[k][s][o] = p_k(s) u_k(o)
    std::vector<std::vector<Rational>> weight(m.level_count(), std::vector<Rational>(n * o));
    for (std::size_t k = 0; k < m.level_count(); ++k) {
        const auto& level = m.levels()[k];
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t x = 0; x < o; ++x) {
                weight[k][s * o + x] = level.prob[s] * level.utility[x];
            }
        }
    }
    auto value = [&](std::size_t k, Mask a, const std::vector<std::uint32_t>& f) {
        Rational total = 0;
        Mask hit = a & m.levels()[k].support.mask();
        for (std::size_t s = 0; hit != 0; ++s, hit >>= 1) {
            if (hit & 1U) {
                total += weight[k][s * o + f[s]];
            }
        }
        return total;
    };
    const std::size_t events = std::size_t{1} << n;
    std::vector<TierArray> tiers(events);
    tiers[0].assign(acts, 0);
    std::vector<Rational> keys(acts);
    for (Mask a = 1; a < events; ++a) {
        const auto k = m.class_of_mask(a) - 1;
        for (std::uint64_t c = 0; c < acts; ++c) {
            keys[c] = value(k, a, assignments[c]);
        }
        tiers[a] = dense_ranks_desc(keys);
    }
    std::vector<std::vector<Rational>> lex_keys(acts);
    const Mask full = m.space()->full_mask();
    for (std::uint64_t c = 0; c < acts; ++c) {
        for (std::size_t k = 0; k < m.level_count(); ++k) {
            lex_keys[c].push_back(value(k, full, assignments[c]));
        }
    }
    std::vector<std::string> names(acts);
    for (std::uint64_t c = 0; c < acts; ++c) {
        names[c] = default_act_name(c);
    }
    return PreferenceTable(m.space(), m.outcomes(), std::move(names), std::move(tiers),
                           dense_ranks_desc(lex_keys));
}

namespace {

std::optional<std::pair<std::uint64_t, std::uint64_t>> differing_pair(const TierArray& x, const TierArray& y) {
    for (std::uint64_t f = 0; f < x.size(); ++f) {
        for (std::uint64_t g = f + 1; g < x.size(); ++g) {
            const bool xf = x[f] < x[g];
            const bool xg = x[g] < x[f];
            const bool yf = y[f] < y[g];
            const bool yg = y[g] < y[f];
            if (xf != yf || xg != yg) {
                return std::make_pair(f, g);
            }
        }
    }
    return std::nullopt;
}

Ordering order_of(const TierArray& t, std::uint64_t f, std::uint64_t g) {
    return t[f] < t[g] ? Ordering::StrictlyPrefer : (t[g] < t[f] ? Ordering::StrictlyDisprefer : Ordering::Indifferent);
}

}  // namespace

std::optional<TableMismatch> first_mismatch(const PreferenceTable& expected, const PreferenceTable& actual,
                                            bool compare_unconditional) {
    if (expected.event_count() != actual.event_count() || expected.act_count() != actual.act_count()) {
        throw SpaceMismatch("tables cover different spaces");
    }
    for (Mask a = 0; a < expected.event_count(); ++a) {
        if (expected.tiers(a) == actual.tiers(a)) {
            continue;
        }
        if (auto pair = differing_pair(expected.tiers(a), actual.tiers(a))) {
            return TableMismatch{a, pair->first, pair->second, order_of(expected.tiers(a), pair->first, pair->second),
                                 order_of(actual.tiers(a), pair->first, pair->second), false};
        }
    }
    if (compare_unconditional && expected.unconditional() && actual.unconditional() &&
        *expected.unconditional() != *actual.unconditional()) {
        const auto& x = *expected.unconditional();
        const auto& y = *actual.unconditional();
        if (auto pair = differing_pair(x, y)) {
            return TableMismatch{expected.space()->full_mask(), pair->first, pair->second,
                                 order_of(x, pair->first, pair->second), order_of(y, pair->first, pair->second), true};
        }
    }
    return std::nullopt;
}

TableAnalysis::TableAnalysis(const PreferenceTable& t) : table_(&t) {
    const auto n = t.space()->size();
    const auto m = t.outcomes()->size();
    std::map<const TierArray*, std::uint32_t, bool (*)(const TierArray*, const TierArray*)> interned(
        [](const TierArray* x, const TierArray* y) { return *x < *y; });
    ids_.resize(t.event_count());
    for (Mask a = 0; a < t.event_count(); ++a) {
        auto [it, inserted] = interned.emplace(&t.tiers(a), static_cast<std::uint32_t>(interned.size()));
        ids_[a] = it->second;
    }
    place_.assign(n, 1);
    for (std::size_t s = n; s-- > 1;) {
        place_[s - 1] = place_[s] * m;
    }
    for (std::size_t o = 0; o < m; ++o) {
        std::uint64_t code = 0;
        for (std::size_t s = 0; s < n; ++s) {
            code += o * place_[s];
        }
        constant_codes_.push_back(code);
    }
    constants_order_.resize(m);
    std::iota(constants_order_.begin(), constants_order_.end(), 0);
    const Mask full = t.space()->full_mask();
    std::stable_sort(constants_order_.begin(), constants_order_.end(), [&](std::size_t x, std::size_t y) {
        return t.tier(full, constant_codes_[x]) < t.tier(full, constant_codes_[y]);
    });
    Mask rest = full;
    while (rest != 0) {
        chain_.push_back(rest);
        Mask atoms = 0;
        for (Mask r = rest; r != 0; r &= r - 1) {
            const Mask s = r & (~r + 1);
            if (!null_at(s, rest)) {
                atoms |= s;
            }
        }
        if (atoms == 0) {
            break;
        }
        rest &= ~atoms;
    }
    chain_complete_ = rest == 0;
    if (t.unconditional()) {
        unconditional_ = *t.unconditional();
    } else {
        std::vector<std::vector<std::int64_t>> keys(t.act_count());
        for (std::uint64_t c = 0; c < t.act_count(); ++c) {
            for (auto e : chain_) {
                keys[c].push_back(-static_cast<std::int64_t>(t.tier(e, c)));
            }
        }
        unconditional_ = dense_ranks_desc(keys);
    }
}

std::uint64_t TableAnalysis::bet_code(std::size_t o, Mask b, std::size_t o_prime) const {
    std::uint64_t code = 0;
    for (std::size_t s = 0; s < place_.size(); ++s) {
        code += ((b >> s) & 1U ? o : o_prime) * place_[s];
    }
    return code;
}

std::uint64_t TableAnalysis::compose_code(std::uint64_t f, Mask a, std::uint64_t h) const {
    const auto m = table_->outcomes()->size();
    std::uint64_t code = 0;
    for (std::size_t s = 0; s < place_.size(); ++s) {
        const auto src = (a >> s) & 1U ? f : h;
        code += (src / place_[s]) % m * place_[s];
    }
    return code;
}

}  // namespace lexeu
