#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lexeu::testing {

GsleuModel m0() {
    return GsleuModel::build({"s1", "s2", "s3", "s4"}, {"a", "b", "c"},
                             {
                                 {{"s1", "s2"}, {"1/2", "1/2"}, {"0", "1", "2"}},
                                 {{"s3"}, {"1"}, {"0", "3", "4"}},
                                 {{"s4"}, {"1"}, {"0", "1", "2"}},
                             });
}

Act act(const GsleuModel& m, const std::string& outcomes) {
    std::vector<std::string> labels;
    for (char c : outcomes) {
        labels.emplace_back(1, c);
    }
    return Act::from_labels(m.space(), m.outcomes(), labels);
}

namespace {

std::vector<std::string> labels(const char* prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(prefix + std::to_string(i + 1));
    }
    return out;
}

std::vector<std::string> outcome_labels(std::size_t m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m; ++i) {
        out.emplace_back(1, static_cast<char>('a' + i));
    }
    return out;
}

}  // namespace

GsleuModel random_model(std::mt19937_64& rng, const RandomModelSpec& spec) {
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    const auto n = pick(spec.min_states, spec.max_states);
    const auto k = pick(1, std::min(spec.max_levels, n));
    // Random ordered partition of the states into k nonempty supports.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> level_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        level_of[order[i]] = i < k ? i : pick(0, k - 1);
    }
    std::vector<std::size_t> ranking(spec.outcomes);
    std::iota(ranking.begin(), ranking.end(), 0);
    std::shuffle(ranking.begin(), ranking.end(), rng);
    const auto states = labels("s", n);
    std::vector<LevelSpec> specs(k);
    for (std::size_t level = 0; level < k; ++level) {
        std::vector<std::uint32_t> weights;
        for (std::size_t s = 0; s < n; ++s) {
            if (level_of[s] == level) {
                specs[level].support.push_back(states[s]);
                weights.push_back(static_cast<std::uint32_t>(pick(1, spec.max_weight)));
            }
        }
        const auto total = std::accumulate(weights.begin(), weights.end(), 0U);
        for (auto w : weights) {
            specs[level].prob.push_back(std::to_string(w) + "/" + std::to_string(total));
        }
        std::set<std::uint32_t> values;
        while (values.size() < spec.outcomes) {
            values.insert(static_cast<std::uint32_t>(pick(0, spec.max_utility)));
        }
        const std::vector<std::uint32_t> sorted(values.begin(), values.end());
        specs[level].utility.resize(spec.outcomes);
        for (std::size_t r = 0; r < spec.outcomes; ++r) {
            specs[level].utility[ranking[r]] = std::to_string(sorted[r]);
        }
    }
    return GsleuModel::build(states, outcome_labels(spec.outcomes), specs);
}

GsleuModel uniform_model(std::mt19937_64& rng, std::size_t states, std::size_t outcomes) {
    const auto names = labels("s", states);
    LevelSpec level;
    level.support = names;
    level.prob.assign(states, "1/" + std::to_string(states));
    std::set<std::uint32_t> values{0, 12};
    while (values.size() < outcomes) {
        values.insert(std::uniform_int_distribution<std::uint32_t>(1, 11)(rng));
    }
    for (auto v : values) {
        level.utility.push_back(std::to_string(v) + "/12");
    }
    return GsleuModel::build(names, outcome_labels(outcomes), {level});
}

}  // namespace lexeu::testing
