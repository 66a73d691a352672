#include "planted.hpp"

#include "fixtures.hpp"

#include <array>

namespace lexeu::testing {

TierArray rank_by(const PreferenceTable& t, const std::function<Rational(const Act&)>& key) {
    std::vector<Rational> keys;
    keys.reserve(t.act_count());
    for (std::uint64_t f = 0; f < t.act_count(); ++f) {
        keys.push_back(key(t.act(f)));
    }
    return dense_ranks_desc(keys);
}

namespace {

std::vector<TierArray> all_tiers(const PreferenceTable& t) {
    std::vector<TierArray> out;
    for (Mask a = 0; a < t.event_count(); ++a) {
        out.push_back(t.tiers(a));
    }
    return out;
}

}  // namespace

PreferenceTable with_tiers(const PreferenceTable& t, Mask a, TierArray tiers) {
    auto out = all_tiers(t);
    out.at(a) = std::move(tiers);
    return PreferenceTable(t.space(), t.outcomes(), t.act_names(), std::move(out), t.unconditional());
}

PreferenceTable with_unconditional(const PreferenceTable& t, TierArray tiers) {
    return PreferenceTable(t.space(), t.outcomes(), t.act_names(), all_tiers(t), std::move(tiers));
}

std::vector<PlantedDefect> planted_defects() {
    const auto m = m0();
    const auto t = derive_table(m);
    const auto& u1 = m.level(1).utility;
    const Mask s1 = 1, s2 = 2, s3 = 4, s4 = 8, full = 15;
    // Level-1 expected utility with equal weight on the states of `w`.
    auto uniform_eu = [&](Mask w) {
        return [&u1, w](const Act& f) {
            Rational sum = 0;
            for (std::size_t s = 0; s < 4; ++s) {
                if ((w >> s) & 1U) {
                    sum += u1[f(s)];
                }
            }
            return sum;
        };
    };
    // Original S-indexed order with a single act lifted above its indifference class.
    auto lift = [&](const std::string& outcomes) {
        const auto target = act(m, outcomes).code();
        return rank_by(t, [&](const Act& f) {
            return Rational(3) * level_eu(m, 1, Event::full(m.space()), f) + (f.code() == target ? Rational(1) : 0);
        });
    };
    std::vector<PlantedDefect> out;
    out.push_back({AxiomId::P1_5, "order at {s1} ranks acts by their outcome at s2",
                   with_tiers(t, s1, rank_by(t, [&](const Act& f) { return u1[f(1)]; }))});
    out.push_back({AxiomId::P2_5, "order at S reversed",
                   with_tiers(t, full, rank_by(t, [&](const Act& f) { return -level_eu(m, 1, Event::full(m.space()), f); }))});
    out.push_back({AxiomId::P3_5, "constants reversed at {s3}",
                   with_tiers(t, s3, rank_by(t, [&](const Act& f) { return -m.level(2).utility[f(2)]; }))});
    out.push_back({AxiomId::P4_5, "(b,a,a,a) lifted above (a,b,a,a) at S", with_tiers(t, full, lift("baaa"))});
    out.push_back({AxiomId::P5_5, "every act indifferent at S", with_tiers(t, full, TierArray(t.act_count(), 0))});
    out.push_back({AxiomId::SE, "order at {s1,s3,s4} weighs the three states equally",
                   with_tiers(t, s1 | s3 | s4, rank_by(t, uniform_eu(s1 | s3 | s4)))});
    out.push_back({AxiomId::P0_5, "unconditional order reversed",
                   with_unconditional(t, rank_by(t, [&](const Act& f) {
                       return Rational(static_cast<long>(t.unconditional()->at(f.code())));
                   }))});
    out.push_back({AxiomId::QP, "(c,a,a,a) lifted above (a,c,a,a) at S", with_tiers(t, full, lift("caaa"))});
    out.push_back({AxiomId::NULLITY, "order at {s1,s2,s3} weighs s3 like s1",
                   with_tiers(t, s1 | s2 | s3, rank_by(t, uniform_eu(s1 | s2 | s3)))});
    out.push_back({AxiomId::DOMINANCE, "order at {s2,s4} ignores s2",
                   with_tiers(t, s2 | s4, rank_by(t, [&](const Act& f) { return m.level(3).utility[f(3)]; }))});
    return out;
}

PreferenceTable non_additive_table() {
    auto space = make_state_space({"s1", "s2", "s3", "s4", "s5"});
    auto outcomes = make_outcome_space({"a", "b"});
    const std::array<long, 5> weight{2, 6, 7, 10, 16};
    const Mask acd = 0b01101;
    const Mask be = 0b10010;
    auto key = [&](Mask x) {
        if (x == acd || x == be) {
            x ^= acd ^ be;
        }
        long sum = 0;
        for (std::size_t s = 0; s < 5; ++s) {
            sum += ((x >> s) & 1U) ? weight[s] : 0;
        }
        return sum;
    };
    std::vector<std::string> names;
    std::vector<Mask> wins;
    for (std::uint64_t code = 0; code < 32; ++code) {
        const auto f = act_from_code(code, space, outcomes);
        Mask b = 0;
        for (std::size_t s = 0; s < 5; ++s) {
            b |= Mask{f(s)} << s;
        }
        wins.push_back(b);
        names.push_back(default_act_name(code));
    }
    std::vector<TierArray> tiers;
    for (Mask a = 0; a < 32; ++a) {
        std::vector<long> keys;
        for (auto b : wins) {
            keys.push_back(key(b & a));
        }
        tiers.push_back(dense_ranks_desc(keys));
    }
    auto unconditional = tiers.back();
    return PreferenceTable(space, outcomes, std::move(names), std::move(tiers), std::move(unconditional));
}

}  // namespace lexeu::testing
