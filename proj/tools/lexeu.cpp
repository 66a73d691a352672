#include "lexeu/axioms.hpp"
#include "lexeu/conditioning.hpp"
#include "lexeu/io.hpp"
#include "lexeu/lottery.hpp"
#include "lexeu/synthesis.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lexeu;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

struct Caps {
    std::uint64_t act_cap = kDefaultActCap;
    std::uint64_t partition_cap = 10'000'000;
    std::size_t state_cap = kDefaultEventCap;
};

Caps caps_from_env() {
    Caps caps;
    if (const char* env = std::getenv("LEXEU_CAP")) {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used != std::string(env).size() || value == 0) {
                throw std::invalid_argument("LEXEU_CAP");
            }
            caps.act_cap = value;
            caps.partition_cap = value;
        } catch (const std::exception&) {
            throw ParseError(std::string("LEXEU_CAP must be a positive integer, got \"") + env + "\"");
        }
    }
    return caps;
}

/// "1/2 (0.5)" in human mode; integers print bare.
std::string number(const Rational& r) {
    const auto text = format_rational(r);
    if (text.find('/') == std::string::npos) {
        return text;
    }
    std::ostringstream out;
    out << text << " (" << to_double(r) << ")";
    return out.str();
}

std::string braces(const Event& e) { return "{" + event_key(e) + "}"; }

std::string verdict_text(const std::string& f, const std::string& g, const LexVerdict& v) {
    std::string out = f + " " + std::string(symbol(v.ordering)) + " " + g;
    if (v.deciding_level) {
        out += " (deciding level " + std::to_string(*v.deciding_level) + ")";
    }
    return out;
}

Json verdict_json(const std::string& f, const std::string& g, const LexVerdict& v) {
    Json out;
    out["f"] = f;
    out["g"] = g;
    out["ordering"] = std::string(to_string(v.ordering));
    out["symbol"] = std::string(symbol(v.ordering));
    out["deciding_level"] = v.deciding_level ? Json(*v.deciding_level) : Json(nullptr);
    return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json witness_json(const PreferenceFamily& p, const Witness& w) {
    const auto& t = p.table();
    Json out;
    out["clause"] = w.clause;
    out["events"] = Json::array();
    for (auto e : w.events) {
        out["events"].push_back(event_to_json(Event(t.space(), e)));
    }
    out["acts"] = Json::array();
    for (auto a : w.acts) {
        out["acts"].push_back(act_to_json(t.act_names()[a], t.act(a)));
    }
    out["outcomes"] = Json::array();
    for (auto o : w.outcomes) {
        out["outcomes"].push_back(t.outcomes()->label(o));
    }
    out["text"] = describe_witness(p, w);
    return out;
}

Json report_json(const PreferenceFamily& p, const AxiomReport& r) {
    Json out;
    out["axiom"] = std::string(to_string(r.id));
    out["status"] = std::string(to_string(r.status));
    out["regime"] = r.regime;
    Json stats = Json::object();
    for (const auto& [key, value] : r.statistics) {
        stats[key] = value;
    }
    out["statistics"] = std::move(stats);
    out["witnesses"] = Json::array();
    for (const auto& w : r.witnesses) {
        out["witnesses"].push_back(witness_json(p, w));
    }
    return out;
}

Json instance_json(const GsleuModel& m, const ObservabilityInstance& x) {
    Json out;
    out["event"] = event_to_json(x.a);
    out["f"] = act_from_code(x.f, m.space(), m.outcomes()).to_string();
    out["g"] = act_from_code(x.g, m.space(), m.outcomes()).to_string();
    out["indexed_strict"] = x.indexed_strict;
    out["savage_strict"] = x.savage_strict;
    out["strong_strict"] = x.strong_strict;
    out["sufficient"] = x.sufficient;
    out["verdict"] = std::string(to_string(x.verdict));
    return out;
}

std::string instance_text(const GsleuModel& m, const ObservabilityInstance& x) {
    std::ostringstream out;
    out << braces(x.a) << " f=" << act_from_code(x.f, m.space(), m.outcomes()).to_string()
        << " g=" << act_from_code(x.g, m.space(), m.outcomes()).to_string() << " indexed=" << x.indexed_strict
        << " savage=" << x.savage_strict << " strong=" << x.strong_strict << " sufficient=" << x.sufficient;
    return out.str();
}

/// A model file has "levels"; anything else is read as a preference table.
PreferenceFamily load_family(const std::string& path, const Caps& caps) {
    const auto j = read_json_file(path);
    if (j.is_object() && j.contains("levels")) {
        auto m = model_from_json(j);
        require_valid(m);
        return PreferenceFamily::model_backed(m, TableCaps{caps.act_cap, caps.state_cap});
    }
    auto t = table_from_json(j);
    check_table_caps(t.space()->size(), t.outcomes()->size(), TableCaps{caps.act_cap, caps.state_cap});
    return PreferenceFamily::table_backed(std::move(t));
}

struct Context {
    bool json = false;
    Caps caps;
};

int cmd_validate(const Context& ctx, const std::string& model_path) {
    const auto m = model_from_json(read_json_file(model_path));
    const auto report = validate_model(m);
    if (ctx.json) {
        Json out;
        out["valid"] = report.valid();
        out["violations"] = Json::array();
        for (const auto& v : report.violations) {
            out["violations"].push_back({{"code", v.code}, {"location", v.location}});
        }
        print_json(out);
    } else if (report.valid()) {
        std::cout << "valid (" << m.level_count() << " levels, " << m.space()->size() << " states, "
                  << m.outcomes()->size() << " outcomes)\n";
    } else {
        std::cout << "invalid\n";
        for (const auto& v : report.violations) {
            std::cout << "  " << v.code << ": " << v.location << "\n";
        }
    }
    return report.valid() ? kOk : kViolation;
}

int cmd_compare(const Context& ctx, const std::string& model_path, const std::string& f_path,
                const std::string& g_path, bool strict_only) {
    const auto m = parse_model(model_path);
    const auto f = parse_act(f_path, m.space(), m.outcomes());
    const auto g = parse_act(g_path, m.space(), m.outcomes());
    const auto v = lex_prefer(m, f.act, g.act);
    if (ctx.json) {
        print_json(verdict_json(f.name, g.name, v));
    } else {
        std::cout << verdict_text(f.name, g.name, v) << "\n";
    }
    if (strict_only) {
        return v.ordering == Ordering::StrictlyPrefer ? kOk : kViolation;
    }
    return v.ordering == Ordering::StrictlyDisprefer ? kViolation : kOk;
}

struct ConditionArgs {
    std::string model;
    std::string event;
    std::string f;
    std::string g;
    std::string h;
    bool strong = false;
    bool naive = false;
    std::size_t max_blocks = 0;
};

int cmd_condition(const Context& ctx, const ConditionArgs& args) {
    const auto m = parse_model(args.model);
    const auto a = event_from_arg(args.event, m.space());
    const auto f = parse_act(args.f, m.space(), m.outcomes());
    const auto g = parse_act(args.g, m.space(), m.outcomes());
    if (args.naive) {
        const auto r = indexed_prefer(m, a, f.act, g.act);
        if (ctx.json) {
            Json out;
            out["event"] = event_to_json(a);
            out["f"] = f.name;
            out["g"] = g.name;
            out["ordering"] = std::string(to_string(r.ordering));
            out["degenerate"] = r.degenerate;
            print_json(out);
        } else {
            std::cout << f.name << " " << symbol(r.ordering) << "_A " << g.name << " at A = " << braces(a)
                      << (r.degenerate ? " (degenerate)" : "") << "\n";
        }
        return r.strict() ? kOk : kViolation;
    }
    if (args.strong) {
        StrongOptions options;
        options.max_blocks = args.max_blocks;
        options.partition_cap = ctx.caps.partition_cap;
        if (!args.h.empty()) {
            options.h = parse_act(args.h, m.space(), m.outcomes()).act;
        }
        const auto v = strong_conditional_strict(m, a, f.act, g.act, options);
        Json out;
        out["event"] = event_to_json(a);
        out["f"] = f.name;
        out["g"] = g.name;
        out["savage_strict"] = v.savage_strict;
        out["strong_strict"] = v.strong_strict;
        out["failing_constant"] =
            v.failing_constant ? Json(m.outcomes()->label(*v.failing_constant)) : Json(nullptr);
        out["witnesses"] = Json::array();
        for (const auto& w : v.witnesses) {
            Json wj;
            wj["constant"] = m.outcomes()->label(w.constant);
            wj["partition"] = Json::array();
            for (const auto& cell : w.partition) {
                wj["partition"].push_back(event_to_json(cell));
            }
            wj["coarser_only"] = w.coarser_only;
            out["witnesses"].push_back(std::move(wj));
        }
        print_json(out);
        return v.strong_strict ? kOk : kViolation;
    }
    const auto v = savage_verdict(m, a, f.act, g.act);
    if (ctx.json) {
        auto out = verdict_json(f.name, g.name, v);
        out["event"] = event_to_json(a);
        print_json(out);
    } else {
        std::cout << verdict_text(f.name, g.name, v) << " given " << braces(a) << "\n";
    }
    return v.ordering == Ordering::StrictlyPrefer ? kOk : kViolation;
}

int cmd_classes(const Context& ctx, const std::string& model_path, bool enumerate) {
    const auto m = parse_model(model_path);
    const auto chain = top_event_chain(m);
    Json out;
    out["chain"] = Json::array();
    for (std::size_t k = 0; k < chain.size(); ++k) {
        Json cj;
        cj["level"] = k + 1;
        cj["top_event"] = event_to_json(chain[k]);
        cj["support"] = event_to_json(m.levels()[k].support);
        out["chain"].push_back(std::move(cj));
        if (!ctx.json) {
            std::cout << "E" << k + 1 << " = " << braces(chain[k]) << "  support " << braces(m.levels()[k].support)
                      << "\n";
        }
    }
    if (enumerate) {
        const auto partition = class_partition(m, ctx.caps.state_cap);
        out["classes"] = Json::array();
        for (std::size_t k = 0; k < partition.classes.size(); ++k) {
            Json events = Json::array();
            std::string line = "class " + std::to_string(k + 1) + " (" +
                               std::to_string(partition.classes[k].size()) + " events):";
            for (const auto& e : partition.classes[k]) {
                events.push_back(event_to_json(e));
                line += " " + braces(e);
            }
            out["classes"].push_back(std::move(events));
            if (!ctx.json) {
                std::cout << line << "\n";
            }
        }
        out["trivial"] = Json::array();
        std::string line = "trivial:";
        for (const auto& e : partition.trivial) {
            out["trivial"].push_back(event_to_json(e));
            line += " " + braces(e);
        }
        if (!ctx.json) {
            std::cout << line << "\n";
        }
    }
    if (ctx.json) {
        print_json(out);
    }
    return kOk;
}

int cmd_nullity(const Context& ctx, const std::string& model_path, const std::string& b_text,
                const std::string& a_text) {
    const auto m = parse_model(model_path);
    const auto b = event_from_arg(b_text, m.space());
    const auto a = event_from_arg(a_text, m.space());
    const bool null = is_null_at(m, b, a);
    if (ctx.json) {
        print_json({{"B", event_to_json(b)}, {"A", event_to_json(a)}, {"null", null}});
    } else {
        std::cout << (null ? "true" : "false") << "\n";
    }
    return kOk;
}

int cmd_qualprob(const Context& ctx, const std::string& model_path, const std::string& a_text,
                 const std::string& b_text, const std::string& c_text) {
    const auto m = parse_model(model_path);
    const auto a = event_from_arg(a_text, m.space());
    const auto b = event_from_arg(b_text, m.space());
    const auto c = event_from_arg(c_text, m.space());
    const auto o = qual_prob_compare(m, a, b, c);
    if (ctx.json) {
        print_json({{"A", event_to_json(a)},
                    {"B", event_to_json(b)},
                    {"C", event_to_json(c)},
                    {"ordering", std::string(to_string(o))},
                    {"symbol", std::string(symbol(o))}});
    } else {
        std::cout << braces(b) << " " << symbol(o) << " " << braces(c) << " given " << braces(a) << " ("
                  << to_string(o) << ")\n";
    }
    return kOk;
}

struct LotteryArgs {
    std::string model;
    std::string event;
    std::vector<std::string> acts;
    std::string realize;
    std::string fill;
};

int cmd_lottery(const Context& ctx, const LotteryArgs& args) {
    const auto m = parse_model(args.model);
    const auto a = event_from_arg(args.event, m.space());
    Json out;
    out["event"] = event_to_json(a);
    if (!args.realize.empty()) {
        const auto l = lottery_from_json(read_json_file(args.realize), m.outcomes());
        const Act fill = args.fill.empty() ? constant_act(std::size_t{0}, m.space(), m.outcomes())
                                           : parse_act(args.fill, m.space(), m.outcomes()).act;
        const auto f = act_from_lottery(m, a, l, fill);
        if (ctx.json) {
            out["lottery"] = lottery_to_json(l);
            out["act"] = act_to_json("realized", f);
            print_json(out);
        } else {
            std::cout << "act " << f.to_string() << " induces " << l.to_string() << " at " << braces(a) << "\n";
        }
        return kOk;
    }
    if (args.acts.empty() || args.acts.size() > 2) {
        throw ParseError("lottery takes one or two act files, or --realize");
    }
    std::vector<NamedAct> acts;
    std::vector<Lottery> lotteries;
    out["lotteries"] = Json::array();
    for (const auto& path : args.acts) {
        acts.push_back(parse_act(path, m.space(), m.outcomes()));
        lotteries.push_back(induced_lottery(m, a, acts.back().act));
        const auto eu = lottery_eu(m, a, lotteries.back());
        out["lotteries"].push_back(
            {{"act", acts.back().name}, {"lottery", lottery_to_json(lotteries.back())}, {"eu", format_rational(eu)}});
        if (!ctx.json) {
            std::cout << acts.back().name << " at " << braces(a) << ": " << lotteries.back().to_string() << "  EU "
                      << number(eu) << "\n";
        }
    }
    int code = kOk;
    if (lotteries.size() == 2) {
        const auto o = lottery_compare(m, a, lotteries[0], lotteries[1]);
        out["ordering"] = std::string(to_string(o));
        if (!ctx.json) {
            std::cout << acts[0].name << " " << symbol(o) << " " << acts[1].name << "\n";
        }
        code = o == Ordering::StrictlyDisprefer ? kViolation : kOk;
    }
    if (ctx.json) {
        print_json(out);
    }
    return code;
}

int cmd_axioms(const Context& ctx, const std::string& path, const std::string& suite_name,
               const std::vector<std::string>& only, const AxiomOptions& options) {
    const auto family = load_family(path, ctx.caps);
    std::vector<AxiomId> ids;
    if (!only.empty()) {
        for (const auto& name : only) {
            ids.push_back(parse_axiom_id(name));
        }
    } else {
        ids = suite_axioms(suite_name == "all" ? AxiomSuite::All : AxiomSuite::Core);
    }
    bool pass = true;
    Json reports = Json::array();
    for (auto id : ids) {
        const auto r = check_axiom(family, id, options);
        pass = pass && r.status != AxiomStatus::Violated;
        if (ctx.json) {
            reports.push_back(report_json(family, r));
            continue;
        }
        std::cout << to_string(r.id) << ": " << to_string(r.status);
        for (const auto& [key, value] : r.statistics) {
            std::cout << "  " << key << "=" << value;
        }
        std::cout << "  [" << r.regime << "]\n";
        for (const auto& w : r.witnesses) {
            std::cout << "    " << describe_witness(family, w) << "\n";
        }
    }
    if (ctx.json) {
        print_json({{"suite", only.empty() ? suite_name : "custom"}, {"pass", pass}, {"reports", reports}});
    } else {
        std::cout << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? kOk : kViolation;
}

int cmd_derive_table(const Context& ctx, const std::string& model_path, const std::string& output) {
    const auto m = parse_model(model_path);
    const auto t = derive_table(m, TableCaps{ctx.caps.act_cap, ctx.caps.state_cap});
    const auto text = table_to_json(t).dump(ctx.json ? 2 : 1) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        write_text_file(output, text);
        std::cout << "wrote " << output << " (" << t.event_count() << " events, " << t.act_count() << " acts)\n";
    }
    return kOk;
}

int cmd_synthesize(const Context& ctx, const std::string& table_path, const std::string& output) {
    auto t = parse_table(table_path);
    check_table_caps(t.space()->size(), t.outcomes()->size(), TableCaps{ctx.caps.act_cap, ctx.caps.state_cap});
    const auto family = PreferenceFamily::table_backed(std::move(t));
    const auto result = synthesize(family);
    const auto model = model_to_json(result.model);
    Json diagnostics = Json::array();
    for (const auto& d : result.diagnostics) {
        Json counters = Json::object();
        for (const auto& [key, value] : d.counters) {
            counters[key] = value;
        }
        diagnostics.push_back({{"stage", d.stage}, {"level", d.level}, {"counters", counters}, {"note", d.note}});
    }
    if (!output.empty()) {
        write_text_file(output, model.dump(2) + "\n");
    }
    if (ctx.json) {
        print_json({{"verified", result.verified}, {"model", model}, {"diagnostics", diagnostics}});
    } else if (output.empty()) {
        print_json(model);
    } else {
        for (const auto& d : result.diagnostics) {
            std::cout << d.stage;
            if (d.level != 0) {
                std::cout << " " << d.level;
            }
            for (const auto& [key, value] : d.counters) {
                std::cout << "  " << key << "=" << value;
            }
            if (!d.note.empty()) {
                std::cout << "  " << d.note;
            }
            std::cout << "\n";
        }
        for (std::size_t k = 1; k <= result.model.level_count(); ++k) {
            const auto& level = result.model.level(k);
            std::cout << "level " << k << " support " << braces(level.support) << "\n   p:";
            for (auto s : level.support.members()) {
                std::cout << " " << result.model.space()->label(s) << "=" << number(level.prob[s]);
            }
            std::cout << "\n   u:";
            for (std::size_t o = 0; o < level.utility.size(); ++o) {
                std::cout << " " << result.model.outcomes()->label(o) << "=" << number(level.utility[o]);
            }
            std::cout << "\n";
        }
        std::cout << "verified: " << (result.verified ? "true" : "false") << "\nwrote " << output << "\n";
    }
    return kOk;
}

int cmd_observability(const Context& ctx, const std::string& model_path, std::size_t max_blocks,
                      std::size_t listed) {
    const auto m = parse_model(model_path);
    ObservabilityOptions options;
    options.max_blocks = max_blocks;
    options.act_cap = ctx.caps.act_cap;
    options.state_cap = ctx.caps.state_cap;
    options.listed_cap = listed;
    const auto r = observability_check(m, options);
    const bool ok = r.anomalies.empty() && r.implication_failures == 0;
    if (ctx.json) {
        Json out;
        out["instances"] = r.instances;
        out["equivalent"] = r.equivalent;
        out["fineness_failures"] = r.fineness_failures;
        out["sufficient_instances"] = r.sufficient_instances;
        out["sufficient_equivalent"] = r.sufficient_equivalent;
        out["implication_failures"] = r.implication_failures;
        out["coarser_partition_count"] = r.coarser_partition_count;
        for (const auto* list : {&r.anomalies, &r.fineness_examples, &r.coarser_partition_cases}) {
            Json items = Json::array();
            for (const auto& x : *list) {
                items.push_back(instance_json(m, x));
            }
            const char* key = list == &r.anomalies          ? "anomalies"
                              : list == &r.fineness_examples ? "fineness_examples"
                                                             : "coarser_partition_cases";
            out[key] = std::move(items);
        }
        print_json(out);
    } else {
        std::cout << "instances: " << r.instances << "\n"
                  << "equivalent: " << r.equivalent << "\n"
                  << "fineness failures: " << r.fineness_failures << "\n"
                  << "sufficient instances: " << r.sufficient_instances << " (equivalent " << r.sufficient_equivalent
                  << ")\n"
                  << "implication failures: " << r.implication_failures << "\n"
                  << "coarser-partition cases: " << r.coarser_partition_count << "\n"
                  << "anomalies: " << r.anomalies.size() << "\n";
        for (const auto& x : r.anomalies) {
            std::cout << "  anomaly " << instance_text(m, x) << "\n";
        }
        for (const auto& x : r.fineness_examples) {
            std::cout << "  fineness failure " << instance_text(m, x) << "\n";
        }
    }
    return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexeu: lexicographic expected utility toolkit"};
    app.require_subcommand(1);
    Context ctx;
    std::function<int()> run;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", ctx.json, "Machine-readable output"); };

    std::string model;
    std::string f_path;
    std::string g_path;
    std::string output;

    auto* validate = app.add_subcommand("validate", "Check model invariants");
    validate->add_option("model", model, "Model file")->required();
    add_json(validate);
    validate->callback([&] { run = [&] { return cmd_validate(ctx, model); }; });

    bool strict_only = false;
    auto* compare = app.add_subcommand("compare", "Lexicographic comparison of two acts");
    compare->add_option("model", model)->required();
    compare->add_option("f", f_path)->required();
    compare->add_option("g", g_path)->required();
    compare->add_flag("--strict-only", strict_only, "Exit 0 only for strict preference");
    add_json(compare);
    compare->callback([&] { run = [&] { return cmd_compare(ctx, model, f_path, g_path, strict_only); }; });

    ConditionArgs cond;
    auto* condition = app.add_subcommand("condition", "Conditional preference given an event");
    condition->add_option("model", cond.model)->required();
    condition->add_option("event", cond.event, "Event, e.g. s1,s3")->required();
    condition->add_option("f", cond.f)->required();
    condition->add_option("g", cond.g)->required();
    condition->add_flag("--strong", cond.strong, "Strong conditioning verdict (JSON)");
    condition->add_flag("--naive", cond.naive, "Indexed preference at the event");
    condition->add_option("--off-act", cond.h, "Completion act off the event (default g)");
    condition->add_option("--max-blocks", cond.max_blocks, "Largest partition searched (0 = |A|)");
    add_json(condition);
    condition->callback([&] { run = [&] { return cmd_condition(ctx, cond); }; });

    bool enumerate = false;
    auto* classes = app.add_subcommand("classes", "Top-event chain and class partition");
    classes->add_option("model", model)->required();
    classes->add_flag("--enumerate", enumerate, "List every event by class");
    add_json(classes);
    classes->callback([&] { run = [&] { return cmd_classes(ctx, model, enumerate); }; });

    std::string ev_a;
    std::string ev_b;
    std::string ev_c;
    auto* nullity = app.add_subcommand("nullity", "Is B null at A");
    nullity->add_option("model", model)->required();
    nullity->add_option("B", ev_b)->required();
    nullity->add_option("A", ev_a)->required();
    add_json(nullity);
    nullity->callback([&] { run = [&] { return cmd_nullity(ctx, model, ev_b, ev_a); }; });

    auto* qualprob = app.add_subcommand("qualprob", "Compare P_A(B) with P_A(C)");
    qualprob->add_option("model", model)->required();
    qualprob->add_option("A", ev_a)->required();
    qualprob->add_option("B", ev_b)->required();
    qualprob->add_option("C", ev_c)->required();
    add_json(qualprob);
    qualprob->callback([&] { run = [&] { return cmd_qualprob(ctx, model, ev_a, ev_b, ev_c); }; });

    LotteryArgs lot;
    auto* lottery = app.add_subcommand("lottery", "Induced lotteries, or an act realizing a lottery");
    lottery->add_option("model", lot.model)->required();
    lottery->add_option("event", lot.event)->required();
    lottery->add_option("acts", lot.acts, "One or two act files");
    lottery->add_option("--realize", lot.realize, "Lottery file to realize as an act");
    lottery->add_option("--fill", lot.fill, "Act used off the event when realizing");
    add_json(lottery);
    lottery->callback([&] { run = [&] { return cmd_lottery(ctx, lot); }; });

    std::string suite = "core";
    std::vector<std::string> only;
    AxiomOptions axiom_options;
    auto* axioms = app.add_subcommand("axioms", "Check axioms on a model or preference table");
    axioms->add_option("input", model, "Model or table file")->required();
    axioms->add_option("--suite", suite, "core or all")->check(CLI::IsMember({"core", "all"}));
    axioms->add_option("--axiom", only, "Check only these axioms");
    axioms->add_option("--max-witnesses", axiom_options.max_witnesses);
    axioms->add_option("--sample-cap", axiom_options.p6_instance_cap, "Small-event instances before sampling");
    axioms->add_option("--seed", axiom_options.seed);
    add_json(axioms);
    axioms->callback([&] { run = [&] { return cmd_axioms(ctx, model, suite, only, axiom_options); }; });

    auto* derive = app.add_subcommand("derive-table", "Emit the preference table of a model");
    derive->add_option("model", model)->required();
    derive->add_option("-o,--output", output, "Output file (default stdout)");
    add_json(derive);
    derive->callback([&] { run = [&] { return cmd_derive_table(ctx, model, output); }; });

    auto* synth = app.add_subcommand("synthesize", "Reconstruct a model from a preference table");
    synth->add_option("table", model, "Table file")->required();
    synth->add_option("-o,--output", output, "Model output file (default stdout)");
    add_json(synth);
    synth->callback([&] { run = [&] { return cmd_synthesize(ctx, model, output); }; });

    std::size_t max_blocks = 0;
    std::size_t listed = 10;
    auto* observe = app.add_subcommand("observability", "Compare indexed, Savage and strong conditioning");
    observe->add_option("model", model)->required();
    observe->add_option("--max-blocks", max_blocks, "Largest partition searched (0 = |A|)");
    observe->add_option("--list", listed, "Fineness failures listed");
    add_json(observe);
    observe->callback([&] { run = [&] { return cmd_observability(ctx, model, max_blocks, listed); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    try {
        ctx.caps = caps_from_env();
        return run();
    } catch (const CapExceeded& e) {
        std::cerr << "error: CapExceeded: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        if (const auto* u = dynamic_cast<const Unrepresentable*>(&e)) {
            std::cerr << "infeasible core:\n";
            for (auto i : u->core()) {
                std::cerr << "  " << u->system().constraints()[i].label << "\n";
            }
        }
        switch (e.kind()) {
            case ErrorKind::Unrepresentable:
            case ErrorKind::AxiomPrecheckFailed:
            case ErrorKind::VerificationFailed: return kViolation;
            default: return kInputError;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
