#include "lexeu/feasibility.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lexeu {

std::string_view symbol(Relation r) {
    switch (r) {
        case Relation::Geq: return "≥";
        case Relation::Gt: return ">";
        case Relation::Eq: return "=";
    }
    return "?";
}

ConstraintSystem::ConstraintSystem(std::vector<std::string> variables) {
    for (auto& v : variables) {
        add_variable(std::move(v));
    }
}

std::size_t ConstraintSystem::add_variable(std::string name) {
    if (std::find(variables_.begin(), variables_.end(), name) != variables_.end()) {
        throw MalformedSystem("duplicate variable \"" + name + "\"");
    }
    variables_.push_back(std::move(name));
    return variables_.size() - 1;
}

void ConstraintSystem::add(LinearConstraint c) {
    for (const auto& [name, coef] : c.coefficients) {
        (void)coef;
        index_of(name);
    }
    constraints_.push_back(std::move(c));
}

void ConstraintSystem::add(const std::vector<std::pair<std::string, Rational>>& terms, Relation relation, Rational rhs,
                           std::string label) {
    LinearConstraint c;
    for (const auto& [name, coef] : terms) {
        c.coefficients[name] += coef;
    }
    c.relation = relation;
    c.rhs = std::move(rhs);
    c.label = std::move(label);
    add(std::move(c));
}

std::size_t ConstraintSystem::index_of(std::string_view name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) {
        throw MalformedSystem("unknown variable \"" + std::string(name) + "\"");
    }
    return static_cast<std::size_t>(it - variables_.begin());
}

ConstraintSystem ConstraintSystem::subsystem(const std::vector<std::size_t>& indices) const {
    ConstraintSystem out;
    out.variables_ = variables_;
    for (auto i : indices) {
        out.constraints_.push_back(constraints_.at(i));
    }
    return out;
}

namespace {

std::vector<Rational> dense(const ConstraintSystem& sys, const LinearConstraint& c) {
    std::vector<Rational> a(sys.variables().size());
    for (const auto& [name, coef] : c.coefficients) {
        a[sys.index_of(name)] += coef;
    }
    return a;
}

Rational lhs(const std::vector<Rational>& a, const std::vector<Rational>& x) {
    Rational total = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] != 0) {
            total += a[j] * x[j];
        }
    }
    return total;
}

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/**
 * Simplex dictionary: basic[i] = rows[i][0] + Σ_j rows[i][1+j] · nonbasic[j],
 * objective = obj[0] + Σ_j obj[1+j] · nonbasic[j]. All variables are ≥ 0.
 */
class Dictionary {
public:
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> basic;
    std::vector<std::size_t> nonbasic;
    std::vector<Rational> obj;
    std::uint64_t pivots = 0;

    void pivot(std::size_t r, std::size_t c) {
        ++pivots;
        auto& row = rows[r];
        const Rational d = row[1 + c];
        const Rational inv = Rational(-1) / d;
        for (auto& x : row) {
            x *= inv;
        }
        row[1 + c] = Rational(1) / d;
        std::swap(basic[r], nonbasic[c]);
        auto substitute = [&](std::vector<Rational>& target) {
            const Rational a = target[1 + c];
            if (a == 0) {
                return;
            }
            target[1 + c] = 0;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j] != 0) {
                    target[j] += a * row[j];
                }
            }
        };
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r) {
                substitute(rows[i]);
            }
        }
        substitute(obj);
    }

    /// Bland's rule; false when unbounded.
    bool optimize() {
        for (;;) {
            std::size_t c = kNone;
            for (std::size_t j = 0; j < nonbasic.size(); ++j) {
                if (obj[1 + j] > 0 && (c == kNone || nonbasic[j] < nonbasic[c])) {
                    c = j;
                }
            }
            if (c == kNone) {
                return true;
            }
            std::size_t r = kNone;
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& coef = rows[i][1 + c];
                if (coef >= 0) {
                    continue;
                }
                Rational ratio = rows[i][0] / -coef;
                if (r == kNone || ratio < best || (ratio == best && basic[i] < basic[r])) {
                    r = i;
                    best = std::move(ratio);
                }
            }
            if (r == kNone) {
                return false;
            }
            pivot(r, c);
        }
    }

    Rational value_of(std::size_t var) const {
        for (std::size_t i = 0; i < basic.size(); ++i) {
            if (basic[i] == var) {
                return rows[i][0];
            }
        }
        return 0;
    }

    void set_objective(const std::vector<std::pair<std::size_t, Rational>>& terms) {
        obj.assign(nonbasic.size() + 1, Rational(0));
        for (const auto& [var, coef] : terms) {
            auto nb = std::find(nonbasic.begin(), nonbasic.end(), var);
            if (nb != nonbasic.end()) {
                obj[1 + static_cast<std::size_t>(nb - nonbasic.begin())] += coef;
                continue;
            }
            for (std::size_t i = 0; i < basic.size(); ++i) {
                if (basic[i] == var) {
                    for (std::size_t j = 0; j < obj.size(); ++j) {
                        obj[j] += coef * rows[i][j];
                    }
                }
            }
        }
    }

    /// Phase one with an auxiliary variable; false when the system is empty.
    bool make_feasible(std::size_t aux_id) {
        std::size_t worst = kNone;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][0] < 0 && (worst == kNone || rows[i][0] < rows[worst][0])) {
                worst = i;
            }
        }
        if (worst == kNone) {
            return true;
        }
        nonbasic.push_back(aux_id);
        for (auto& row : rows) {
            row.emplace_back(1);
        }
        const std::size_t c = nonbasic.size() - 1;
        set_objective({{aux_id, Rational(-1)}});
        pivot(worst, c);
        optimize();
        if (obj[0] < 0) {
            return false;
        }
        for (std::size_t i = 0; i < basic.size(); ++i) {
            if (basic[i] != aux_id) {
                continue;
            }
            std::size_t col = kNone;
            for (std::size_t j = 0; j < nonbasic.size(); ++j) {
                if (rows[i][1 + j] != 0 && (col == kNone || nonbasic[j] < nonbasic[col])) {
                    col = j;
                }
            }
            if (col == kNone) {
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
                basic.erase(basic.begin() + static_cast<std::ptrdiff_t>(i));
                return true;
            }
            pivot(i, col);
            break;
        }
        const auto pos = static_cast<std::size_t>(std::find(nonbasic.begin(), nonbasic.end(), aux_id) - nonbasic.begin());
        nonbasic.erase(nonbasic.begin() + static_cast<std::ptrdiff_t>(pos));
        for (auto& row : rows) {
            row.erase(row.begin() + static_cast<std::ptrdiff_t>(pos + 1));
        }
        return true;
    }
};

struct StandardForm {
    Dictionary dict;
    std::size_t variables = 0;
    std::size_t eps = kNone;
    std::size_t aux = 0;
};

/// x_j = y_{2j} - y_{2j+1}; ε (when requested) is the next id; slacks follow.
StandardForm standard_form(const ConstraintSystem& sys, bool with_eps) {
    StandardForm sf;
    sf.variables = sys.variables().size();
    std::size_t next = 2 * sf.variables;
    if (with_eps) {
        sf.eps = next++;
    }
    sf.aux = next++;
    auto& d = sf.dict;
    for (std::size_t v = 0; v < next - 1; ++v) {
        d.nonbasic.push_back(v);
    }
    const std::size_t width = d.nonbasic.size() + 1;
    auto add_row = [&](std::vector<Rational> row) {
        d.rows.push_back(std::move(row));
        d.basic.push_back(next++);
    };
    for (const auto& c : sys.constraints()) {
        const auto a = dense(sys, c);
        std::vector<Rational> row(width);
        row[0] = -c.rhs;
        for (std::size_t j = 0; j < a.size(); ++j) {
            row[1 + 2 * j] = a[j];
            row[2 + 2 * j] = -a[j];
        }
        if (c.relation == Relation::Gt && with_eps) {
            row[1 + sf.eps] = -1;
        }
        if (c.relation == Relation::Eq) {
            std::vector<Rational> neg(width);
            for (std::size_t j = 0; j < width; ++j) {
                neg[j] = -row[j];
            }
            add_row(std::move(neg));
        }
        add_row(std::move(row));
    }
    if (with_eps) {
        std::vector<Rational> row(width);
        row[0] = 1;
        row[1 + sf.eps] = -1;
        add_row(std::move(row));
    }
    d.obj.assign(width, Rational(0));
    return sf;
}

std::vector<Rational> extract(const StandardForm& sf) {
    std::vector<Rational> x(sf.variables);
    for (std::size_t j = 0; j < sf.variables; ++j) {
        x[j] = sf.dict.value_of(2 * j) - sf.dict.value_of(2 * j + 1);
    }
    return x;
}

void check_caps(const ConstraintSystem& sys, const SolverCaps& caps) {
    if (sys.variables().size() > caps.max_variables) {
        throw CapExceeded("system has " + std::to_string(sys.variables().size()) + " variables, cap is " +
                              std::to_string(caps.max_variables),
                          sys.variables().size(), caps.max_variables);
    }
    if (sys.constraints().size() > caps.max_constraints) {
        throw CapExceeded("system has " + std::to_string(sys.constraints().size()) + " constraints, cap is " +
                              std::to_string(caps.max_constraints),
                          sys.constraints().size(), caps.max_constraints);
    }
}

}  // namespace

bool satisfies(const ConstraintSystem& sys, const std::vector<Rational>& x) {
    if (x.size() != sys.variables().size()) {
        return false;
    }
    for (const auto& c : sys.constraints()) {
        const Rational v = lhs(dense(sys, c), x);
        const bool ok = c.relation == Relation::Geq ? v >= c.rhs : c.relation == Relation::Gt ? v > c.rhs : v == c.rhs;
        if (!ok) {
            return false;
        }
    }
    return true;
}

FeasibilityResult solve(const ConstraintSystem& sys, const SolverCaps& caps) {
    check_caps(sys, caps);
    const bool has_strict = std::any_of(sys.constraints().begin(), sys.constraints().end(),
                                        [](const auto& c) { return c.relation == Relation::Gt; });
    auto sf = standard_form(sys, has_strict);
    FeasibilityResult result;
    if (!sf.dict.make_feasible(sf.aux)) {
        result.pivots = sf.dict.pivots;
        return result;
    }
    if (has_strict) {
        sf.dict.set_objective({{sf.eps, Rational(1)}});
        sf.dict.optimize();
        if (sf.dict.obj[0] <= 0) {
            result.pivots = sf.dict.pivots;
            return result;
        }
    }
    result.feasible = true;
    result.pivots = sf.dict.pivots;
    result.assignment = extract(sf);
    if (!satisfies(sys, result.assignment)) {
        throw std::logic_error("simplex returned a point that fails substitution");
    }
    for (const auto& c : sys.constraints()) {
        if (c.relation == Relation::Gt) {
            Rational margin = lhs(dense(sys, c), result.assignment) - c.rhs;
            if (!result.slack || margin < *result.slack) {
                result.slack = std::move(margin);
            }
        }
    }
    return result;
}

OptimumResult maximize(const ConstraintSystem& sys, const std::map<std::string, Rational>& objective,
                       const SolverCaps& caps) {
    check_caps(sys, caps);
    auto sf = standard_form(sys, false);
    OptimumResult result;
    if (!sf.dict.make_feasible(sf.aux)) {
        return result;
    }
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (const auto& [name, coef] : objective) {
        const auto j = sys.index_of(name);
        terms.emplace_back(2 * j, coef);
        terms.emplace_back(2 * j + 1, -coef);
    }
    sf.dict.set_objective(terms);
    if (!sf.dict.optimize()) {
        result.status = OptimumResult::Status::Unbounded;
        return result;
    }
    result.status = OptimumResult::Status::Optimal;
    result.assignment = extract(sf);
    result.value = sf.dict.obj[0];
    return result;
}

namespace {

struct FmRow {
    std::vector<Rational> a;
    Rational b;
    bool strict = false;
};

constexpr std::size_t kFmRowCap = 200000;

/// Scales the row so its first nonzero coefficient has magnitude one. False for a zero row.
bool normalize(FmRow& row) {
    for (const auto& x : row.a) {
        if (x != 0) {
            const Rational scale = 1 / abs(x);
            for (auto& y : row.a) {
                y *= scale;
            }
            row.b *= scale;
            return true;
        }
    }
    return false;
}

}  // namespace

bool fourier_motzkin_feasible(const ConstraintSystem& sys, std::size_t max_variables) {
    const auto n = sys.variables().size();
    if (n > max_variables) {
        throw CapExceeded("Fourier–Motzkin limited to " + std::to_string(max_variables) + " variables", n,
                          max_variables);
    }
    std::vector<FmRow> rows;
    for (const auto& c : sys.constraints()) {
        auto a = dense(sys, c);
        if (c.relation == Relation::Eq) {
            FmRow neg{a, -c.rhs, false};
            for (auto& x : neg.a) {
                x = -x;
            }
            rows.push_back(std::move(neg));
        }
        rows.push_back({std::move(a), c.rhs, c.relation == Relation::Gt});
    }
    auto reduce = [&](std::vector<FmRow>& in) {
        std::map<std::vector<Rational>, std::pair<Rational, bool>> best;
        for (auto& row : in) {
            if (!normalize(row)) {
                const bool ok = row.strict ? 0 > row.b : 0 >= row.b;
                if (!ok) {
                    return false;
                }
                continue;
            }
            auto [it, inserted] = best.emplace(row.a, std::make_pair(row.b, row.strict));
            if (!inserted) {
                auto& cur = it->second;
                if (row.b > cur.first || (row.b == cur.first && row.strict)) {
                    cur = {row.b, row.strict};
                }
            }
        }
        in.clear();
        for (auto& [a, bs] : best) {
            in.push_back({a, bs.first, bs.second});
        }
        return true;
    };
    if (!reduce(rows)) {
        return false;
    }
    for (std::size_t j = n; j-- > 0;) {
        std::vector<FmRow> pos;
        std::vector<FmRow> neg;
        std::vector<FmRow> next;
        for (auto& row : rows) {
            (row.a[j] > 0 ? pos : row.a[j] < 0 ? neg : next).push_back(std::move(row));
        }
        if (next.size() + pos.size() * neg.size() > kFmRowCap) {
            throw CapExceeded("Fourier–Motzkin row count exceeds cap", next.size() + pos.size() * neg.size(),
                              kFmRowCap);
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                const Rational wp = -q.a[j];
                const Rational wq = p.a[j];
                FmRow combined{std::vector<Rational>(n), wp * p.b + wq * q.b, p.strict || q.strict};
                for (std::size_t k = 0; k < n; ++k) {
                    combined.a[k] = wp * p.a[k] + wq * q.a[k];
                }
                combined.a[j] = 0;
                next.push_back(std::move(combined));
            }
        }
        rows = std::move(next);
        if (!reduce(rows)) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> infeasible_subsystem(const ConstraintSystem& sys, const SolverCaps& caps) {
    if (solve(sys, caps).feasible) {
        throw MalformedSystem("system is feasible; no infeasible subsystem exists");
    }
    std::vector<std::size_t> keep(sys.constraints().size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        keep[i] = i;
    }
    for (std::size_t i = 0; i < keep.size();) {
        auto trial = keep;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (!solve(sys.subsystem(trial), caps).feasible) {
            keep = std::move(trial);
        } else {
            ++i;
        }
    }
    return keep;
}

}  // namespace lexeu
