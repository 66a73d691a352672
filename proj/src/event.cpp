#include "lexeu/event.hpp"

#include "lexeu/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

namespace lexeu {

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw InvalidModel("state space must contain at least one state");
    }
    if (labels_.size() > kMaxStates) {
        throw InvalidModel("state space exceeds " + std::to_string(kMaxStates) + " states");
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : labels_) {
        if (!seen.insert(label).second) {
            throw InvalidModel("duplicate state label \"" + label + "\"");
        }
    }
}

std::optional<std::size_t> StateSpace::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

Mask StateSpace::full_mask() const noexcept {
    return labels_.size() == 64 ? ~Mask{0} : ((Mask{1} << labels_.size()) - 1);
}

StateSpacePtr make_state_space(std::vector<std::string> labels) {
    return std::make_shared<const StateSpace>(std::move(labels));
}

bool same_space(const StateSpacePtr& a, const StateSpacePtr& b) {
    return a == b || (a && b && *a == *b);
}

Event::Event(StateSpacePtr space, Mask members) : space_(std::move(space)), mask_(members) {
    if (!space_) {
        throw InvalidModel("event requires a state space");
    }
    if ((mask_ & ~space_->full_mask()) != 0) {
        throw UnknownState("event references a state outside its space");
    }
}

Event Event::full(StateSpacePtr space) {
    Mask m = space->full_mask();
    return Event(std::move(space), m);
}

Event Event::of(StateSpacePtr space, std::initializer_list<std::string_view> labels) {
    Mask m = 0;
    for (auto label : labels) {
        auto idx = space->index_of(label);
        if (!idx) {
            throw UnknownState("unknown state \"" + std::string(label) + "\"");
        }
        m |= Mask{1} << *idx;
    }
    return Event(std::move(space), m);
}

Event Event::of(StateSpacePtr space, const std::vector<std::string>& labels) {
    Mask m = 0;
    for (const auto& label : labels) {
        auto idx = space->index_of(label);
        if (!idx) {
            throw UnknownState("unknown state \"" + label + "\"");
        }
        m |= Mask{1} << *idx;
    }
    return Event(std::move(space), m);
}

std::size_t Event::size() const noexcept {
    return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::size_t> Event::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < space_->size(); ++i) {
        if (contains(i)) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::string> Event::labels() const {
    std::vector<std::string> out;
    for (auto i : members()) {
        out.push_back(space_->label(i));
    }
    return out;
}

void require_same_space(const Event& a, const Event& b) {
    if (!same_space(a.space(), b.space())) {
        throw SpaceMismatch("events belong to different state spaces");
    }
}

bool Event::subset_of(const Event& other) const {
    require_same_space(*this, other);
    return (mask_ & ~other.mask_) == 0;
}

Event set_op(SetOp op, const Event& a, const std::optional<Event>& b) {
    if (op == SetOp::Complement) {
        if (b) {
            throw SpaceMismatch("complement takes a single event");
        }
        return Event(a.space(), a.space()->full_mask() & ~a.mask());
    }
    if (!b) {
        throw SpaceMismatch("binary set operation requires two events");
    }
    require_same_space(a, *b);
    switch (op) {
        case SetOp::Union: return Event(a.space(), a.mask() | b->mask());
        case SetOp::Intersect: return Event(a.space(), a.mask() & b->mask());
        case SetOp::Difference: return Event(a.space(), a.mask() & ~b->mask());
        case SetOp::SymmetricDifference: return Event(a.space(), a.mask() ^ b->mask());
        case SetOp::Complement: break;
    }
    return a;
}

Event unite(const Event& a, const Event& b) { return set_op(SetOp::Union, a, b); }
Event intersect(const Event& a, const Event& b) { return set_op(SetOp::Intersect, a, b); }
Event difference(const Event& a, const Event& b) { return set_op(SetOp::Difference, a, b); }
Event complement(const Event& a) { return set_op(SetOp::Complement, a); }
Event symmetric_difference(const Event& a, const Event& b) {
    return set_op(SetOp::SymmetricDifference, a, b);
}

void for_each_partition(const Event& a, std::size_t max_blocks,
                        const std::function<bool(const Partition&)>& visit) {
    if (a.is_empty()) {
        throw EmptyEvent("cannot partition the empty event");
    }
    if (max_blocks == 0) {
        return;
    }
    const auto members = a.members();
    const std::size_t k = members.size();
    // growth[i] = block of members[i]; prefix_max[i] = max(growth[0..i]).
    std::vector<std::size_t> growth(k, 0);
    std::vector<std::size_t> prefix_max(k, 0);
    Partition blocks;
    while (true) {
        std::size_t block_count = prefix_max[k - 1] + 1;
        std::vector<Mask> masks(block_count, 0);
        for (std::size_t i = 0; i < k; ++i) {
            masks[growth[i]] |= Mask{1} << members[i];
        }
        blocks.clear();
        for (auto m : masks) {
            blocks.emplace_back(a.space(), m);
        }
        if (!visit(blocks)) {
            return;
        }
        // Next restricted growth string with at most max_blocks distinct values.
        std::size_t i = k - 1;
        while (i > 0 && !(growth[i] <= prefix_max[i - 1] && growth[i] + 1 < max_blocks)) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++growth[i];
        prefix_max[i] = std::max(prefix_max[i - 1], growth[i]);
        for (std::size_t j = i + 1; j < k; ++j) {
            growth[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

std::vector<Partition> enumerate_partitions(const Event& a, std::size_t max_blocks) {
    std::vector<Partition> out;
    for_each_partition(a, max_blocks, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::uint64_t count_partitions(std::size_t k, std::size_t max_blocks) {
    // Stirling numbers of the second kind, row by row, saturating.
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (std::size_t n = 1; n <= k; ++n) {
        std::vector<std::uint64_t> next(k + 1, 0);
        for (std::size_t j = 1; j <= n; ++j) {
            unsigned __int128 v = static_cast<unsigned __int128>(j) * row[j] + row[j - 1];
            next[j] = v > kMax ? kMax : static_cast<std::uint64_t>(v);
        }
        row = std::move(next);
    }
    unsigned __int128 total = 0;
    for (std::size_t j = 1; j <= std::min(k, max_blocks); ++j) {
        total += row[j];
    }
    if (k == 0) {
        total = 1;
    }
    return total > kMax ? kMax : static_cast<std::uint64_t>(total);
}

}  // namespace lexeu
