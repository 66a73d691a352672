#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexeu {

/// Bit i set <=> state i is a member. State spaces are limited to 64 states.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxStates = 64;

/// Largest state count for which the full powerset is enumerated.
inline constexpr std::size_t kDefaultEventCap = 16;

/** Finite, ordered set of distinct state labels. */
class StateSpace {
public:
    explicit StateSpace(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t index) const { return labels_.at(index); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    /// Mask with every state set.
    Mask full_mask() const noexcept;

    bool operator==(const StateSpace& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
};

using StateSpacePtr = std::shared_ptr<const StateSpace>;

StateSpacePtr make_state_space(std::vector<std::string> labels);

/// Pointer identity or label equality.
bool same_space(const StateSpacePtr& a, const StateSpacePtr& b);

/** A subset of a state space. */
class Event {
public:
    Event(StateSpacePtr space, Mask members);

    static Event empty(StateSpacePtr space) { return Event(std::move(space), 0); }
    static Event full(StateSpacePtr space);
    /// Throws UnknownState on a label the space does not contain.
    static Event of(StateSpacePtr space, std::initializer_list<std::string_view> labels);
    static Event of(StateSpacePtr space, const std::vector<std::string>& labels);

    const StateSpacePtr& space() const noexcept { return space_; }
    Mask mask() const noexcept { return mask_; }
    bool contains(std::size_t state) const noexcept { return state < 64 && ((mask_ >> state) & 1U); }
    bool is_empty() const noexcept { return mask_ == 0; }
    std::size_t size() const noexcept;
    /// Member state indices in canonical order.
    std::vector<std::size_t> members() const;
    /// Member labels in canonical order.
    std::vector<std::string> labels() const;

    /// Throws SpaceMismatch when the spaces differ.
    bool subset_of(const Event& other) const;

    /// Events over different spaces never compare equal.
    friend bool operator==(const Event& a, const Event& b) {
        return a.mask_ == b.mask_ && same_space(a.space_, b.space_);
    }

private:
    StateSpacePtr space_;
    Mask mask_;
};

enum class SetOp { Union, Intersect, Difference, Complement, SymmetricDifference };

/// Complement takes only `a`; the other operations require `b` over the same space.
Event set_op(SetOp op, const Event& a, const std::optional<Event>& b = std::nullopt);

Event unite(const Event& a, const Event& b);
Event intersect(const Event& a, const Event& b);
Event difference(const Event& a, const Event& b);
Event complement(const Event& a);
Event symmetric_difference(const Event& a, const Event& b);

/// Throws SpaceMismatch unless the two events share a space.
void require_same_space(const Event& a, const Event& b);

using Partition = std::vector<Event>;

/**
 * Visit every set partition of `a` into at most `max_blocks` nonempty blocks,
 * in restricted-growth-string order. The visitor returns false to stop early.
 * Throws EmptyEvent for the empty event.
 */
void for_each_partition(const Event& a, std::size_t max_blocks,
                        const std::function<bool(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(const Event& a, std::size_t max_blocks);

/// Number of partitions of a k-set into at most `max_blocks` blocks (saturates at UINT64_MAX).
std::uint64_t count_partitions(std::size_t k, std::size_t max_blocks);

/// Iterate all submasks of `mask`, including 0 and `mask` itself, in increasing order.
template <typename Fn>
void for_each_submask(Mask mask, Fn&& fn) {
    Mask sub = 0;
    while (true) {
        fn(sub);
        if (sub == mask) {
            break;
        }
        sub = (sub - mask) & mask;
    }
}

}  // namespace lexeu
