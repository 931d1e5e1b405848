#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ssi/game.hpp"

namespace ssi {

/**
 * Outcome of a play seen from player Even: either one of the two infinite
 * sentinels, or a count of how often each priority was visited on the way
 * to the sink.
 *
 * Finite values are stored as a sparse list of (priority, count) pairs in
 * descending priority order with strictly positive counts. The ordering
 * compares the highest priority at which two count vectors differ; more
 * visits of an even priority is better for Even, more visits of an odd
 * priority is worse.
 */
class PlayValue
{
public:
    enum class Kind : std::uint8_t { NegInfinity, Finite, PosInfinity };

    struct Entry
    {
        Priority priority;
        std::uint32_t count;
        friend bool operator==(const Entry &, const Entry &) = default;
    };

    /// The empty finite vector (value of the sink).
    PlayValue() = default;

    static PlayValue neg_infinity() { return PlayValue(Kind::NegInfinity); }
    static PlayValue pos_infinity() { return PlayValue(Kind::PosInfinity); }

    /// Finite value from (priority, count) pairs in any order; zero counts are dropped.
    static PlayValue from_counts(std::initializer_list<std::pair<Priority, std::uint32_t>> counts)
    {
        PlayValue v;
        for (auto [q, c] : counts) v.add(q, c);
        return v;
    }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_infinite() const noexcept { return kind_ != Kind::Finite; }

    /// Count at priority q (0 when absent or when the value is infinite).
    std::uint32_t count(Priority q) const noexcept
    {
        for (const auto &e : entries_) {
            if (e.priority == q) return e.count;
            if (e.priority < q) break;
        }
        return 0;
    }

    std::span<const Entry> entries() const noexcept { return entries_; }

    /// Adds `times` visits of priority q. Infinite values are left unchanged.
    PlayValue &add(Priority q, std::uint32_t times = 1)
    {
        if (kind_ != Kind::Finite || times == 0) return *this;
        auto it = entries_.begin();
        while (it != entries_.end() && it->priority > q) ++it;
        if (it != entries_.end() && it->priority == q) {
            it->count += times;
        } else {
            entries_.insert(it, Entry{q, times});
        }
        return *this;
    }

    friend std::strong_ordering operator<=>(const PlayValue &a, const PlayValue &b) noexcept
    {
        if (a.kind_ != b.kind_ || a.kind_ != Kind::Finite) {
            return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        }
        // Walk both lists from the top; the first mismatch decides.
        auto ia = a.entries_.begin(), ib = b.entries_.begin();
        while (ia != a.entries_.end() || ib != b.entries_.end()) {
            Priority q;
            std::uint32_t ca = 0, cb = 0;
            if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->priority > ib->priority)) {
                q = ia->priority;
                ca = ia->count;
                ++ia;
            } else if (ia == a.entries_.end() || ib->priority > ia->priority) {
                q = ib->priority;
                cb = ib->count;
                ++ib;
            } else {
                q = ia->priority;
                ca = ia->count;
                cb = ib->count;
                ++ia;
                ++ib;
            }
            if (ca != cb) {
                return is_even(q) ? (ca <=> cb) : (cb <=> ca);
            }
        }
        return std::strong_ordering::equal;
    }

    friend bool operator==(const PlayValue &a, const PlayValue &b) noexcept
    {
        return a.kind_ == b.kind_ && a.entries_ == b.entries_;
    }

    std::string to_string() const
    {
        switch (kind_) {
        case Kind::NegInfinity: return "-inf";
        case Kind::PosInfinity: return "+inf";
        case Kind::Finite: break;
        }
        std::string s = "{";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(entries_[i].priority) + ":" + std::to_string(entries_[i].count);
        }
        return s + "}";
    }

    friend std::ostream &operator<<(std::ostream &os, const PlayValue &v) { return os << v.to_string(); }

private:
    explicit PlayValue(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Finite;
    std::vector<Entry> entries_;
};

inline std::strong_ordering compare(const PlayValue &a, const PlayValue &b) noexcept { return a <=> b; }

inline PlayValue add_priority(PlayValue a, Priority q)
{
    a.add(q);
    return a;
}

/// Is `a` strictly better than `b` for player p?
inline bool better_for(Player p, const PlayValue &a, const PlayValue &b) noexcept
{
    return p == Player::Even ? a > b : a < b;
}

} // namespace ssi
