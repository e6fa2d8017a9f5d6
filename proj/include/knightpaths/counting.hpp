#pragma once

/**
 * Exact counts of partial paths by (measure value, final height, direction of
 * the last step), over big integers.
 *
 * The `up` family counts paths whose last step is N or E (the f_k series),
 * the `down` family those ending with n or e (the g_k series). The empty path
 * is counted once, in up(0, 0).
 *
 * Tables are filled by a forward (push) DP. `check_recurrences` evaluates the
 * pull-form recurrences independently and reports the first cell where they
 * disagree with the table.
 */

#include "knightpaths/bigint.hpp"
#include "knightpaths/error.hpp"
#include "knightpaths/paths.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace knightpaths {

/// Lowest height allowed after the origin. `Positive` keeps every non-initial
/// point strictly above the axis (the walks counted by the basketball
/// height-k radicals).
enum class Floor { NonNegative, Positive };

/// Direction of the previous step when a transition fires.
enum class Prev { Start, Up, Down };

/// One (step, previous direction) transition of the DP; used to build
/// deliberately broken tables for mutation smoke tests.
struct Transition {
    Step step;
    Prev prev;
    friend bool operator==(const Transition&, const Transition&) = default;
};

/// False for a down step out of the start state: the start state is the
/// origin, so that transition is blocked by the floor and never fires.
constexpr bool fires(Transition t) noexcept { return t.prev != Prev::Start || is_up(t.step); }

/// The ten transitions the DP can take, in step-major order.
inline std::vector<Transition> live_transitions() {
    std::vector<Transition> out;
    for (Step s : all_steps)
        for (Prev p : {Prev::Start, Prev::Up, Prev::Down})
            if (fires({s, p})) out.push_back({s, p});
    return out;
}

class CountTable {
public:
    CountTable(PathClass cls, Measure measure, long max_value, Floor floor = Floor::NonNegative)
        : cls_(cls), measure_(measure), floor_(floor), max_value_(max_value), max_height_(2 * max_value),
          up_(cells(), 0), down_(cells(), 0) {
        if (max_value < 0) throw error(errc::invalid_argument, "max_value must be >= 0");
    }

    PathClass path_class() const noexcept { return cls_; }
    Measure measure() const noexcept { return measure_; }
    Floor floor() const noexcept { return floor_; }
    long max_value() const noexcept { return max_value_; }
    long max_height() const noexcept { return max_height_; }

    const BigInt& up(long n, long k) const { return at(up_, n, k); }
    const BigInt& down(long n, long k) const { return at(down_, n, k); }
    BigInt total(long n, long k) const { return up(n, k) + down(n, k); }

    BigInt& mutable_up(long n, long k) { return up_[index(n, k)]; }
    BigInt& mutable_down(long n, long k) { return down_[index(n, k)]; }

private:
    std::size_t cells() const { return static_cast<std::size_t>((max_value_ + 1) * (max_height_ + 1)); }
    std::size_t index(long n, long k) const { return static_cast<std::size_t>(n * (max_height_ + 1) + k); }

    const BigInt& at(const std::vector<BigInt>& v, long n, long k) const {
        static const BigInt zero = 0;
        if (n < 0 || n > max_value_)
            throw error(errc::out_of_range,
                        "value " + std::to_string(n) + " outside table [0, " + std::to_string(max_value_) + "]");
        if (k < 0 || k > max_height_) return zero;
        return v[index(n, k)];
    }

    PathClass cls_;
    Measure measure_;
    Floor floor_;
    long max_value_;
    long max_height_;
    std::vector<BigInt> up_;
    std::vector<BigInt> down_;
};

inline CountTable build_table(PathClass cls, Measure measure, long n_max, Floor floor = Floor::NonNegative,
                              std::optional<Transition> dropped = std::nullopt) {
    if (dropped && !fires(*dropped))
        throw error(errc::invalid_argument, std::string("transition ") + to_char(dropped->step) +
                                                " from the start state never fires");
    CountTable t(cls, measure, n_max, floor);
    const long lowest = floor == Floor::Positive ? 1 : 0;

    const auto push = [&](const BigInt& count, long n, long k, Prev prev) {
        if (count.is_zero()) return;
        for (Step s : all_steps) {
            if (cls == PathClass::Zigzag && prev != Prev::Start && (prev == Prev::Up) == is_up(s)) continue;
            if (dropped && dropped->step == s && dropped->prev == prev) continue;
            const long nn = n + weight(s, measure);
            const long kk = k + dy(s);
            if (nn > n_max || kk < lowest) continue;
            (is_up(s) ? t.mutable_up(nn, kk) : t.mutable_down(nn, kk)) += count;
        }
    };

    push(BigInt(1), 0, 0, Prev::Start);
    for (long n = 0; n <= n_max; ++n) {
        for (long k = 0; k <= t.max_height(); ++k) {
            // up(0, 0) is the empty path and is pushed above as Prev::Start.
            if (n > 0 || k > 0) push(t.up(n, k), n, k, Prev::Up);
            push(t.down(n, k), n, k, Prev::Down);
        }
    }
    t.mutable_up(0, 0) = 1;
    return t;
}

inline BigInt count_partial(const CountTable& table, long n, long k) { return table.total(n, k); }

inline BigInt count_partial(PathClass cls, Measure measure, long n, long k) {
    if (n < 0) throw error(errc::out_of_range, "negative measure value");
    return build_table(cls, measure, n).total(n, k);
}

inline BigInt count_total_over_heights(const CountTable& table, long n) {
    BigInt sum = 0;
    for (long k = 0; k <= table.max_height(); ++k) sum += table.total(n, k);
    return sum;
}

inline BigInt count_total_over_heights(PathClass cls, Measure measure, long n) {
    if (n < 0) throw error(errc::out_of_range, "negative measure value");
    return count_total_over_heights(build_table(cls, measure, n), n);
}

inline std::vector<BigInt> axis_sequence(const CountTable& table, long n_max) {
    std::vector<BigInt> out;
    for (long n = 0; n <= n_max; ++n) out.push_back(table.total(n, 0));
    return out;
}

inline std::vector<BigInt> axis_sequence(PathClass cls, Measure measure, long n_max) {
    if (n_max < 0) return {};
    return axis_sequence(build_table(cls, measure, n_max), n_max);
}

struct RecurrenceViolation {
    bool up_family;
    long n;
    long k;
    BigInt expected;
    BigInt actual;
};

/**
 * Re-derives every cell of a NonNegative table from the pull-form equations
 * (f_0 = 1, f_1, f_2 special cases, then the general f_k and g_k rules) and
 * returns the first disagreement.
 */
inline std::optional<RecurrenceViolation> check_recurrences(const CountTable& t) {
    if (t.floor() != Floor::NonNegative) throw error(errc::invalid_argument, "recurrences describe NonNegative tables");
    const auto U = [&](long n, long k) -> BigInt { return n < 0 ? BigInt(0) : t.up(n, k); };
    const auto D = [&](long n, long k) -> BigInt { return n < 0 ? BigInt(0) : t.down(n, k); };
    const auto T = [&](long n, long k) -> BigInt { return U(n, k) + D(n, k); };
    // z-shift of a step that moves one or two units vertically.
    const bool size = t.measure() == Measure::Size;
    const long wN = 1;             // N and n
    const long wE = size ? 2 : 1;  // E and e

    for (long n = 0; n <= t.max_value(); ++n) {
        for (long k = 0; k <= t.max_height(); ++k) {
            BigInt f, g;
            if (t.path_class() == PathClass::Knight) {
                if (k == 0) f = n == 0 ? 1 : 0;
                else if (k == 1) f = T(n - wE, 0);
                else f = T(n - wE, k - 1) + T(n - wN, k - 2);
                g = T(n - wE, k + 1) + T(n - wN, k + 2);
            } else {
                if (k == 0) f = n == 0 ? 1 : 0;
                else if (k == 1) f = U(n - wE, 0) + D(n - wE, 0);
                else if (k == 2) f = U(n - wN, 0) + D(n - wN, 0) + D(n - wE, 1);
                else f = D(n - wE, k - 1) + D(n - wN, k - 2);
                g = U(n - wE, k + 1) + U(n - wN, k + 2);
            }
            if (f != t.up(n, k)) return RecurrenceViolation{true, n, k, f, t.up(n, k)};
            if (g != t.down(n, k)) return RecurrenceViolation{false, n, k, g, t.down(n, k)};
        }
    }
    return std::nullopt;
}

}  // namespace knightpaths
