#pragma once

/**
 * Knight steps, path words and the path classes built from them.
 *
 * A path word is a sequence of right-moves of a chess knight,
 *   N = (1,2), n = (1,-2), E = (2,1), e = (2,-1),
 * that never goes below the x-axis. Every such word is a prefix of a complete
 * path (one can always descend back to the axis), so "partial path" and
 * "nonnegative word" are the same set.
 *
 * Text encoding: one character per step, N n E e (case distinguishes the
 * barred, downward variants).
 */

#include "knightpaths/error.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace knightpaths {

enum class Step : std::uint8_t { N, NBar, E, EBar };

/// Fixed enumeration order N < NBar < E < EBar.
inline constexpr std::array<Step, 4> all_steps{Step::N, Step::NBar, Step::E, Step::EBar};

constexpr int dx(Step s) noexcept { return (s == Step::N || s == Step::NBar) ? 1 : 2; }

constexpr int dy(Step s) noexcept {
    switch (s) {
        case Step::N: return 2;
        case Step::NBar: return -2;
        case Step::E: return 1;
        case Step::EBar: return -1;
    }
    return 0;
}

constexpr bool is_up(Step s) noexcept { return dy(s) > 0; }

constexpr char to_char(Step s) noexcept {
    switch (s) {
        case Step::N: return 'N';
        case Step::NBar: return 'n';
        case Step::E: return 'E';
        case Step::EBar: return 'e';
    }
    return '?';
}

enum class PathClass { Knight, Zigzag };
enum class Measure { Size, Length };

constexpr std::string_view to_string(PathClass c) noexcept { return c == PathClass::Knight ? "knight" : "zigzag"; }
constexpr std::string_view to_string(Measure m) noexcept { return m == Measure::Size ? "size" : "length"; }

/// Contribution of one step to the measure: its abscissa for size, 1 for length.
constexpr int weight(Step s, Measure m) noexcept { return m == Measure::Size ? dx(s) : 1; }

class PathWord {
public:
    PathWord() = default;

    /// Throws NegativePrefix(len) where len is the length of the first prefix below the axis.
    explicit PathWord(std::vector<Step> steps) : steps_(std::move(steps)) {
        long height = 0;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            height += dy(steps_[i]);
            if (height < 0) throw error(errc::negative_prefix, "prefix dips below the x-axis", i + 1);
            size_ += dx(steps_[i]);
        }
        height_ = height;
    }

    std::span<const Step> steps() const noexcept { return steps_; }
    bool empty() const noexcept { return steps_.empty(); }
    std::size_t length() const noexcept { return steps_.size(); }
    long size() const noexcept { return size_; }
    long final_height() const noexcept { return height_; }
    long measure(Measure m) const noexcept { return m == Measure::Size ? size_ : static_cast<long>(length()); }

    friend bool operator==(const PathWord&, const PathWord&) = default;
    friend auto operator<=>(const PathWord& a, const PathWord& b) { return a.steps_ <=> b.steps_; }

private:
    std::vector<Step> steps_;
    long size_ = 0;
    long height_ = 0;
};

inline PathWord parse_word(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'N': steps.push_back(Step::N); break;
            case 'n': steps.push_back(Step::NBar); break;
            case 'E': steps.push_back(Step::E); break;
            case 'e': steps.push_back(Step::EBar); break;
            default:
                throw error(errc::unknown_symbol, std::string("'") + text[i] + "' is not one of N n E e", i);
        }
    }
    return PathWord(std::move(steps));
}

inline std::string render_word(const PathWord& word) {
    std::string out;
    out.reserve(word.length());
    for (Step s : word.steps()) out.push_back(to_char(s));
    return out;
}

/// Consecutive steps strictly alternate vertical direction.
inline bool alternates(std::span<const Step> steps) noexcept {
    for (std::size_t i = 1; i < steps.size(); ++i)
        if (is_up(steps[i - 1]) == is_up(steps[i])) return false;
    return true;
}

inline bool is_member(const PathWord& word, PathClass cls) noexcept {
    return cls == PathClass::Knight || alternates(word.steps());
}

/**
 * Depth-first walk over every word of `cls` whose measure is at most
 * `max_value`, in lexicographic step order. The visitor sees each word once,
 * as (steps, measure value, final height). This is the brute-force oracle
 * the counting tables are checked against; it shares no code with them.
 */
template <class Visitor>
void for_each_partial(PathClass cls, Measure measure, long max_value, Visitor&& visit) {
    std::vector<Step> stack;
    const auto recurse = [&](auto&& self, long value, long height) -> void {
        visit(std::span<const Step>(stack), value, height);
        for (Step s : all_steps) {
            if (height + dy(s) < 0) continue;
            if (cls == PathClass::Zigzag && !stack.empty() && is_up(stack.back()) == is_up(s)) continue;
            const long next = value + weight(s, measure);
            if (next > max_value) continue;
            stack.push_back(s);
            self(self, next, height + dy(s));
            stack.pop_back();
        }
    };
    if (max_value >= 0) recurse(recurse, 0, 0);
}

inline std::vector<PathWord> enumerate_partial(PathClass cls, Measure measure, long value, long height) {
    std::vector<PathWord> out;
    if (value < 0 || height < 0) return out;
    for_each_partial(cls, measure, value, [&](std::span<const Step> steps, long v, long h) {
        if (v == value && h == height) out.emplace_back(std::vector<Step>(steps.begin(), steps.end()));
    });
    return out;
}

// Zigzag grammar ----------------------------------------------------------

struct DecompEmpty {
    friend bool operator==(const DecompEmpty&, const DecompEmpty&) = default;
};
/// N n beta
struct DecompNN {
    PathWord beta;
    friend bool operator==(const DecompNN&, const DecompNN&) = default;
};
/// E e beta
struct DecompEE {
    PathWord beta;
    friend bool operator==(const DecompEE&, const DecompEE&) = default;
};
/// N e beta E n gamma, beta lifted to baseline 1
struct DecompNE {
    PathWord beta;
    PathWord gamma;
    friend bool operator==(const DecompNE&, const DecompNE&) = default;
};

using Decomposition = std::variant<DecompEmpty, DecompNN, DecompEE, DecompNE>;

namespace detail {

/// Which grammar form a zigzag axis segment has, with the index of the E that
/// closes the N e ... E n frame (only meaningful for the NE form).
enum class Form { Empty, NN, EE, NE };

struct SplitPoint {
    Form form;
    std::size_t frame_close = 0;
};

/// Caller guarantees `seg` is an alternating word that starts and ends at the
/// same height and stays at or above it.
inline SplitPoint split_zigzag(std::span<const Step> seg) {
    if (seg.empty()) return {Form::Empty};
    if (seg.size() < 2) throw error(errc::not_on_axis, "single step cannot return to the axis");
    if (seg[0] == Step::N && seg[1] == Step::NBar) return {Form::NN};
    if (seg[0] == Step::E && seg[1] == Step::EBar) return {Form::EE};
    if (seg[0] == Step::N && seg[1] == Step::EBar) {
        // First return to the base closes the frame; the two steps before it are E n.
        long h = 1;
        for (std::size_t i = 2; i < seg.size(); ++i) {
            h += dy(seg[i]);
            if (h == 0) {
                if (seg[i] != Step::NBar || seg[i - 1] != Step::E)
                    throw error(errc::not_zigzag, "frame not closed by E n", i);
                return {Form::NE, i - 1};
            }
        }
        throw error(errc::not_on_axis, "N e frame never returns to the axis");
    }
    throw error(errc::not_zigzag, "word does not start with Nn, Ee or Ne");
}

inline void require_zigzag_axis(const PathWord& word) {
    if (!alternates(word.steps())) throw error(errc::not_zigzag, "consecutive steps share a direction");
    if (word.final_height() != 0) throw error(errc::not_on_axis, "final height " + std::to_string(word.final_height()));
}

inline PathWord slice(std::span<const Step> s, std::size_t from, std::size_t to) {
    return PathWord(std::vector<Step>(s.begin() + static_cast<std::ptrdiff_t>(from),
                                      s.begin() + static_cast<std::ptrdiff_t>(to)));
}

}  // namespace detail

inline Decomposition decompose_zigzag(const PathWord& word) {
    detail::require_zigzag_axis(word);
    const auto s = word.steps();
    const auto split = detail::split_zigzag(s);
    switch (split.form) {
        case detail::Form::Empty: return DecompEmpty{};
        case detail::Form::NN: return DecompNN{detail::slice(s, 2, s.size())};
        case detail::Form::EE: return DecompEE{detail::slice(s, 2, s.size())};
        case detail::Form::NE:
            return DecompNE{detail::slice(s, 2, split.frame_close), detail::slice(s, split.frame_close + 2, s.size())};
    }
    return DecompEmpty{};
}

inline PathWord reassemble(const Decomposition& d) {
    std::vector<Step> out;
    const auto append = [&](std::initializer_list<Step> steps) { out.insert(out.end(), steps); };
    const auto append_word = [&](const PathWord& w) { out.insert(out.end(), w.steps().begin(), w.steps().end()); };
    std::visit(
        [&](const auto& form) {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, DecompNN>) {
                append({Step::N, Step::NBar});
                append_word(form.beta);
            } else if constexpr (std::is_same_v<T, DecompEE>) {
                append({Step::E, Step::EBar});
                append_word(form.beta);
            } else if constexpr (std::is_same_v<T, DecompNE>) {
                append({Step::N, Step::EBar});
                append_word(form.beta);
                append({Step::E, Step::NBar});
                append_word(form.gamma);
            }
        },
        d);
    return PathWord(std::move(out));
}

}  // namespace knightpaths
