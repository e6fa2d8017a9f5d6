#pragma once

/**
 * psi: zigzag paths of size 2n on the axis  ->  peakless Motzkin words of length n+1
 * phi: zigzag paths of length 2n on the axis ->  Dyck words of length 2(n+1)
 *
 * Both maps follow the zigzag grammar
 *     eps | N n beta | E e beta | N e beta E n gamma
 * and emit
 *     psi:  F | F psi(beta) | U psi(beta) D | U psi(beta) D psi(gamma)
 *     phi:  UD | UD phi(beta) | U phi(beta) D | U phi(beta) D phi(gamma)
 * The inverses undo this by first-return matching on the image word. All four
 * run on an explicit work stack, so nesting depth is not bounded by the call stack.
 */

#include "knightpaths/error.hpp"
#include "knightpaths/paths.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace knightpaths {

enum class Letter : std::uint8_t { U, D, F };
enum class Alphabet { Motzkin, Dyck };

struct LatticeWord {
    Alphabet alphabet = Alphabet::Motzkin;
    std::vector<Letter> letters;

    std::size_t length() const noexcept { return letters.size(); }
    friend bool operator==(const LatticeWord&, const LatticeWord&) = default;
    friend auto operator<=>(const LatticeWord& a, const LatticeWord& b) { return a.letters <=> b.letters; }
};

constexpr char to_char(Letter l) noexcept { return l == Letter::U ? 'U' : l == Letter::D ? 'D' : 'F'; }
constexpr int level_change(Letter l) noexcept { return l == Letter::U ? 1 : l == Letter::D ? -1 : 0; }

inline LatticeWord parse_lattice_word(std::string_view text, Alphabet alphabet) {
    LatticeWord w{alphabet, {}};
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'U': w.letters.push_back(Letter::U); break;
            case 'D': w.letters.push_back(Letter::D); break;
            case 'F':
                if (alphabet == Alphabet::Motzkin) {
                    w.letters.push_back(Letter::F);
                    break;
                }
                [[fallthrough]];
            default:
                throw error(errc::unknown_symbol,
                            std::string("'") + text[i] + "' is not a " +
                                (alphabet == Alphabet::Motzkin ? "Motzkin letter (U D F)" : "Dyck letter (U D)"),
                            i);
        }
    }
    return w;
}

inline std::string render_lattice_word(const LatticeWord& w) {
    std::string out;
    for (Letter l : w.letters) out.push_back(to_char(l));
    return out;
}

namespace detail {

/// Nonnegative prefix levels ending at 0.
inline bool balanced(const std::vector<Letter>& letters) {
    long level = 0;
    for (Letter l : letters) {
        level += level_change(l);
        if (level < 0) return false;
    }
    return level == 0;
}

inline bool has_peak(const std::vector<Letter>& letters) {
    for (std::size_t i = 1; i < letters.size(); ++i)
        if (letters[i - 1] == Letter::U && letters[i] == Letter::D) return true;
    return false;
}

/// Index of the D matching the U at `open`.
inline std::size_t matching_down(const std::vector<Letter>& letters, std::size_t open, std::size_t end) {
    long level = 0;
    for (std::size_t i = open; i < end; ++i) {
        level += level_change(letters[i]);
        if (level == 0) return i;
    }
    throw error(errc::not_dyck, "unmatched U", open);
}

struct Range {
    std::size_t begin;
    std::size_t end;
};

}  // namespace detail

inline bool is_peakless_motzkin(const LatticeWord& m) {
    return m.alphabet == Alphabet::Motzkin && detail::balanced(m.letters) && !detail::has_peak(m.letters);
}

inline bool is_dyck(const LatticeWord& d) {
    for (Letter l : d.letters)
        if (l == Letter::F) return false;
    return detail::balanced(d.letters);
}

namespace detail {

/// Shared forward map; `empty_image` is what eps maps to, `nn_prefix` what N n prepends.
inline std::vector<Letter> zigzag_to_lattice(const PathWord& word, std::vector<Letter> empty_image,
                                             std::vector<Letter> nn_prefix) {
    require_zigzag_axis(word);
    const auto steps = word.steps();
    using Task = std::variant<Letter, Range>;
    std::vector<Task> stack{Range{0, steps.size()}};
    std::vector<Letter> out;
    while (!stack.empty()) {
        const Task task = stack.back();
        stack.pop_back();
        if (const auto* l = std::get_if<Letter>(&task)) {
            out.push_back(*l);
            continue;
        }
        const auto [b, e] = std::get<Range>(task);
        const auto seg = steps.subspan(b, e - b);
        const auto split = split_zigzag(seg);
        switch (split.form) {
            case Form::Empty: out.insert(out.end(), empty_image.begin(), empty_image.end()); break;
            case Form::NN:
                out.insert(out.end(), nn_prefix.begin(), nn_prefix.end());
                stack.push_back(Range{b + 2, e});
                break;
            case Form::EE:
                out.push_back(Letter::U);
                stack.push_back(Letter::D);
                stack.push_back(Range{b + 2, e});
                break;
            case Form::NE:
                out.push_back(Letter::U);
                stack.push_back(Range{b + split.frame_close + 2, e});
                stack.push_back(Letter::D);
                stack.push_back(Range{b + 2, b + split.frame_close});
                break;
        }
    }
    return out;
}

/**
 * Shared inverse. A range is an image word; `is_empty_image(range)` recognises
 * the image of eps and `nn_prefix_len` is the length of the N n marker
 * (1 for F, 2 for UD) that `starts_nn` detects.
 */
template <class IsEmptyImage, class StartsNN>
PathWord lattice_to_zigzag(const std::vector<Letter>& letters, IsEmptyImage is_empty_image, StartsNN starts_nn,
                           std::size_t nn_prefix_len) {
    using Task = std::variant<std::vector<Step>, Range>;
    std::vector<Task> stack{Range{0, letters.size()}};
    std::vector<Step> out;
    while (!stack.empty()) {
        Task task = std::move(stack.back());
        stack.pop_back();
        if (auto* s = std::get_if<std::vector<Step>>(&task)) {
            out.insert(out.end(), s->begin(), s->end());
            continue;
        }
        const auto r = std::get<Range>(task);
        if (is_empty_image(r)) continue;
        if (starts_nn(r)) {
            out.insert(out.end(), {Step::N, Step::NBar});
            stack.push_back(Range{r.begin + nn_prefix_len, r.end});
            continue;
        }
        // U R D [S]
        const std::size_t close = matching_down(letters, r.begin, r.end);
        const Range inner{r.begin + 1, close};
        if (close + 1 == r.end) {
            out.insert(out.end(), {Step::E, Step::EBar});
            stack.push_back(inner);
        } else {
            out.insert(out.end(), {Step::N, Step::EBar});
            stack.push_back(Range{close + 1, r.end});
            stack.push_back(std::vector<Step>{Step::E, Step::NBar});
            stack.push_back(inner);
        }
    }
    return PathWord(std::move(out));
}

}  // namespace detail

inline LatticeWord psi(const PathWord& word) {
    return {Alphabet::Motzkin, detail::zigzag_to_lattice(word, {Letter::F}, {Letter::F})};
}

inline LatticeWord phi(const PathWord& word) {
    return {Alphabet::Dyck, detail::zigzag_to_lattice(word, {Letter::U, Letter::D}, {Letter::U, Letter::D})};
}

inline PathWord psi_inv(const LatticeWord& m) {
    if (m.letters.empty()) throw error(errc::empty_input, "psi image is never empty");
    for (std::size_t i = 0; i < m.letters.size(); ++i)
        if (m.alphabet != Alphabet::Motzkin && m.letters[i] == Letter::F)
            throw error(errc::not_motzkin, "F in a Dyck-alphabet word", i);
    if (!detail::balanced(m.letters)) throw error(errc::not_motzkin, "prefix below level 0 or nonzero final level");
    if (detail::has_peak(m.letters)) throw error(errc::not_peakless, "contains the factor UD");
    const auto& L = m.letters;
    return detail::lattice_to_zigzag(
        L, [&](detail::Range r) { return r.end - r.begin == 1 && L[r.begin] == Letter::F; },
        [&](detail::Range r) { return L[r.begin] == Letter::F; }, 1);
}

inline PathWord phi_inv(const LatticeWord& d) {
    if (d.letters.empty()) throw error(errc::empty_input, "phi image is never empty");
    if (d.letters.size() % 2 != 0) throw error(errc::odd_length, "length " + std::to_string(d.letters.size()));
    if (!is_dyck(d)) throw error(errc::not_dyck, "prefix below level 0 or nonzero final level");
    const auto& L = d.letters;
    const auto starts_ud = [&](detail::Range r) {
        return r.end - r.begin >= 2 && L[r.begin] == Letter::U && L[r.begin + 1] == Letter::D;
    };
    return detail::lattice_to_zigzag(
        L, [&](detail::Range r) { return r.end - r.begin == 2 && starts_ud(r); }, starts_ud, 2);
}

/// Every peakless Motzkin word of the given length, by filtering all 3^length words.
inline std::vector<LatticeWord> all_peakless_motzkin(std::size_t length) {
    std::vector<LatticeWord> out;
    std::vector<Letter> w(length, Letter::U);
    const auto rec = [&](auto&& self, std::size_t i, long level) -> void {
        if (i == length) {
            if (level == 0 && !detail::has_peak(w)) out.push_back({Alphabet::Motzkin, w});
            return;
        }
        for (Letter l : {Letter::U, Letter::D, Letter::F}) {
            const long next = level + level_change(l);
            if (next < 0) continue;
            w[i] = l;
            self(self, i + 1, next);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Every Dyck word of the given length.
inline std::vector<LatticeWord> all_dyck(std::size_t length) {
    std::vector<LatticeWord> out;
    std::vector<Letter> w(length, Letter::U);
    const auto rec = [&](auto&& self, std::size_t i, long level) -> void {
        if (i == length) {
            if (level == 0) out.push_back({Alphabet::Dyck, w});
            return;
        }
        for (Letter l : {Letter::U, Letter::D}) {
            const long next = level + level_change(l);
            if (next < 0) continue;
            w[i] = l;
            self(self, i + 1, next);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace knightpaths
