#pragma once

/**
 * OEIS cross-checks: embedded fixtures, a b-file parser, and the mapping from
 * each sequence id to the counts this library computes for it.
 *
 * Fixture indices follow the OEIS offset convention. Where a sequence is a
 * shift of a computed column (Catalan, generalized Catalan, central binomial),
 * the mapping below starts at the first index the paths can produce.
 */

#include "knightpaths/bigint.hpp"
#include "knightpaths/closed_forms.hpp"
#include "knightpaths/counting.hpp"
#include "knightpaths/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace knightpaths::oeis {

enum class Source { Embedded, Fetched };

struct SequenceFixture {
    std::string id;
    long offset = 0;
    std::vector<BigInt> terms;
    Source source = Source::Embedded;
};

namespace detail {

inline SequenceFixture make(std::string id, long offset, std::initializer_list<const char*> terms) {
    SequenceFixture f{std::move(id), offset, {}, Source::Embedded};
    for (const char* t : terms) f.terms.emplace_back(t);
    return f;
}

}  // namespace detail

/// Terms as printed alongside each identifier, plus the OEIS leading terms
/// where the printed list is a shift.
inline const std::vector<SequenceFixture>& embedded_fixtures() {
    static const std::vector<SequenceFixture> fixtures = [] {
        using detail::make;
        return std::vector<SequenceFixture>{
            make("A000108", 0, {"1", "1", "2", "5", "14", "42", "132", "429", "1430", "4862", "16796", "58786"}),
            make("A001405", 0, {"1", "1", "2", "3", "6", "10", "20", "35", "70", "126", "252", "462"}),
            make("A004148", 0, {"1", "1", "1", "2", "4", "8", "17", "37", "82", "185", "423", "978"}),
            make("A005220", 0, {"1", "0", "1", "0", "3", "2", "12", "14", "54", "86", "274", "528"}),
            make("A005221", 2, {"1", "1", "3", "4", "12", "22", "61", "128"}),
            make("A088518", 0, {"1", "1", "2", "2", "4", "5", "9", "12", "21", "29", "50"}),
            // Rows n = 0..5 of [z^n u^k](F(u)+G(u)) for knight paths by size, k = 0..2n.
            make("A096587", 0, {"1",
                                "0", "0", "1",
                                "1", "1", "0", "0", "1",
                                "0", "1", "2", "2", "0", "0", "1",
                                "3", "3", "1", "2", "3", "3", "0", "0", "1",
                                "2", "4", "9", "8", "3", "3", "4", "4", "0", "0", "1"}),
            make("A096588", 0, {"1", "1", "3", "6", "16", "38", "99", "248", "646", "1659", "4342"}),
            make("A111160", 1, {"1", "1", "4", "9", "31", "91", "309"}),
            make("A166135", 1, {"1", "1", "3", "7", "22", "65", "213"}),
            make("A187430", 0, {"1", "0", "2", "2", "11", "24", "93", "272", "971", "3194", "11293"}),
        };
    }();
    return fixtures;
}

inline std::optional<SequenceFixture> find_embedded(std::string_view id) {
    for (const auto& f : embedded_fixtures())
        if (f.id == id) return f;
    return std::nullopt;
}

/// Two-column `index value` text; lines starting with '#' and blank lines are
/// skipped. Indices must be consecutive.
inline SequenceFixture parse_bfile(std::string_view id, std::string_view text) {
    SequenceFixture f{std::string(id), 0, {}, Source::Fetched};
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<long> expected;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        long index = 0;
        std::string value;
        if (!(row >> index >> value)) throw error(errc::invalid_argument, "malformed b-file line", line_no);
        if (!expected) f.offset = index;
        else if (index != *expected) throw error(errc::invalid_argument, "non-consecutive b-file index", line_no);
        try {
            f.terms.emplace_back(value);
        } catch (const std::exception&) {
            throw error(errc::invalid_argument, "b-file value '" + value + "' is not an integer", line_no);
        }
        expected = index + 1;
    }
    if (f.terms.empty()) throw error(errc::invalid_argument, "b-file has no terms");
    return f;
}

/// Smallest index the library computes for `id`, or nullopt for unknown ids.
inline std::optional<long> first_computed_index(std::string_view id) {
    static const std::map<std::string, long, std::less<>> first{
        {"A000108", 1}, {"A001405", 1}, {"A004148", 1}, {"A005220", 0}, {"A005221", 0}, {"A088518", 0},
        {"A096587", 0}, {"A096588", 0}, {"A111160", 0}, {"A166135", 0}, {"A187430", 0},
    };
    const auto it = first.find(id);
    if (it == first.end()) return std::nullopt;
    return it->second;
}

inline std::vector<std::string> known_ids() {
    std::vector<std::string> out;
    for (const auto& f : embedded_fixtures()) out.push_back(f.id);
    return out;
}

/// Terms for indices first..last (inclusive) of `id`; first must be at least
/// `first_computed_index(id)`.
inline std::vector<BigInt> computed_terms(std::string_view id, long first, long last) {
    const auto lo = first_computed_index(id);
    if (!lo) throw error(errc::invalid_argument, "no computed sequence for " + std::string(id));
    if (first < *lo) throw error(errc::out_of_range, std::string(id) + " is computed from index " + std::to_string(*lo));
    std::vector<BigInt> out;
    if (last < first) return out;

    const auto column = [&](PathClass c, Measure m, Floor fl, long k, long shift, long stride) {
        const long top = stride * (last - shift);
        const auto t = build_table(c, m, std::max<long>(top, 0), fl);
        for (long i = first; i <= last; ++i) out.push_back(t.total(stride * (i - shift), k));
    };
    const auto totals = [&](PathClass c, Measure m, long shift) {
        const auto t = build_table(c, m, std::max<long>(last - shift, 0));
        for (long i = first; i <= last; ++i) out.push_back(count_total_over_heights(t, i - shift));
    };

    if (id == "A000108") column(PathClass::Zigzag, Measure::Length, Floor::NonNegative, 0, 1, 2);
    else if (id == "A004148") column(PathClass::Zigzag, Measure::Size, Floor::NonNegative, 0, 1, 2);
    else if (id == "A005220") column(PathClass::Knight, Measure::Size, Floor::NonNegative, 0, 0, 1);
    else if (id == "A005221") column(PathClass::Knight, Measure::Size, Floor::NonNegative, 1, 0, 1);
    else if (id == "A166135") column(PathClass::Knight, Measure::Length, Floor::Positive, 1, 0, 1);
    else if (id == "A111160") column(PathClass::Knight, Measure::Length, Floor::Positive, 2, 0, 1);
    else if (id == "A088518") totals(PathClass::Zigzag, Measure::Size, 0);
    else if (id == "A096588") totals(PathClass::Knight, Measure::Size, 0);
    else if (id == "A001405") totals(PathClass::Zigzag, Measure::Length, 1);
    else if (id == "A187430") {
        for (long i = first; i <= last; ++i) out.push_back(closed::e_n(i));
    } else if (id == "A096587") {
        // Flattened rows: row n holds k = 0..2n, so row n starts at index n^2.
        long row = 0;
        while ((row + 1) * (row + 1) <= last) ++row;
        const auto t = build_table(PathClass::Knight, Measure::Size, row);
        for (long i = first; i <= last; ++i) {
            long n = 0;
            while ((n + 1) * (n + 1) <= i) ++n;
            out.push_back(t.total(n, i - n * n));
        }
    }
    return out;
}

struct Comparison {
    std::string id;
    long first_index = 0;
    long compared = 0;
    struct Mismatch {
        long index;
        BigInt expected;
        BigInt actual;
    };
    std::optional<Mismatch> mismatch;
    bool ok() const noexcept { return compared > 0 && !mismatch; }
};

/// Compares up to `max_terms` fixture terms, starting where both the fixture
/// and the computed sequence are defined.
inline Comparison compare(const SequenceFixture& fixture, long max_terms) {
    const auto lo = first_computed_index(fixture.id);
    if (!lo) throw error(errc::invalid_argument, "no computed sequence for " + fixture.id);
    Comparison c{fixture.id, std::max(fixture.offset, *lo), 0, std::nullopt};
    const long available = fixture.offset + static_cast<long>(fixture.terms.size()) - c.first_index;
    const long count = std::min(max_terms, available);
    if (count <= 0) return c;
    const auto computed = computed_terms(fixture.id, c.first_index, c.first_index + count - 1);
    for (long i = 0; i < count; ++i) {
        const long index = c.first_index + i;
        const BigInt& expected = fixture.terms[static_cast<std::size_t>(index - fixture.offset)];
        ++c.compared;
        if (computed[static_cast<std::size_t>(i)] != expected) {
            c.mismatch = Comparison::Mismatch{index, expected, computed[static_cast<std::size_t>(i)]};
            break;
        }
    }
    return c;
}

}  // namespace knightpaths::oeis
