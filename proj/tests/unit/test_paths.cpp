#include <catch2/catch_amalgamated.hpp>

#include "knightpaths/counting.hpp"
#include "knightpaths/paths.hpp"
#include "word_oracle.hpp"

#include <set>

using namespace knightpaths;

namespace {

std::vector<std::string> rendered(const std::vector<PathWord>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(render_word(w));
    return out;
}

template <class Fn>
errc code_of(Fn&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return errc::invalid_argument;
}

}  // namespace

TEST_CASE("steps carry the four knight increments", "[paths]") {
    CHECK((dx(Step::N) == 1 && dy(Step::N) == 2));
    CHECK((dx(Step::NBar) == 1 && dy(Step::NBar) == -2));
    CHECK((dx(Step::E) == 2 && dy(Step::E) == 1));
    CHECK((dx(Step::EBar) == 2 && dy(Step::EBar) == -1));
    for (Step s : all_steps) CHECK(is_up(s) == (dy(s) > 0));
}

TEST_CASE("parse_word", "[paths]") {
    const auto empty = parse_word("");
    CHECK(empty.empty());
    CHECK(empty.size() == 0);
    CHECK(empty.final_height() == 0);

    const auto fig = parse_word("NeNnEeNeEnEn");
    CHECK(fig.size() == 18);
    CHECK(fig.length() == 12);
    CHECK(fig.final_height() == 0);

    try {
        parse_word("nN");
        FAIL("expected NegativePrefix");
    } catch (const error& e) {
        CHECK(e.code() == errc::negative_prefix);
        CHECK(e.position() == std::optional<std::size_t>(1));
        CHECK(std::string(e.what()).find("NegativePrefix(1)") != std::string::npos);
    }
    try {
        parse_word("NnX");
        FAIL("expected UnknownSymbol");
    } catch (const error& e) {
        CHECK(e.code() == errc::unknown_symbol);
        CHECK(e.position() == std::optional<std::size_t>(2));
        CHECK(std::string(e.what()).find("UnknownSymbol(2)") != std::string::npos);
    }
    CHECK(code_of([] { parse_word("Nnn"); }) == errc::negative_prefix);
}

TEST_CASE("render_word inverts parse_word", "[paths]") {
    CHECK(render_word(PathWord{}) == "");
    CHECK(render_word(PathWord({Step::N, Step::NBar})) == "Nn");
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= 2 * n; ++k)
            for (const auto& w : enumerate_partial(PathClass::Zigzag, Measure::Size, n, k))
                CHECK(parse_word(render_word(w)) == w);
}

TEST_CASE("is_member", "[paths]") {
    CHECK(is_member(parse_word("NnNn"), PathClass::Zigzag));
    CHECK_FALSE(is_member(parse_word("NE"), PathClass::Zigzag));
    CHECK(is_member(parse_word("NE"), PathClass::Knight));
    CHECK(is_member(PathWord{}, PathClass::Zigzag));
    CHECK(is_member(PathWord{}, PathClass::Knight));
}

TEST_CASE("enumerate_partial small cases", "[paths]") {
    CHECK(enumerate_partial(PathClass::Knight, Measure::Size, 5, 1).size() == 4);
    CHECK(enumerate_partial(PathClass::Zigzag, Measure::Size, 5, 2).size() == 3);
    CHECK(enumerate_partial(PathClass::Zigzag, Measure::Length, 5, 1).size() == 5);
    CHECK(rendered(enumerate_partial(PathClass::Zigzag, Measure::Size, 4, 0)) ==
          std::vector<std::string>{"NnNn", "Ee"});
    CHECK(enumerate_partial(PathClass::Knight, Measure::Size, 1, 0).empty());
    CHECK(rendered(enumerate_partial(PathClass::Knight, Measure::Size, 0, 0)) == std::vector<std::string>{""});
}

TEST_CASE("enumerate_partial matches a string-level brute force", "[paths]") {
    for (bool zigzag : {false, true}) {
        for (bool by_size : {true, false}) {
            const int top = by_size ? 12 : 9;
            const PathClass cls = zigzag ? PathClass::Zigzag : PathClass::Knight;
            const Measure m = by_size ? Measure::Size : Measure::Length;
            for (int n = 0; n <= top; ++n) {
                std::map<int, std::vector<std::string>> expected;
                for (const auto& [w, h] : oracle::words(zigzag, by_size, n)) expected[h].push_back(w);
                for (int k = 0; k <= 2 * n; ++k) {
                    INFO(to_string(cls) << "/" << to_string(m) << " n=" << n << " k=" << k);
                    CHECK(rendered(enumerate_partial(cls, m, n, k)) == expected[k]);
                }
            }
        }
    }
}

TEST_CASE("enumeration agrees with the DP", "[paths]") {
    for (PathClass cls : {PathClass::Knight, PathClass::Zigzag}) {
        for (Measure m : {Measure::Size, Measure::Length}) {
            const long top = m == Measure::Size ? 14 : 12;
            const auto t = build_table(cls, m, top);
            for (long n = 0; n <= top; ++n)
                for (long k = 0; k <= 2 * n; ++k)
                    CHECK(BigInt(enumerate_partial(cls, m, n, k).size()) == t.total(n, k));
        }
    }
}

TEST_CASE("enumeration is sorted, duplicate-free and lexicographic", "[paths]") {
    for (long n = 0; n <= 10; ++n) {
        for (long k = 0; k <= 2 * n; ++k) {
            const auto ws = enumerate_partial(PathClass::Knight, Measure::Size, n, k);
            const std::set<PathWord> unique(ws.begin(), ws.end());
            CHECK(unique.size() == ws.size());
            CHECK(std::is_sorted(ws.begin(), ws.end()));
        }
    }
}

TEST_CASE("zigzag axis words have even size and length", "[paths]") {
    for (long m = 0; m <= 7; ++m) {
        CHECK(enumerate_partial(PathClass::Zigzag, Measure::Size, 2 * m + 1, 0).empty());
        CHECK(enumerate_partial(PathClass::Zigzag, Measure::Length, 2 * m + 1, 0).empty());
    }
    for (const auto& w : enumerate_partial(PathClass::Zigzag, Measure::Size, 12, 0)) CHECK(w.length() % 2 == 0);
}

TEST_CASE("every nonnegative prefix completes to an axis path", "[paths]") {
    // Greedy descent: from height h with last direction d, keep taking the
    // steepest allowed down step, inserting an up step only when alternation forces it.
    const auto completes = [](bool zigzag, int height, int last_dy) {
        for (int guard = 0; guard < 64; ++guard) {
            if (height == 0) return true;
            if (!zigzag || last_dy > 0) {
                const int drop = height >= 2 ? -2 : -1;
                height += drop;
                last_dy = drop;
            } else {
                height += 1;
                last_dy = 1;
            }
        }
        return false;
    };
    for (bool zigzag : {false, true}) {
        for (int n = 0; n <= 12; ++n) {
            for (const auto& [w, h] : oracle::words(zigzag, true, n)) {
                int last = 0;
                if (!w.empty()) last = (w.back() == 'N' || w.back() == 'E') ? 1 : -1;
                INFO(w);
                CHECK(completes(zigzag, h, last));
            }
        }
    }
}

TEST_CASE("decompose_zigzag", "[paths]") {
    CHECK(std::holds_alternative<DecompEmpty>(decompose_zigzag(PathWord{})));

    const auto ne = decompose_zigzag(parse_word("NeEn"));
    REQUIRE(std::holds_alternative<DecompNE>(ne));
    CHECK(std::get<DecompNE>(ne).beta.empty());
    CHECK(std::get<DecompNE>(ne).gamma.empty());

    const auto ee = decompose_zigzag(parse_word("EeNnNeNnEn"));
    REQUIRE(std::holds_alternative<DecompEE>(ee));
    CHECK(render_word(std::get<DecompEE>(ee).beta) == "NnNeNnEn");

    const auto nested = decompose_zigzag(parse_word("NeNnEnNn"));
    REQUIRE(std::holds_alternative<DecompNE>(nested));
    CHECK(render_word(std::get<DecompNE>(nested).beta) == "Nn");
    CHECK(render_word(std::get<DecompNE>(nested).gamma) == "Nn");

    CHECK(code_of([] { decompose_zigzag(parse_word("NeE")); }) == errc::not_on_axis);
    CHECK(code_of([] { decompose_zigzag(parse_word("EEn")); }) == errc::not_zigzag);
}

TEST_CASE("decomposition reassembles and is fixed by the first two steps", "[paths]") {
    for (long n = 0; n <= 20; n += 2) {
        for (const auto& w : enumerate_partial(PathClass::Zigzag, Measure::Size, n, 0)) {
            const auto d = decompose_zigzag(w);
            CHECK(reassemble(d) == w);
            const auto s = w.steps();
            if (s.empty()) CHECK(std::holds_alternative<DecompEmpty>(d));
            else if (s[0] == Step::N && s[1] == Step::NBar) CHECK(std::holds_alternative<DecompNN>(d));
            else if (s[0] == Step::E) CHECK(std::holds_alternative<DecompEE>(d));
            else {
                REQUIRE(std::holds_alternative<DecompNE>(d));
                const auto& [beta, gamma] = std::get<DecompNE>(d);
                CHECK(beta.final_height() == 0);
                CHECK(is_member(beta, PathClass::Zigzag));
                CHECK(is_member(gamma, PathClass::Zigzag));
            }
        }
    }
}
