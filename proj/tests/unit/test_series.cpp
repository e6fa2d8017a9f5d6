#include <catch2/catch_amalgamated.hpp>

#include "knightpaths/kernel.hpp"
#include "knightpaths/series.hpp"

#include <random>

using namespace knightpaths;
using kernel::one;
using kernel::z_power;

namespace {

TruncSeries from_ints(std::initializer_list<long long> c, int order) {
    TruncSeries s(order);
    int i = 0;
    for (long long v : c) {
        if (i > order) break;
        s[i++] = Rational(v);
    }
    return s;
}

TruncSeries random_series(std::mt19937& rng, int order, bool unit) {
    std::uniform_int_distribution<int> d(-9, 9);
    TruncSeries s(order);
    for (int i = 0; i <= order; ++i) s[i] = Rational(d(rng));
    if (unit) s[0] = 1;
    return s;
}

std::vector<std::string> coeffs(const TruncSeries& s, int from, int to) {
    std::vector<std::string> out;
    for (int i = from; i <= to; ++i) out.push_back(s[i].str());
    return out;
}

bool all_integral(const TruncSeries& s) {
    for (const auto& c : s.coefficients())
        if (!is_integral(c)) return false;
    return true;
}

}  // namespace

TEST_CASE("ring operations", "[series]") {
    const auto a = from_ints({1, 1}, 6), b = from_ints({1, -1}, 6);
    CHECK(a * b == from_ints({1, 0, -1}, 6));
    CHECK(z_power(3, 6) * z_power(5, 6) == TruncSeries(6));
    CHECK((a + b) == from_ints({2}, 6));
    CHECK((a - b) == from_ints({0, 2}, 6));
    CHECK((from_ints({1, 2, 3}, 4) * from_ints({1}, 2)).order() == 2);
}

TEST_CASE("multiplication matches a double-loop convolution", "[series]") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const int order = static_cast<int>(rng() % 51);
        const auto a = random_series(rng, order, false), b = random_series(rng, order, false);
        const auto c = a * b;
        for (int n = 0; n <= order; ++n) {
            Rational expected = 0;
            for (int i = 0; i <= n; ++i) expected += a[i] * b[n - i];
            CHECK(c[n] == expected);
        }
    }
}

TEST_CASE("invert_unit", "[series]") {
    CHECK(invert_unit(from_ints({1, -1}, 8)) == from_ints({1, 1, 1, 1, 1, 1, 1, 1, 1}, 8));
    CHECK(invert_unit(one(5)) == one(5));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_series(rng, 40, true);
        CHECK(a * invert_unit(a) == one(40));
    }
    // Any nonzero rational constant is invertible.
    const auto half = from_ints({2, 1}, 6);
    CHECK(half * invert_unit(half) == one(6));
    try {
        invert_unit(z_power(1, 4));
        FAIL("expected NonUnitConstantTerm");
    } catch (const error& e) {
        CHECK(e.code() == errc::non_unit_constant_term);
    }
}

TEST_CASE("sqrt_unit", "[series]") {
    CHECK(sqrt_unit(one(10)) == one(10));
    CHECK(sqrt_unit(from_ints({1, 2, 1}, 10)) == from_ints({1, 1}, 10));

    // Pascal triangle built here, independently of the library's binomial.
    constexpr int N = 20;
    std::vector<std::vector<BigInt>> pascal(2 * N, std::vector<BigInt>(2 * N, 0));
    for (int n = 0; n < 2 * N; ++n) {
        pascal[n][0] = 1;
        for (int k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : BigInt(0));
    }
    const auto T = sqrt_unit(from_ints({1, -4}, N));
    CHECK(T * T == from_ints({1, -4}, N));
    for (int n = 1; n <= N; ++n) CHECK(T[n] == Rational(-2 * pascal[2 * n - 2][n - 1], BigInt(n)));

    CHECK_THROWS_AS(sqrt_unit(from_ints({4, 1}, 3)), error);
}

TEST_CASE("solve_quadratic_fixedpoint", "[series]") {
    const int N = 24;
    const auto r = kernel::r_size(N + 3);
    CHECK(coeffs(r.shift_down(3), 0, 10) ==
          std::vector<std::string>{"1", "0", "1", "0", "2", "0", "4", "0", "8", "0", "17"});
    const auto residual = z_power(3, N) * r * r + (z_power(4, N) + z_power(2, N) - one(N)) * r + z_power(3, N);
    CHECK(residual.truncated(N).is_zero());

    const auto rl = kernel::r_length(N);
    CHECK(coeffs(one(N) + rl * (Rational(2) * one(N) + rl), 0, 8) ==
          std::vector<std::string>{"1", "0", "2", "0", "5", "0", "14", "0", "42"});
    const auto onep = one(N) + rl;
    CHECK((rl - z_power(2, N) * onep * onep).is_zero());
    CHECK(all_integral(r));
    CHECK(all_integral(rl));

    CHECK(solve_quadratic_fixedpoint(TruncSeries(8), z_power(1, 8), z_power(2, 8), 8).is_zero());
    try {
        solve_quadratic_fixedpoint(one(8), z_power(1, 8), z_power(1, 8), 8);
        FAIL("expected NotContracting");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_contracting);
    }
}

TEST_CASE("shift_down refuses to divide a nonzero low term", "[series]") {
    CHECK(z_power(3, 6).shift_down(3) == one(6).truncated(3));
    try {
        from_ints({0, 1}, 4).shift_down(2);
        FAIL("expected NotDivisible");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_divisible);
    }
}

TEST_CASE("A, A1 and E", "[series]") {
    CHECK(coeffs(kernel::series_A(11), 0, 11) ==
          std::vector<std::string>{"1", "0", "1", "0", "3", "2", "12", "14", "54", "86", "274", "528"});
    CHECK(coeffs(kernel::series_A1(9), 0, 9) ==
          std::vector<std::string>{"0", "0", "1", "1", "3", "4", "12", "22", "61", "128"});
    CHECK(coeffs(kernel::series_E(6), 0, 6) == std::vector<std::string>{"1", "0", "2", "2", "11", "24", "93"});
    const auto t = build_table(PathClass::Knight, Measure::Size, 20);
    CHECK(kernel::series_A1(20) == kernel::column_series(t, 1, kernel::Family::Total, 20));
}

TEST_CASE("check_algebraic", "[series]") {
    CHECK(kernel::quartic_A_residual(kernel::series_A(30)).is_zero());
    CHECK(kernel::quartic_E_residual(kernel::series_E(30)).is_zero());
    std::mt19937 rng(3);
    const auto x = random_series(rng, 12, false);
    const std::vector<RelationTerm> rel{{one(12), 1}, {-one(12), 1}};
    CHECK(check_algebraic(rel, x).is_zero());
    // A perturbed A leaves a nonzero residual.
    auto A = kernel::series_A(30);
    A[7] += 1;
    CHECK_FALSE(kernel::quartic_A_residual(A).is_zero());
}

TEST_CASE("bivariate identities", "[series]") {
    CHECK(kernel::check_bivariate_identity(PathClass::Zigzag, Measure::Size, 12, 24).ok());
    CHECK(kernel::check_bivariate_identity(PathClass::Zigzag, Measure::Length, 12, 24).ok());
    CHECK(kernel::check_bivariate_identity(PathClass::Knight, Measure::Size, 10, 20).ok());
    CHECK_THROWS_AS(kernel::check_bivariate_identity(PathClass::Knight, Measure::Length, 4, 8), error);

    // A table with one transition removed must fail.
    const auto broken = build_table(PathClass::Zigzag, Measure::Size, 24, Floor::NonNegative,
                                    Transition{Step::E, Prev::Down});
    const auto check = kernel::check_bivariate_identity(broken, 12, 24);
    REQUIRE_FALSE(check.ok());
    CHECK(check.mismatch->z_power <= 24);
}

TEST_CASE("split, column and axis forms", "[series]") {
    for (Measure m : {Measure::Size, Measure::Length}) {
        const auto t = build_table(PathClass::Zigzag, m, 30);
        for (const auto& c : kernel::check_split_identities(t, 12, 24)) CHECK(c.ok());
        CHECK(kernel::check_column_forms(t, 10, 30).ok());
        CHECK(kernel::check_axis_identity(t, 30).ok());
    }
}

TEST_CASE("basketball heights", "[series]") {
    const auto t = build_table(PathClass::Knight, Measure::Length, 40, Floor::Positive);
    CHECK(coeffs(kernel::column_series(t, 1, kernel::Family::Total, 7), 1, 7) ==
          std::vector<std::string>{"1", "1", "3", "7", "22", "65", "213"});
    CHECK(coeffs(kernel::column_series(t, 2, kernel::Family::Total, 7), 1, 7) ==
          std::vector<std::string>{"1", "1", "4", "9", "31", "91", "309"});
    for (const auto& c : kernel::check_basketball_heights(t, 40)) CHECK(c.ok());
}

TEST_CASE("basketball radicals do not describe the nonnegative table", "[series]") {
    // The unrestricted knight/length columns include walks that touch the
    // axis again; they violate both squared identities.
    const auto plain = build_table(PathClass::Knight, Measure::Length, 12);
    for (const auto& c : kernel::check_basketball_heights(plain, 12)) CHECK_FALSE(c.ok());
}

TEST_CASE("series text format", "[series]") {
    CHECK(to_string(kernel::series_A(8)) == "1 + z^2 + 3*z^4 + 2*z^5 + 12*z^6 + 14*z^7 + 54*z^8");
    CHECK(to_string(kernel::r_length(0)) == "0");
    CHECK(to_string(from_ints({0, -1, 0, 2}, 3)) == "-z + 2*z^3");
    TruncSeries half(2);
    half[0] = Rational(1, 2);
    half[2] = Rational(-3, 4);
    CHECK(to_string(half) == "1/2 - 3/4*z^2");
    CHECK(coefficient_strings(half) == std::vector<std::string>{"1/2", "0", "-3/4"});
}

TEST_CASE("UPoly caps the u-degree", "[series]") {
    const auto u = UPoly::term(one(4), 1, 3);
    const auto u3 = u * u * u;
    CHECK(u3[3] == one(4));
    CHECK((u3 * u)[3].is_zero());
}
