#pragma once

/**
 * Kernel-method objects as truncated series, and residual checks of the
 * closed forms they satisfy.
 *
 * Every check is multiplicative: the rational expressions for F(u), G(u) have
 * denominators (1 - r u) or a quartic in u, so both sides are multiplied
 * through and compared coefficient by coefficient. Divisions by z become
 * `shift_down`, which asserts the vanishing low terms first.
 */

#include "knightpaths/counting.hpp"
#include "knightpaths/series.hpp"

#include <array>
#include <optional>
#include <string>

namespace knightpaths::kernel {

enum class Family { Up, Down, Total };

/// Column k of a count table as a series in z (the f_k, g_k or f_k + g_k series).
inline TruncSeries column_series(const CountTable& table, long k, Family family, int order) {
    if (order > table.max_value()) throw error(errc::out_of_range, "table does not cover the requested order");
    TruncSeries s(order);
    for (int n = 0; n <= order; ++n) {
        switch (family) {
            case Family::Up: s[n] = Rational(table.up(n, k)); break;
            case Family::Down: s[n] = Rational(table.down(n, k)); break;
            case Family::Total: s[n] = Rational(table.total(n, k)); break;
        }
    }
    return s;
}

/// sum_{j <= K} u^j * column_j(z)
inline UPoly bivariate(const CountTable& table, Family family, int u_degree, int order) {
    UPoly p(u_degree, order);
    for (int j = 0; j <= u_degree; ++j) p[j] = column_series(table, j, family, order);
    return p;
}

inline TruncSeries z_power(int m, int order) { return TruncSeries::monomial(Rational(1), m, order); }
inline TruncSeries one(int order) { return TruncSeries::constant(Rational(1), order); }

/// Small root of the size-measure kernel: r = z^3 + (z^2 + z^4) r + z^3 r^2.
inline TruncSeries r_size(int order) {
    return solve_quadratic_fixedpoint(z_power(3, order), z_power(2, order) + z_power(4, order), z_power(3, order), order);
}

/// Small root of the length-measure kernel: r = z^2 (1 + r)^2.
inline TruncSeries r_length(int order) {
    return solve_quadratic_fixedpoint(z_power(2, order), Rational(2) * z_power(2, order), z_power(2, order), order);
}

/// Knight paths by size ending on the axis, read off the DP.
inline TruncSeries series_A(const CountTable& knight_size, int order) {
    return column_series(knight_size, 0, Family::Total, order);
}
inline TruncSeries series_A(int order) { return series_A(build_table(PathClass::Knight, Measure::Size, order), order); }

/// A1 = z^2 A^2 (1 - z A)^{-1}
inline TruncSeries series_A1_from(const TruncSeries& A) {
    const int order = A.order();
    return z_power(2, order) * A * A * invert_unit(one(order) - z_power(1, order) * A);
}
inline TruncSeries series_A1(int order) { return series_A1_from(series_A(order)); }

/// Knight paths by length ending on the axis (basketball excursions).
inline TruncSeries series_E(const CountTable& knight_length, int order) {
    return column_series(knight_length, 0, Family::Total, order);
}
inline TruncSeries series_E(int order) { return series_E(build_table(PathClass::Knight, Measure::Length, order), order); }

/// z^4 A^4 - (2z^3 + z^2) A^3 + (z^4 + 2z^2 + 2z) A^2 - (2z + 1) A + 1
inline TruncSeries quartic_A_residual(const TruncSeries& A) {
    const int o = A.order();
    const std::array<RelationTerm, 5> rel{{
        {z_power(4, o), 4},
        {-(Rational(2) * z_power(3, o) + z_power(2, o)), 3},
        {z_power(4, o) + Rational(2) * z_power(2, o) + Rational(2) * z_power(1, o), 2},
        {-(Rational(2) * z_power(1, o) + one(o)), 1},
        {one(o), 0},
    }};
    return check_algebraic(rel, A);
}

/// z^4 E^4 - (2z^3 + z^2) E^3 + (3z^2 + 2z) E^2 - (2z + 1) E + 1
inline TruncSeries quartic_E_residual(const TruncSeries& E) {
    const int o = E.order();
    const std::array<RelationTerm, 5> rel{{
        {z_power(4, o), 4},
        {-(Rational(2) * z_power(3, o) + z_power(2, o)), 3},
        {Rational(3) * z_power(2, o) + Rational(2) * z_power(1, o), 2},
        {-(Rational(2) * z_power(1, o) + one(o)), 1},
        {one(o), 0},
    }};
    return check_algebraic(rel, E);
}

struct Mismatch {
    int u_power;
    int z_power;
    std::string expected;
    std::string actual;
    std::string family = "F+G";
};

struct IdentityCheck {
    std::string name;
    std::optional<Mismatch> mismatch;
    bool ok() const noexcept { return !mismatch.has_value(); }
    explicit operator bool() const noexcept { return ok(); }
};

inline std::optional<Mismatch> first_difference(const TruncSeries& lhs, const TruncSeries& rhs, int u_power = 0) {
    const int order = std::min(lhs.order(), rhs.order());
    for (int n = 0; n <= order; ++n)
        if (lhs[n] != rhs[n]) return Mismatch{u_power, n, rhs[n].str(), lhs[n].str()};
    return std::nullopt;
}

inline std::optional<Mismatch> first_difference(const UPoly& lhs, const UPoly& rhs) {
    const int K = std::min(lhs.u_degree(), rhs.u_degree());
    for (int j = 0; j <= K; ++j)
        if (auto m = first_difference(lhs[j], rhs[j], j)) return m;
    return std::nullopt;
}

inline UPoly constant_poly(const TruncSeries& c, int K) { return UPoly::term(c, 0, K); }

/// 1 - r u
inline UPoly one_minus_ru(const TruncSeries& r, int K) {
    return UPoly::term(one(r.order()), 0, K) - UPoly::term(r, 1, K);
}

/**
 * F(u) + G(u) built from the table, checked against its closed form:
 *   zigzag/size:   z^3 (1 - r u)(F + G) = r u^2 z + r u z^2 + r
 *   zigzag/length: z   (1 - r u)(F + G) = r^2 z + r u^2 + r u + 2 r z + z
 *   knight/size:   (u^4 z + u^3 z^2 + u z^2 - u^2 + z)(F + G) = z(uz + 1) A + u z A1 - u^2
 * Table must cover `order`; compares u^0..u^K.
 */
inline IdentityCheck check_bivariate_identity(const CountTable& table, int K, int order) {
    const auto FG = bivariate(table, Family::Total, K, order);
    const auto z = [&](int m) { return z_power(m, order); };
    UPoly lhs(K, order), rhs(K, order);
    std::string name;
    if (table.path_class() == PathClass::Zigzag && table.measure() == Measure::Size) {
        name = "zigzag-size F+G";
        const auto r = r_size(order);
        lhs = constant_poly(z(3), K) * one_minus_ru(r, K) * FG;
        rhs = UPoly::term(r * z(1), 2, K) + UPoly::term(r * z(2), 1, K) + UPoly::term(r, 0, K);
    } else if (table.path_class() == PathClass::Zigzag) {
        name = "zigzag-length F+G";
        const auto r = r_length(order);
        lhs = constant_poly(z(1), K) * one_minus_ru(r, K) * FG;
        rhs = UPoly::term(r * r * z(1) + Rational(2) * r * z(1) + z(1), 0, K) + UPoly::term(r, 1, K) +
              UPoly::term(r, 2, K);
    } else if (table.measure() == Measure::Size) {
        name = "knight-size F+G";
        const auto A = series_A(table, order);
        const auto A1 = series_A1_from(A);
        UPoly kernel(K, order);
        kernel = UPoly::term(z(1), 0, K) + UPoly::term(z(2), 1, K) - UPoly::term(one(order), 2, K) +
                 UPoly::term(z(2), 3, K) + UPoly::term(z(1), 4, K);
        lhs = kernel * FG;
        rhs = UPoly::term(z(1) * A, 0, K) + UPoly::term(z(2) * A + z(1) * A1, 1, K) -
              UPoly::term(one(order), 2, K);
    } else {
        throw error(errc::invalid_argument, "no bivariate closed form for knight paths by length");
    }
    return {name, first_difference(lhs, rhs)};
}

inline IdentityCheck check_bivariate_identity(PathClass cls, Measure measure, int K, int order) {
    return check_bivariate_identity(build_table(cls, measure, order), K, order);
}

/**
 * F(u) and G(u) separately, zigzag classes only:
 *   size:   z^2 (1 - r u)(F - 1) = r u^2 + r z u,    z^3 (1 - r u)(G + 1) = r
 *   length: z (1 - r u) F = r u^2 + r (1 - z) u + z,  (1 - r u) G = r u + r^2 + 2 r
 */
inline std::array<IdentityCheck, 2> check_split_identities(const CountTable& table, int K, int order) {
    if (table.path_class() != PathClass::Zigzag) throw error(errc::invalid_argument, "split forms exist for zigzag only");
    const auto F = bivariate(table, Family::Up, K, order);
    const auto G = bivariate(table, Family::Down, K, order);
    const auto z = [&](int m) { return z_power(m, order); };
    const auto c = [&](const TruncSeries& s) { return constant_poly(s, K); };
    if (table.measure() == Measure::Size) {
        const auto r = r_size(order);
        const auto kern = one_minus_ru(r, K);
        return {{
            {"zigzag-size F", first_difference(c(z(2)) * kern * (F - c(one(order))),
                                               UPoly::term(r, 2, K) + UPoly::term(r * z(1), 1, K))},
            {"zigzag-size G", first_difference(c(z(3)) * kern * (G + c(one(order))), c(r))},
        }};
    }
    const auto r = r_length(order);
    const auto kern = one_minus_ru(r, K);
    return {{
        {"zigzag-length F", first_difference(c(z(1)) * kern * F, UPoly::term(r, 2, K) +
                                                                     UPoly::term(r - r * z(1), 1, K) + c(z(1)))},
        {"zigzag-length G", first_difference(kern * G, UPoly::term(r, 1, K) + c(r * r + Rational(2) * r))},
    }};
}

/**
 * Columns f_k, g_k (k <= K) against their r-power forms:
 *   size:   f_k = ((r z + 1) r^{k-1} - [k=1]) / z^2,  g_0 = r / z^3 - 1,  g_k = r^{k+1} / z^3
 *   length: f_k = ((1 + r) r^{k-1} - [k=1]) / z,      g_0 = r (2 + r),    g_k = r^{k+1} / z^2
 * and f_0 = 1 for both. Table must cover `order`.
 */
inline IdentityCheck check_column_forms(const CountTable& table, int K, int order) {
    if (table.path_class() != PathClass::Zigzag) throw error(errc::invalid_argument, "column forms exist for zigzag only");
    const bool size = table.measure() == Measure::Size;
    const int pad = size ? 3 : 2;
    const int wide = order + pad;
    const auto r = size ? r_size(wide) : r_length(wide);
    const auto z = [&](int m) { return z_power(m, wide); };
    const std::string name = size ? "zigzag-size f_k/g_k columns" : "zigzag-length f_k/g_k columns";

    if (auto m = first_difference(column_series(table, 0, Family::Up, order), one(order))) {
        m->family = "f";
        return {name, m};
    }
    for (int k = 1; k <= K; ++k) {
        const auto rk1 = pow(r, k - 1);
        TruncSeries f_num = size ? (r * z(1) + one(wide)) * rk1 : (one(wide) + r) * rk1;
        if (k == 1) f_num -= one(wide);
        const auto f = f_num.shift_down(size ? 2 : 1).truncated(order);
        if (auto m = first_difference(column_series(table, k, Family::Up, order), f, k)) {
            m->family = "f";
            return {name, m};
        }
    }
    for (int k = 0; k <= K; ++k) {
        TruncSeries g(order);
        if (size) g = k == 0 ? r.shift_down(3).truncated(order) - one(order) : pow(r, k + 1).shift_down(3).truncated(order);
        else g = k == 0 ? (r * (Rational(2) * one(wide) + r)).truncated(order) : pow(r, k + 1).shift_down(2).truncated(order);
        if (auto m = first_difference(column_series(table, k, Family::Down, order), g, k)) {
            m->family = "g";
            return {name, m};
        }
    }
    return {name, std::nullopt};
}

/// Axis generating function: r / z^3 (size), 1 + r (2 + r) (length).
inline IdentityCheck check_axis_identity(const CountTable& table, int order) {
    if (table.path_class() != PathClass::Zigzag) throw error(errc::invalid_argument, "axis forms exist for zigzag only");
    const auto axis = column_series(table, 0, Family::Total, order);
    if (table.measure() == Measure::Size)
        return {"zigzag-size axis = r/z^3", first_difference(axis, r_size(order + 3).shift_down(3))};
    const auto r = r_length(order);
    return {"zigzag-length axis = 1 + r(2+r)", first_difference(axis, one(order) + r * (Rational(2) * one(order) + r))};
}

/**
 * Basketball heights 1 and 2 by squaring, with T = sqrt(1 - 4z):
 *   z (2 G1 + 1)^2 = 2 - 3z - 2T,   (3 - T - 4 z G2)^2 = 2 + 12 z + 2T.
 * G1, G2 are read from `positive_length`, a knight/length table built with
 * Floor::Positive: these radicals count walks that stay above the axis after
 * the origin.
 */
inline std::array<IdentityCheck, 2> check_basketball_heights(const CountTable& positive_length, int order) {
    const auto z = [&](int m) { return z_power(m, order); };
    const auto T = sqrt_unit(one(order) - Rational(4) * z(1));
    const auto G1 = column_series(positive_length, 1, Family::Total, order);
    const auto G2 = column_series(positive_length, 2, Family::Total, order);
    const auto h1 = Rational(2) * G1 + one(order);
    const auto h2 = Rational(3) * one(order) - T - Rational(4) * z(1) * G2;
    return {{
        {"basketball height 1", first_difference(z(1) * h1 * h1, Rational(2) * one(order) - Rational(3) * z(1) - Rational(2) * T)},
        {"basketball height 2", first_difference(h2 * h2, Rational(2) * one(order) + Rational(12) * z(1) + Rational(2) * T)},
    }};
}

inline std::array<IdentityCheck, 2> check_basketball_heights(int order) {
    return check_basketball_heights(build_table(PathClass::Knight, Measure::Length, order, Floor::Positive), order);
}

}  // namespace knightpaths::kernel
