#pragma once

/**
 * Truncated formal power series in z with exact coefficients, and polynomials
 * in u whose coefficients are such series.
 *
 * A series of order N keeps z^0..z^N. Binary operations produce the smaller
 * of the two operand orders; nothing is ever extended past what both inputs
 * determine. Division by z^m is `shift_down(m)`, which first checks that the
 * low coefficients vanish.
 */

#include "knightpaths/bigint.hpp"
#include "knightpaths/error.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace knightpaths {

template <class Ring>
class basic_series {
public:
    using value_type = Ring;

    basic_series() : coeffs_(1, Ring(0)) {}

    /// Zero series of the given order.
    explicit basic_series(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1, Ring(0)) {
        if (order < 0) throw error(errc::invalid_argument, "series order must be >= 0");
    }

    /// Coefficients c0, c1, ...; missing ones are zero, extra ones are dropped.
    basic_series(std::span<const Ring> coeffs, int order) : basic_series(order) {
        for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = coeffs[i];
    }
    basic_series(std::initializer_list<Ring> coeffs, int order)
        : basic_series(std::span<const Ring>(coeffs.begin(), coeffs.size()), order) {}

    static basic_series constant(const Ring& c, int order) {
        basic_series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c * z^power, zero if the power lies beyond the order.
    static basic_series monomial(const Ring& c, int power, int order) {
        basic_series s(order);
        if (power >= 0 && power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
        return s;
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Ring> coefficients() const noexcept { return coeffs_; }

    const Ring& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    Ring& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

    /// Index of the first nonzero coefficient, nullopt for the zero series.
    std::optional<int> valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return std::nullopt;
    }
    bool is_zero() const { return !valuation().has_value(); }

    basic_series truncated(int order) const {
        if (order > this->order()) throw error(errc::invalid_argument, "cannot extend a truncated series");
        return basic_series(std::span<const Ring>(coeffs_), order);
    }

    /// Multiplication by z^m; the order is kept, so the top m terms fall off.
    basic_series shift_up(int m) const {
        basic_series s(order());
        for (int i = 0; i + m <= order(); ++i) s.coeffs_[static_cast<std::size_t>(i + m)] = coeffs_[static_cast<std::size_t>(i)];
        return s;
    }

    /// Division by z^m; the order drops by m. Throws NotDivisible unless
    /// z^0..z^{m-1} are all zero.
    basic_series shift_down(int m) const {
        if (m > order()) throw error(errc::not_divisible, "shift exceeds series order");
        for (int i = 0; i < m; ++i)
            if (coeffs_[static_cast<std::size_t>(i)] != 0)
                throw error(errc::not_divisible, "coefficient of z^" + std::to_string(i) + " is nonzero");
        basic_series s(order() - m);
        for (int i = 0; i <= s.order(); ++i) s.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i + m)];
        return s;
    }

    basic_series operator-() const {
        basic_series s(*this);
        for (auto& c : s.coeffs_) c = -c;
        return s;
    }

    friend basic_series operator+(const basic_series& a, const basic_series& b) {
        basic_series s(std::min(a.order(), b.order()));
        for (int i = 0; i <= s.order(); ++i) s[i] = a[i] + b[i];
        return s;
    }
    friend basic_series operator-(const basic_series& a, const basic_series& b) {
        basic_series s(std::min(a.order(), b.order()));
        for (int i = 0; i <= s.order(); ++i) s[i] = a[i] - b[i];
        return s;
    }
    friend basic_series operator*(const basic_series& a, const basic_series& b) {
        basic_series s(std::min(a.order(), b.order()));
        const int n = s.order();
        for (int i = 0; i <= n; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b[j] == 0) continue;
                s[i + j] += a[i] * b[j];
            }
        }
        return s;
    }
    friend basic_series operator*(const Ring& c, const basic_series& a) {
        basic_series s(a);
        for (auto& x : s.coeffs_) x *= c;
        return s;
    }

    basic_series& operator+=(const basic_series& o) { return *this = *this + o; }
    basic_series& operator-=(const basic_series& o) { return *this = *this - o; }
    basic_series& operator*=(const basic_series& o) { return *this = *this * o; }

    friend bool operator==(const basic_series&, const basic_series&) = default;

private:
    std::vector<Ring> coeffs_;
};

using TruncSeries = basic_series<Rational>;

template <class Ring>
basic_series<Ring> pow(const basic_series<Ring>& x, int k) {
    if (k < 0) throw error(errc::invalid_argument, "negative power");
    auto result = basic_series<Ring>::constant(Ring(1), x.order());
    auto base = x;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

/// Multiplicative inverse; the constant term must be nonzero.
inline TruncSeries invert_unit(const TruncSeries& a) {
    if (a[0] == 0) throw error(errc::non_unit_constant_term, "constant term is zero");
    TruncSeries inv(a.order());
    const Rational c0 = 1 / a[0];
    inv[0] = c0;
    for (int n = 1; n <= a.order(); ++n) {
        Rational acc = 0;
        for (int i = 1; i <= n; ++i) acc += a[i] * inv[n - i];
        inv[n] = -acc * c0;
    }
    return inv;
}

/// Square root with s(0) = +1; the constant term must be exactly 1.
inline TruncSeries sqrt_unit(const TruncSeries& a) {
    if (a[0] != 1) throw error(errc::non_unit_constant_term, "square root needs constant term 1");
    TruncSeries s(a.order());
    s[0] = 1;
    for (int n = 1; n <= a.order(); ++n) {
        Rational acc = a[n];
        for (int i = 1; i < n; ++i) acc -= s[i] * s[n - i];
        s[n] = acc / 2;
    }
    return s;
}

/**
 * The unique power series x with x(0) = 0 solving x = c0 + c1 x + c2 x^2.
 *
 * All three coefficients must have valuation >= 1, which makes the map a
 * contraction in the z-adic metric: every iteration fixes one more
 * coefficient, so order + 1 rounds from x = 0 reach the fixed point.
 */
inline TruncSeries solve_quadratic_fixedpoint(const TruncSeries& c0, const TruncSeries& c1, const TruncSeries& c2,
                                              int order) {
    for (const TruncSeries* c : {&c0, &c1, &c2})
        if ((*c)[0] != 0) throw error(errc::not_contracting, "coefficient has a nonzero constant term");
    const auto a0 = c0.truncated(order);
    const auto a1 = c1.truncated(order);
    const auto a2 = c2.truncated(order);
    TruncSeries x(order);
    for (int round = 0; round <= order; ++round) {
        TruncSeries next = a0 + a1 * x + a2 * (x * x);
        if (next == x) break;
        x = std::move(next);
    }
    return x;
}

struct RelationTerm {
    TruncSeries coefficient;
    int power;
};

/// Sum of coefficient * x^power over the relation; zero iff x satisfies it to order.
inline TruncSeries check_algebraic(std::span<const RelationTerm> relation, const TruncSeries& x) {
    int order = x.order();
    for (const auto& t : relation) order = std::min(order, t.coefficient.order());
    TruncSeries residual(order);
    for (const auto& t : relation) residual += t.coefficient * pow(x.truncated(order), t.power);
    return residual;
}

/// `c0 + c1*z + c2*z^2 + ...`, zero terms skipped, exact rationals as p/q.
template <class Ring>
std::string to_string(const basic_series<Ring>& s) {
    std::string out;
    for (int i = 0; i <= s.order(); ++i) {
        const Ring& c = s[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Ring mag = negative ? Ring(-c) : c;
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        const std::string coef = mag.str();
        if (i == 0) {
            out += coef;
            continue;
        }
        if (mag != 1) out += coef + "*";
        out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

template <class Ring>
std::vector<std::string> coefficient_strings(const basic_series<Ring>& s) {
    std::vector<std::string> out;
    for (const auto& c : s.coefficients()) out.push_back(c.str());
    return out;
}

/**
 * Polynomial in u with series coefficients, capped at u-degree K.
 * Products discard every u-power above K; since no negative powers of u ever
 * appear, coefficients of u^0..u^K stay exact.
 */
class UPoly {
public:
    UPoly(int u_degree, int order) : order_(order), coeffs_(static_cast<std::size_t>(u_degree) + 1, TruncSeries(order)) {
        if (u_degree < 0) throw error(errc::invalid_argument, "u-degree must be >= 0");
    }

    /// c(z) * u^j
    static UPoly term(const TruncSeries& c, int j, int u_degree) {
        UPoly p(u_degree, c.order());
        if (j <= u_degree) p.coeffs_[static_cast<std::size_t>(j)] = c;
        return p;
    }

    int u_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    int order() const noexcept { return order_; }
    const TruncSeries& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
    TruncSeries& operator[](int j) { return coeffs_.at(static_cast<std::size_t>(j)); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) { return combine(a, b, +1); }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return combine(a, b, -1); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        UPoly p(std::min(a.u_degree(), b.u_degree()), std::min(a.order(), b.order()));
        for (int i = 0; i <= p.u_degree(); ++i)
            for (int j = 0; i + j <= p.u_degree(); ++j)
                if (!a[i].is_zero() && !b[j].is_zero()) p[i + j] += a[i] * b[j];
        return p;
    }

private:
    static UPoly combine(const UPoly& a, const UPoly& b, int sign) {
        UPoly p(std::min(a.u_degree(), b.u_degree()), std::min(a.order(), b.order()));
        for (int j = 0; j <= p.u_degree(); ++j) p[j] = sign > 0 ? a[j] + b[j] : a[j] - b[j];
        return p;
    }

    int order_;
    std::vector<TruncSeries> coeffs_;
};

}  // namespace knightpaths
