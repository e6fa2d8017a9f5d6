#pragma once

/**
 * Closed-form coefficients of the zigzag f_k, g_k series and of the knight
 * excursions by length, evaluated directly with exact binomials.
 */

#include "knightpaths/bigint.hpp"
#include "knightpaths/error.hpp"

#include <cstdint>
#include <string>

namespace knightpaths::closed {

enum class Family { F, G };

/// a(n, k) = sum_{i=0}^{floor((n-1)/2)} k/(n-i) * C(n-i, i+k) * C(n-i, i),
/// the coefficient [z^n] of the k-th power of the rescaled size root.
/// Zero for n <= 0 or k <= 0.
inline BigInt a(std::int64_t n, std::int64_t k) {
    if (n <= 0 || k <= 0) return 0;
    Rational sum = 0;
    for (std::int64_t i = 0; i <= (n - 1) / 2; ++i)
        sum += Rational(BigInt(k) * binomial(n - i, i + k) * binomial(n - i, i), BigInt(n - i));
    if (!is_integral(sum)) throw std::logic_error("a(" + std::to_string(n) + "," + std::to_string(k) + ") not integral");
    return boost::multiprecision::numerator(sum);
}

/// [z^m] r^j for the size-measure root r; r^j = z^j * rhat(z^2)^j.
inline BigInt size_root_power_coeff(std::int64_t m, std::int64_t j) {
    if (j == 0) return m == 0 ? 1 : 0;
    if (m < j || (m - j) % 2 != 0) return 0;
    return a((m - j) / 2, j);
}

/**
 * [z^m] of f_k or g_k for zigzag paths by size.
 *
 * Heights k >= 2 for f and k >= 1 for g use the four parity-indexed formulas
 *   [z^{2n}]   f_{2k+1} = a(n-k, 2k+1) + a(n-k+1, 2k)
 *   [z^{2n-1}] f_{2k}   = a(n-k, 2k)   + a(n-k+1, 2k-1)
 *   [z^{2n}]   g_{2k}   = a(n-k+1, 2k+1)
 *   [z^{2n-1}] g_{2k-1} = a(n-k+1, 2k)
 * with every other parity combination zero. The remaining families come from
 * f_1 = r/z and g_0 = r/z^3 - 1:
 *   [z^0] f_0 = 1,  [z^{2n}] f_1 = a(n, 1),  [z^{2n}] g_0 = a(n+1, 1) - [n = 0].
 */
inline BigInt size_coeff(Family family, std::int64_t m, std::int64_t k) {
    if (m < 0 || k < 0) return 0;
    const bool even = m % 2 == 0;
    if (family == Family::F) {
        if (k == 0) return m == 0 ? 1 : 0;
        if (k == 1) return even ? a(m / 2, 1) : BigInt(0);
        if (k % 2 == 1) {
            if (!even || m == 0) return 0;
            const std::int64_t n = m / 2, h = (k - 1) / 2;
            return a(n - h, 2 * h + 1) + a(n - h + 1, 2 * h);
        }
        if (even) return 0;
        const std::int64_t n = (m + 1) / 2, h = k / 2;
        return a(n - h, 2 * h) + a(n - h + 1, 2 * h - 1);
    }
    if (k == 0) {
        if (!even) return 0;
        return a(m / 2 + 1, 1) - (m == 0 ? 1 : 0);
    }
    if (k % 2 == 0) {
        if (!even || m == 0) return 0;
        const std::int64_t n = m / 2, h = k / 2;
        return a(n - h + 1, 2 * h + 1);
    }
    if (even) return 0;
    const std::int64_t n = (m + 1) / 2, h = (k + 1) / 2;
    return a(n - h + 1, 2 * h);
}

namespace detail {
/// num/den * C(top, bottom), asserting the division is exact.
inline BigInt scaled_binomial(std::int64_t num, std::int64_t den, std::int64_t top, std::int64_t bottom) {
    const BigInt product = BigInt(num) * binomial(top, bottom);
    if (product % den != 0) throw std::logic_error("non-integral closed-form coefficient");
    return product / den;
}
}  // namespace detail

/**
 * [z^m] of f_k or g_k for zigzag paths by length:
 *   [z^0] f_0 = 1,
 *   [z^{2n-1}] f_k = (2k-1)/(n+k) C(2n, n-k+1),   k >= 1,
 *   [z^{2n}]   g_0 = 1/(n+2) C(2n+2, n+1),
 *   [z^{2n}]   g_k = (k+1)/(n+1) C(2n+2, n-k),    k >= 1,
 * for n >= 1; zero elsewhere.
 */
inline BigInt length_coeff(Family family, std::int64_t m, std::int64_t k) {
    if (m < 0 || k < 0) return 0;
    if (family == Family::F) {
        if (k == 0) return m == 0 ? 1 : 0;
        if (m % 2 == 0) return 0;
        const std::int64_t n = (m + 1) / 2;
        return detail::scaled_binomial(2 * k - 1, n + k, 2 * n, n - k + 1);
    }
    if (m % 2 != 0 || m == 0) return 0;
    const std::int64_t n = m / 2;
    if (k == 0) return detail::scaled_binomial(1, n + 2, 2 * n + 2, n + 1);
    return detail::scaled_binomial(k + 1, n + 1, 2 * n + 2, n - k);
}

inline BigInt zigzag_coeff(bool by_size, std::int64_t m, std::int64_t k) {
    return by_size ? size_coeff(Family::F, m, k) + size_coeff(Family::G, m, k)
                   : length_coeff(Family::F, m, k) + length_coeff(Family::G, m, k);
}

/**
 * Knight paths of length n ending on the axis:
 *   e_n = 1/(n+1) sum_{i=0}^{floor(n/2)} C(2n+2, i) C(n-i-1, n-2i).
 * The second binomial takes the upper index -1 at n = 0, where C(-1, 0) = 1.
 */
inline BigInt e_n(std::int64_t n) {
    if (n < 0) return 0;
    BigInt sum = 0;
    for (std::int64_t i = 0; i <= n / 2; ++i) sum += binomial(2 * n + 2, i) * generalized_binomial(n - i - 1, n - 2 * i);
    if (sum % (n + 1) != 0) throw std::logic_error("e_n not integral");
    return sum / (n + 1);
}

}  // namespace knightpaths::closed
