#pragma once

#include <cmath>
#include <concepts>
#include <initializer_list>
#include <span>

namespace cyclic::quadrature {

namespace detail {

template <std::floating_point T, class F>
T simpson_step(const F& f, T a, T b, T fa, T fm, T fb, T whole, T tol, int depth) {
    const T m = (a + b) / 2;
    const T lm = (a + m) / 2;
    const T rm = (m + b) / 2;
    const T flm = f(lm);
    const T frm = f(rm);
    const T left = (m - a) / 6 * (fa + 4 * flm + fm);
    const T right = (b - m) / 6 * (fm + 4 * frm + fb);
    const T delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15 * tol) return left + right + delta / 15;
    return simpson_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson on [a, b] with Richardson correction.
template <std::floating_point T, class F>
T adaptive_simpson(const F& f, T a, T b, T tol = T(1e-13), int max_depth = 50) {
    if (a == b) return T(0);
    const T fa = f(a);
    const T fb = f(b);
    const T fm = f((a + b) / 2);
    const T whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

/// Integrates over [a, b] split at every breakpoint lying strictly inside,
/// so each call sees a smooth piece.
template <std::floating_point T, class F>
T integrate_pieces(const F& f, T a, T b, std::span<const T> breakpoints, T tol = T(1e-13)) {
    T total = 0;
    T lo = a;
    for (T bp : breakpoints) {
        if (bp <= lo || bp >= b) continue;
        total += adaptive_simpson(f, lo, bp, tol);
        lo = bp;
    }
    return total + adaptive_simpson(f, lo, b, tol);
}

/// Golden-section search for the maximum of a unimodal f on [a, b].
/// Returns the abscissa.
template <std::floating_point T, class F>
T golden_maximize(const F& f, T a, T b, T tol = T(1e-12)) {
    const T inv_phi = (std::sqrt(T(5)) - 1) / 2;
    T c = b - inv_phi * (b - a);
    T d = a + inv_phi * (b - a);
    T fc = f(c);
    T fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return (a + b) / 2;
}

/// Bisection for the root of a monotone g on [a, b] with g(a) <= 0 <= g(b).
template <std::floating_point T, class G>
T bisect_increasing(const G& g, T a, T b, T tol = T(1e-10)) {
    while (b - a > tol) {
        const T m = (a + b) / 2;
        if (g(m) < 0) {
            a = m;
        } else {
            b = m;
        }
    }
    return (a + b) / 2;
}

}  // namespace cyclic::quadrature
