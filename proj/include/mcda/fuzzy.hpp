#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcda {

/// Triangular fuzzy number (a, b, c): membership is zero outside [a, c],
/// one at the mode b, and linear on each leg. Degenerate legs (a == b or
/// b == c) are allowed and keep the unit peak at the shared point.
struct TriangularFuzzyNumber {
    double a = 0.0;  ///< left support bound
    double b = 0.0;  ///< mode
    double c = 0.0;  ///< right support bound

    friend bool operator==(const TriangularFuzzyNumber&, const TriangularFuzzyNumber&) = default;
};

inline bool is_valid(const TriangularFuzzyNumber& fn) {
    return fn.a <= fn.b && fn.b <= fn.c;
}

/// Membership degree at x. Total over the reals.
inline double membership(const TriangularFuzzyNumber& fn, double x) {
    if (x < fn.a || x > fn.c) return 0.0;
    if (x == fn.b) return 1.0;
    if (x < fn.b) return (x - fn.a) / (fn.b - fn.a);
    return (x - fn.c) / (fn.b - fn.c);
}

/// Componentwise scaling by a nonnegative factor.
inline TriangularFuzzyNumber scale(const TriangularFuzzyNumber& fn, double k) {
    if (k < 0.0)
        throw std::invalid_argument("scale: factor must be nonnegative, got " + std::to_string(k));
    return {k * fn.a, k * fn.b, k * fn.c};
}

/// Componentwise sum; exact under the extension principle for triangular shapes.
inline TriangularFuzzyNumber add(const TriangularFuzzyNumber& p, const TriangularFuzzyNumber& q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c};
}

inline TriangularFuzzyNumber operator*(double k, const TriangularFuzzyNumber& fn) {
    return scale(fn, k);
}

inline TriangularFuzzyNumber operator+(const TriangularFuzzyNumber& p, const TriangularFuzzyNumber& q) {
    return add(p, q);
}

/// Centroid of a membership curve.
struct Centroid {
    double x0 = 0.0;  ///< horizontal coordinate
    double y0 = 0.0;  ///< vertical coordinate

    friend bool operator==(const Centroid&, const Centroid&) = default;
};

/// Closed form for triangular numbers: x0 = (a + b + c) / 3, y0 = 1/3.
inline Centroid centroid(const TriangularFuzzyNumber& fn) {
    return {(fn.a + fn.b + fn.c) / 3.0, 1.0 / 3.0};
}

/// Trapezoidal fuzzy number with height omega: membership is zero outside
/// [a, d], equals omega on the plateau [b, c], and is linear on the flanks.
struct GeneralizedFuzzyNumber {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double omega = 1.0;  ///< height, in (0, 1]

    friend bool operator==(const GeneralizedFuzzyNumber&, const GeneralizedFuzzyNumber&) = default;
};

inline bool is_valid(const GeneralizedFuzzyNumber& fn) {
    return fn.a <= fn.b && fn.b <= fn.c && fn.c <= fn.d && fn.omega > 0.0 && fn.omega <= 1.0;
}

inline double membership(const GeneralizedFuzzyNumber& fn, double x) {
    if (x < fn.a || x > fn.d) return 0.0;
    if (x >= fn.b && x <= fn.c) return fn.omega;
    if (x < fn.b) return fn.omega * (x - fn.a) / (fn.b - fn.a);
    return fn.omega * (fn.d - x) / (fn.d - fn.c);
}

namespace detail {

/// Composite trapezoid rule over [lo, hi] with n sample points.
template <typename F>
double trapezoid(F&& f, double lo, double hi, std::size_t n) {
    if (hi <= lo) return 0.0;
    const double h = (hi - lo) / static_cast<double>(n - 1);
    double acc = 0.5 * (f(lo) + f(hi));
    for (std::size_t i = 1; i + 1 < n; ++i) acc += f(lo + h * static_cast<double>(i));
    return acc * h;
}

}  // namespace detail

/// Centroid by quadrature: the horizontal coordinate integrates the shape
/// over its support, the vertical one integrates the gap between the exact
/// linear inverses of the flanks over [0, omega]. A zero-area number
/// (a == d) degenerates to the crisp point (a, omega / 2).
inline Centroid centroid(const GeneralizedFuzzyNumber& fn, std::size_t quadrature_points) {
    if (!is_valid(fn)) throw std::invalid_argument("centroid: invalid generalized fuzzy number");
    if (quadrature_points < 2)
        throw std::invalid_argument("centroid: at least 2 quadrature points required");
    if (fn.a == fn.d) return {fn.a, fn.omega / 2.0};

    const std::size_t n = quadrature_points;
    const auto f = [&fn](double x) { return membership(fn, x); };
    const auto xf = [&fn](double x) { return x * membership(fn, x); };

    const double num_x = detail::trapezoid(xf, fn.a, fn.b, n) + detail::trapezoid(xf, fn.b, fn.c, n) +
                         detail::trapezoid(xf, fn.c, fn.d, n);
    const double den_x = detail::trapezoid(f, fn.a, fn.b, n) + detail::trapezoid(f, fn.b, fn.c, n) +
                         detail::trapezoid(f, fn.c, fn.d, n);

    // Inverse flank functions: g_left maps [0, omega] onto [a, b], g_right
    // maps [0, omega] onto [c, d].
    const auto width = [&fn](double y) {
        const double t = y / fn.omega;
        const double g_left = fn.a + (fn.b - fn.a) * t;
        const double g_right = fn.d - (fn.d - fn.c) * t;
        return g_right - g_left;
    };
    const double num_y = detail::trapezoid([&](double y) { return y * width(y); }, 0.0, fn.omega, n);
    const double den_y = detail::trapezoid(width, 0.0, fn.omega, n);

    return {num_x / den_x, num_y / den_y};
}

}  // namespace mcda
