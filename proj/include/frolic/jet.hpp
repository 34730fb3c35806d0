#pragma once

#include <cmath>
#include <ostream>

#include "frolic/errors.hpp"

namespace frolic {

/**
 * Element of the ring R[s,t]/(s^2, t^2): a truncated bivariate Taylor
 * expansion carrying a value, both first partials and the mixed partial.
 *
 * Seeding one evaluation parameter with ds = 1 and another with dt = 1 and
 * reading `dst` after running a program yields the exact mixed second
 * partial d^2/ds dt at the seed point, up to float rounding. The nilpotency
 * s^2 = t^2 = 0 makes every expansion below terminate; there is no
 * truncation error to analyze.
 */
struct Jet2 {
    double val = 0.0; ///< function value
    double ds  = 0.0; ///< d/ds coefficient
    double dt  = 0.0; ///< d/dt coefficient
    double dst = 0.0; ///< d^2/ds dt coefficient

    constexpr Jet2() = default;
    constexpr Jet2(double v) : val(v) {}
    constexpr Jet2(double v, double s, double t, double st)
        : val(v), ds(s), dt(t), dst(st) {}

    friend constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
        return {a.val + b.val, a.ds + b.ds, a.dt + b.dt, a.dst + b.dst};
    }

    friend constexpr Jet2 operator-(const Jet2& a, const Jet2& b) {
        return {a.val - b.val, a.ds - b.ds, a.dt - b.dt, a.dst - b.dst};
    }

    friend constexpr Jet2 operator-(const Jet2& a) {
        return {-a.val, -a.ds, -a.dt, -a.dst};
    }

    friend constexpr Jet2 operator+(const Jet2& a) { return a; }

    // (a + n)(b + m) with n, m nilpotent; the dst slot collects the one
    // surviving cross term n*m -> ds*dt + dt*ds.
    friend constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
        return {a.val * b.val,
                a.val * b.ds + a.ds * b.val,
                a.val * b.dt + a.dt * b.val,
                a.val * b.dst + a.ds * b.dt + a.dt * b.ds + a.dst * b.val};
    }

    // Synthetic division: solve q*b = a slot by slot so that the value part
    // is the literal quotient a.val / b.val, bit-identical to the plain-real
    // evaluation of the same program.
    friend constexpr Jet2 operator/(const Jet2& a, const Jet2& b) {
        if (b.val == 0.0) throw ZeroValuePart("jet division by zero value part");
        Jet2 q;
        q.val = a.val / b.val;
        q.ds  = (a.ds - q.val * b.ds) / b.val;
        q.dt  = (a.dt - q.val * b.dt) / b.val;
        q.dst = (a.dst - q.val * b.dst - q.ds * b.dt - q.dt * b.ds) / b.val;
        return q;
    }

    Jet2& operator+=(const Jet2& b) { return *this = *this + b; }
    Jet2& operator-=(const Jet2& b) { return *this = *this - b; }
    Jet2& operator*=(const Jet2& b) { return *this = *this * b; }
    Jet2& operator/=(const Jet2& b) { return *this = *this / b; }

    friend constexpr bool operator==(const Jet2& a, const Jet2& b) {
        return a.val == b.val && a.ds == b.ds && a.dt == b.dt && a.dst == b.dst;
    }

    friend std::ostream& operator<<(std::ostream& out, const Jet2& a) {
        return out << "(" << a.val << ", " << a.ds << ", " << a.dt << ", "
                   << a.dst << ")";
    }
};

/// First evaluation parameter: value v plus the s-direction seed.
constexpr Jet2 seed_s(double v) { return {v, 1.0, 0.0, 0.0}; }

/// Second evaluation parameter: value v plus the t-direction seed.
constexpr Jet2 seed_t(double v) { return {v, 0.0, 1.0, 0.0}; }

/// Value part of a scalar, for branching inside scalar-generic programs.
constexpr double value_of(double x) { return x; }
constexpr double value_of(const Jet2& a) { return a.val; }

/**
 * Multiplicative inverse via the terminating expansion
 * 1/(v + n) = (1 - n/v + (n/v)^2) / v with n nilpotent, cubes vanishing.
 */
constexpr Jet2 invert(const Jet2& a) {
    if (a.val == 0.0) throw ZeroValuePart("jet invert at zero value part");
    const double iv = 1.0 / a.val;
    return {iv,
            -a.ds * iv * iv,
            -a.dt * iv * iv,
            -a.dst * iv * iv + 2.0 * a.ds * a.dt * iv * iv * iv};
}

constexpr double invert(double x) {
    if (x == 0.0) throw ZeroValuePart("invert at zero");
    return 1.0 / x;
}

namespace detail {

// f(v + n) = f(v) + f'(v) n + f''(v)/2 n^2; n^2 contributes 2 ds dt to dst.
constexpr Jet2 taylor_compose(const Jet2& a, double f0, double f1, double f2) {
    return {f0, f1 * a.ds, f1 * a.dt, f1 * a.dst + f2 * a.ds * a.dt};
}

} // namespace detail

inline Jet2 sin(const Jet2& a) {
    return detail::taylor_compose(a, std::sin(a.val), std::cos(a.val),
                                  -std::sin(a.val));
}

inline Jet2 cos(const Jet2& a) {
    return detail::taylor_compose(a, std::cos(a.val), -std::sin(a.val),
                                  -std::cos(a.val));
}

inline Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.val);
    return detail::taylor_compose(a, e, e, e);
}

inline Jet2 log(const Jet2& a) {
    if (a.val <= 0.0) throw DomainError("log of non-positive value part");
    const double iv = 1.0 / a.val;
    return detail::taylor_compose(a, std::log(a.val), iv, -iv * iv);
}

inline Jet2 sqrt(const Jet2& a) {
    if (a.val <= 0.0) throw DomainError("sqrt of non-positive value part");
    const double r = std::sqrt(a.val);
    return detail::taylor_compose(a, r, 0.5 / r, -0.25 / (r * a.val));
}

inline Jet2 pow(const Jet2& a, double e) {
    const bool integral = e == std::floor(e);
    if (a.val == 0.0 || (a.val < 0.0 && !integral))
        throw DomainError("pow outside real domain");
    const double f0 = std::pow(a.val, e);
    const double f1 = e * std::pow(a.val, e - 1.0);
    const double f2 = e * (e - 1.0) * std::pow(a.val, e - 2.0);
    return detail::taylor_compose(a, f0, f1, f2);
}

/// Bivariate chain rule through second order for atan2(y, x).
inline Jet2 atan2(const Jet2& y, const Jet2& x) {
    const double u = y.val, w = x.val;
    const double r2 = u * u + w * w;
    if (r2 == 0.0) throw DomainError("atan2 at the origin");
    const double fy = w / r2;
    const double fx = -u / r2;
    const double r4 = r2 * r2;
    const double fyy = -2.0 * u * w / r4;
    const double fxx = 2.0 * u * w / r4;
    const double fyx = (u * u - w * w) / r4;
    Jet2 out;
    out.val = std::atan2(u, w);
    out.ds  = fy * y.ds + fx * x.ds;
    out.dt  = fy * y.dt + fx * x.dt;
    out.dst = fy * y.dst + fx * x.dst + fyy * y.ds * y.dt + fxx * x.ds * x.dt +
              fyx * (y.ds * x.dt + y.dt * x.ds);
    return out;
}

} // namespace frolic
