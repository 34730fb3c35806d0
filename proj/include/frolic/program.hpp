#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "frolic/jet.hpp"

namespace frolic {

/// Point in ambient coordinates over a generic scalar.
template <class S>
using Pt = std::vector<S>;

using RealPoint = Pt<double>;
using JetPoint  = Pt<Jet2>;

/// Lift a constant point into any scalar ring.
template <class S>
Pt<S> lift_point(const RealPoint& p) {
    Pt<S> out;
    out.reserve(p.size());
    for (double x : p) out.emplace_back(x);
    return out;
}

template <class P>
using scalar_of = typename std::decay_t<P>::value_type;

// Unqualified-call shims so one generic program body works over doubles
// (std:: functions) and jets (ADL finds the frolic overloads).
namespace gm {

template <class S> S sin(const S& x) { using std::sin; return sin(x); }
template <class S> S cos(const S& x) { using std::cos; return cos(x); }
template <class S> S exp(const S& x) { using std::exp; return exp(x); }
template <class S> S log(const S& x) { using std::log; return log(x); }
template <class S> S sqrt(const S& x) { using std::sqrt; return sqrt(x); }
template <class S> S pow(const S& x, double e) { using std::pow; return pow(x, e); }
template <class S> S atan2(const S& y, const S& x) {
    using std::atan2;
    return atan2(y, x);
}

inline double log_checked(double x) {
    if (x <= 0.0) throw DomainError("log of non-positive value");
    return std::log(x);
}
inline double sqrt_checked(double x) {
    if (x <= 0.0) throw DomainError("sqrt of non-positive value");
    return std::sqrt(x);
}

} // namespace gm

/**
 * Scalar-generic map R -> X. One generic program, stored as its two
 * instantiations: over plain reals and over the jet ring. The plain-real
 * path runs the identical float operations as the value slots of the jet
 * path, so the two agree exactly.
 */
class Curve {
  public:
    Curve() = default;

    template <class F>
        requires(!std::same_as<std::decay_t<F>, Curve> &&
                 std::convertible_to<std::invoke_result_t<F, double>, RealPoint> &&
                 std::convertible_to<std::invoke_result_t<F, Jet2>, JetPoint>)
    Curve(F f)
        : real_([f](double u) -> RealPoint { return f(u); }),
          jet_([f](Jet2 u) -> JetPoint { return f(u); }) {}

    RealPoint operator()(double u) const { return real_(u); }
    JetPoint operator()(const Jet2& u) const { return jet_(u); }

    explicit operator bool() const { return static_cast<bool>(real_); }

  private:
    std::function<RealPoint(double)> real_;
    std::function<JetPoint(Jet2)> jet_;
};

/// Scalar-generic function X -> R.
class RealFunction {
  public:
    RealFunction() = default;

    template <class F>
        requires(!std::same_as<std::decay_t<F>, RealFunction> &&
                 std::convertible_to<std::invoke_result_t<F, const RealPoint&>, double> &&
                 std::convertible_to<std::invoke_result_t<F, const JetPoint&>, Jet2>)
    RealFunction(F f)
        : real_([f](const RealPoint& p) -> double { return f(p); }),
          jet_([f](const JetPoint& p) -> Jet2 { return f(p); }) {}

    double operator()(const RealPoint& p) const { return real_(p); }
    Jet2 operator()(const JetPoint& p) const { return jet_(p); }

    explicit operator bool() const { return static_cast<bool>(real_); }

  private:
    std::function<double(const RealPoint&)> real_;
    std::function<Jet2(const JetPoint&)> jet_;
};

/// Scalar-generic map R^2 -> X.
class TwoParamMap {
  public:
    TwoParamMap() = default;

    template <class F>
        requires(!std::same_as<std::decay_t<F>, TwoParamMap> &&
                 std::convertible_to<std::invoke_result_t<F, double, double>, RealPoint> &&
                 std::convertible_to<std::invoke_result_t<F, Jet2, Jet2>, JetPoint>)
    TwoParamMap(F f)
        : real_([f](double s, double t) -> RealPoint { return f(s, t); }),
          jet_([f](Jet2 s, Jet2 t) -> JetPoint { return f(s, t); }) {}

    RealPoint operator()(double s, double t) const { return real_(s, t); }
    JetPoint operator()(const Jet2& s, const Jet2& t) const { return jet_(s, t); }

    explicit operator bool() const { return static_cast<bool>(real_); }

  private:
    std::function<RealPoint(double, double)> real_;
    std::function<JetPoint(Jet2, Jet2)> jet_;
};

/// Scalar-generic map X -> Y on ambient coordinates.
class PointProgram {
  public:
    PointProgram() = default;

    template <class F>
        requires(!std::same_as<std::decay_t<F>, PointProgram> &&
                 std::convertible_to<std::invoke_result_t<F, const RealPoint&>, RealPoint> &&
                 std::convertible_to<std::invoke_result_t<F, const JetPoint&>, JetPoint>)
    PointProgram(F f)
        : real_([f](const RealPoint& p) -> RealPoint { return f(p); }),
          jet_([f](const JetPoint& p) -> JetPoint { return f(p); }) {}

    RealPoint operator()(const RealPoint& p) const { return real_(p); }
    JetPoint operator()(const JetPoint& p) const { return jet_(p); }

    explicit operator bool() const { return static_cast<bool>(real_); }

  private:
    std::function<RealPoint(const RealPoint&)> real_;
    std::function<JetPoint(const JetPoint&)> jet_;
};

/// Scalar-generic binary map X x X -> X; houses group multiplications.
class GroupProduct {
  public:
    GroupProduct() = default;

    template <class F>
        requires(!std::same_as<std::decay_t<F>, GroupProduct> &&
                 std::convertible_to<
                     std::invoke_result_t<F, const RealPoint&, const RealPoint&>,
                     RealPoint> &&
                 std::convertible_to<
                     std::invoke_result_t<F, const JetPoint&, const JetPoint&>,
                     JetPoint>)
    GroupProduct(F f)
        : real_([f](const RealPoint& a, const RealPoint& b) -> RealPoint {
              return f(a, b);
          }),
          jet_([f](const JetPoint& a, const JetPoint& b) -> JetPoint {
              return f(a, b);
          }) {}

    RealPoint operator()(const RealPoint& a, const RealPoint& b) const {
        return real_(a, b);
    }
    JetPoint operator()(const JetPoint& a, const JetPoint& b) const {
        return jet_(a, b);
    }

    explicit operator bool() const { return static_cast<bool>(real_); }

  private:
    std::function<RealPoint(const RealPoint&, const RealPoint&)> real_;
    std::function<JetPoint(const JetPoint&, const JetPoint&)> jet_;
};

// Pointwise algebra on functions. Combinations evaluate componentwise in the
// scalar ring, so linearity of derivative extraction holds exactly in floats.

inline RealFunction fn_add(RealFunction a, RealFunction b) {
    return RealFunction([a, b](const auto& p) { return a(p) + b(p); });
}

inline RealFunction fn_mul(RealFunction a, RealFunction b) {
    return RealFunction([a, b](const auto& p) { return a(p) * b(p); });
}

inline RealFunction fn_scale(double s, RealFunction a) {
    return RealFunction([s, a](const auto& p) {
        using S = scalar_of<decltype(p)>;
        return S(s) * a(p);
    });
}

inline RealFunction fn_const(double c) {
    return RealFunction([c](const auto& p) {
        using S = scalar_of<decltype(p)>;
        (void)p;
        return S(c);
    });
}

inline Curve compose(const PointProgram& phi, const Curve& c) {
    return Curve([phi, c](auto u) { return phi(c(u)); });
}

inline TwoParamMap compose(const PointProgram& phi, const TwoParamMap& g) {
    return TwoParamMap([phi, g](auto s, auto t) { return phi(g(s, t)); });
}

inline RealFunction compose(const RealFunction& f, const PointProgram& phi) {
    return RealFunction([f, phi](const auto& p) { return f(phi(p)); });
}

/// Reparametrize a curve by u -> u0 + scale * u.
inline Curve reparam(const Curve& c, double u0, double scale) {
    return Curve([c, u0, scale](auto u) {
        using S = decltype(u);
        return c(S(u0) + S(scale) * u);
    });
}

} // namespace frolic
