#pragma once

#include <utility>

#include "frolic/space.hpp"

namespace frolic {

/**
 * Tangent vector as a representative curve through its base point. The
 * equivalence class is never materialized; two vectors are compared by
 * pairing them against a probe set of functions.
 */
struct TangentVector {
    SpacePtr space;
    RealPoint base;
    Curve rep; ///< rep(0) == base within eq_tol

    static TangentVector at(SpacePtr space, Curve rep) {
        TangentVector v;
        v.base = rep(0.0);
        v.space = std::move(space);
        v.rep = std::move(rep);
        return v;
    }
};

/// Element of T^2 X: a two-parameter representative with the outer
/// parameter first.
struct SecondTangentVector {
    SpacePtr space;
    TwoParamMap rep;
};

/// Scalar-generic map between two described spaces.
struct SmoothMap {
    SpacePtr source;
    SpacePtr target;
    PointProgram program;
};

/// b([c], [f]) = (f o c)'(0).
inline double pairing(const TangentVector& v, const RealFunction& f) {
    return deriv_at_zero(f, v.rep);
}

/// Type invariant: the representative passes through the base and stays in
/// the space's membership set at the default sample parameters.
inline bool tangent_rep_valid(const TangentVector& v) {
    if (!points_equal(*v.space, v.rep(0.0), v.base)) return false;
    for (double u : default_samples())
        if (!v.space->contains(v.rep(u))) return false;
    return true;
}

/// Probe-based equality: bases must agree, then every probe pairing must
/// match within tol.
bool tangent_equal(const TangentVector& v, const TangentVector& w,
                   const std::vector<RealFunction>& probes, double tol);

/// Equality against the space's default probe set (generators plus 20
/// seeded random combinations).
bool tangent_equal(const TangentVector& v, const TangentVector& w,
                   double tol = 1e-9, std::uint64_t probe_seed = 2024);

/// s * [c] = [u -> c(s u)].
TangentVector scalar_mul(double s, const TangentVector& v);

/// T phi ([c]) = [phi o c].
TangentVector tangent_map(const SmoothMap& phi, const TangentVector& v);

/// T^2 phi (xi) is represented by phi o gamma.
SecondTangentVector second_tangent_map(const SmoothMap& phi,
                                       const SecondTangentVector& xi);

/// Component tangent vectors of a vector on a binary product space.
std::pair<TangentVector, TangentVector> product_split(const TangentVector& v);

/// [s -> (c(s), d(s))] on product(x.space, y.space).
TangentVector product_join(const TangentVector& x, const TangentVector& y);

/**
 * Sampled test of the three conditions for a two-parameter map to represent
 * a curve into TX: smoothness in t at fixed s, smoothness of the base curve
 * s -> g(s,0), and smoothness in s of the fiber derivative
 * d(f o g)/dt (s, 0) for every generator f.
 */
ProbeReport tx_curve_check(const TwoParamMap& g, const SpaceDescriptor& space,
                           const std::vector<double>& s_samples = default_samples(),
                           double tol = 1e-5);

/// Classical coordinate representation d/du (chart o rep)(0); requires the
/// space to carry a chart whose domain contains the base point.
std::vector<double> chart_consistency(const TangentVector& v);

} // namespace frolic
