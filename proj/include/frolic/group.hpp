#pragma once

#include "frolic/jet_matrix.hpp"
#include "frolic/rng.hpp"
#include "frolic/tangent.hpp"

namespace frolic {

/**
 * Group object over a described space: scalar-generic multiplication and
 * inversion plus a chart at the identity with chart(e) = 0. The chart is
 * required on registration; it is what turns the abstract tangent-space
 * line map into a computable coordinate extraction.
 */
struct FrolicherGroupDescriptor {
    std::string name;
    SpacePtr space; ///< carries the chart at identity
    RealPoint identity;
    int lie_dim = 0;
    GroupProduct mul;
    PointProgram inv;
    double sample_radius = 0.4; ///< chart-coordinate radius for random elements
    std::function<bool(const RealPoint&)> sample_guard; ///< extra conditioning
};

using GroupPtr = std::shared_ptr<const FrolicherGroupDescriptor>;

// Builtin groups. Matrix groups use flattened row-major ambient coordinates.
GroupPtr additive_group(int n);
GroupPtr gl_group(int n); ///< n <= 4
GroupPtr so3_group();
GroupPtr sl2_group();
GroupPtr heisenberg_group();
GroupPtr torus2_group();
GroupPtr r_power_group(int j_size,
                       const std::vector<std::vector<int>>& supports = {});

/**
 * Desk-scale stand-in for a mapping group C^inf(S^1, G): elements are
 * G-chart-valued trigonometric polynomials of degree <= modes, multiplied
 * pointwise at 8 (modes + 1) quadrature angles and re-projected by discrete
 * Fourier truncation. An approximation, not an exact group; see the sampled
 * axiom checks for the radius at which the defect stays below tolerance.
 */
GroupPtr loop_group(int modes, const std::string& target = "so3");

/// One row of the builtin registry for listings.
struct BuiltinInfo {
    std::string kind;
    std::string params;
    std::string lie_dim;
};
std::vector<BuiltinInfo> builtin_group_listing();

/// Random element: chart preimage of uniform coordinates within
/// sample_radius, re-drawn until membership and guard accept it.
RealPoint random_element(const FrolicherGroupDescriptor& g, std::mt19937_64& rng);

/// Tangent vector at the identity represented by the chart line
/// u -> chart^-1(u * coords).
TangentVector chart_line(const FrolicherGroupDescriptor& g,
                         const std::vector<double>& coords);

TangentVector random_tangent(const FrolicherGroupDescriptor& g,
                             std::mt19937_64& rng, double scale = 0.5);

/// Constant curve through a point: the zero vector of T_g G.
TangentVector zero_vector(const FrolicherGroupDescriptor& g, RealPoint base);

/// [c] + [d] = [s -> c(s) g^-1 d(s)] at shared base g.
TangentVector tangent_add(const FrolicherGroupDescriptor& g,
                          const TangentVector& v, const TangentVector& w);

/// -[c] = [s -> g c(s)^-1 g].
TangentVector tangent_neg(const FrolicherGroupDescriptor& g,
                          const TangentVector& v);

/// Group multiplication on TG: [c][d] = [s -> c(s) d(s)], based at gh.
TangentVector tg_mul(const FrolicherGroupDescriptor& g, const TangentVector& v,
                     const TangentVector& w);

/// g [c] = [s -> g c(s)].
TangentVector left_translate(const FrolicherGroupDescriptor& g,
                             const RealPoint& point, const TangentVector& v);

/**
 * Sampled group laws: identity, inverse, associativity within eq_tol, and
 * agreement of the value part of jet evaluation with plain-real evaluation.
 */
ProbeReport group_axioms_check(const FrolicherGroupDescriptor& g,
                               int trials = 50, std::uint64_t seed = 42);

} // namespace frolic
