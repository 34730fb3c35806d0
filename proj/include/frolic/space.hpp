#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frolic/smooth.hpp"

namespace frolic {

/// Local coordinates around a point: a pair of mutually inverse
/// scalar-generic maps between a neighborhood and R^dim.
struct Chart {
    int dim = 0;
    PointProgram to_coords;   ///< ambient point -> R^dim
    PointProgram from_coords; ///< R^dim -> ambient point
    std::function<bool(const RealPoint&)> domain; ///< null = everywhere
};

/// Function on R^J that reads only the coordinates in a declared finite
/// support set.
struct FiniteSupportFunction {
    std::vector<int> support;
    RealFunction core; ///< function of |support| packed coordinates

    /// The function on the ambient space: select support coords, apply core.
    RealFunction lifted() const {
        const auto idx = support;
        const auto f = core;
        return RealFunction([idx, f](const auto& p) {
            using S = scalar_of<decltype(p)>;
            Pt<S> packed;
            packed.reserve(idx.size());
            for (int j : idx) packed.push_back(p[static_cast<size_t>(j)]);
            return f(packed);
        });
    }
};

/**
 * A space given by its ambient point representation, a finite generating
 * family of curves and functions, and an optional chart. The full saturated
 * structure is never materialized; every universally quantified statement is
 * probed over the generators plus random combinations of them.
 */
struct SpaceDescriptor {
    std::string name;
    int point_arity = 0;
    double eq_tol = 1e-9;
    std::function<bool(const RealPoint&)> membership; ///< null = everything
    std::vector<RealFunction> gen_functions;
    std::vector<Curve> gen_curves;
    std::optional<Chart> chart;
    std::vector<FiniteSupportFunction> support_functions; ///< r_power only

    // Set when the space was built as a binary product.
    std::shared_ptr<const SpaceDescriptor> factor_left;
    std::shared_ptr<const SpaceDescriptor> factor_right;
    int left_arity = 0;

    bool is_product() const { return factor_left && factor_right; }
    bool contains(const RealPoint& p) const {
        return !membership || membership(p);
    }
};

using SpacePtr = std::shared_ptr<const SpaceDescriptor>;

inline bool points_equal(const SpaceDescriptor& space, const RealPoint& a,
                         const RealPoint& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > space.eq_tol) return false;
    return true;
}

/// Parameter samples used by all sampled membership/saturation checks.
inline const std::vector<double>& default_samples() {
    static const std::vector<double> s{-1.0, -0.3, 0.0, 0.3, 1.0};
    return s;
}

// Builtin spaces.
SpacePtr euclidean_space(int n);
SpacePtr circle_space();
SpacePtr coordinate_cross_space();
SpacePtr r_power_space(int j_size,
                       const std::vector<std::vector<int>>& supports = {});

/// Product: arities add, factor functions precompose the projections,
/// curves are pairs of factor generators.
SpacePtr product(SpacePtr a, SpacePtr b);

/// Subset with a declared curve family. Functions restrict; the provided
/// curves must land in the subset at the default samples.
SpacePtr subset(SpacePtr parent, std::string name,
                std::function<bool(const RealPoint&)> member,
                std::vector<Curve> curves_into);

/**
 * Generator pair probe: every (f, c) in gen_functions x gen_curves must pass
 * smoothness_probe, and every generator curve must stay inside the
 * membership set at the sample parameters.
 */
ProbeReport saturation_check(const SpaceDescriptor& space,
                             const std::vector<double>& samples = default_samples(),
                             double tol = 1e-5);

/**
 * Probe set for "for all f" statements: the declared generators plus
 * `extra` seeded-random algebraic combinations of them (products, scalar
 * combinations, compositions with elementary functions).
 */
std::vector<RealFunction> probe_functions(const SpaceDescriptor& space,
                                          int extra, std::uint64_t seed);

} // namespace frolic
