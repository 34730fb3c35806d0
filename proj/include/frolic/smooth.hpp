#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "frolic/program.hpp"

namespace frolic {

/// (f o c)'(0): the ds coefficient of f at the s-seeded evaluation of c.
inline double deriv_at_zero(const RealFunction& f, const Curve& c) {
    return f(c(seed_s(0.0))).ds;
}

/// d^2 (f o g) / ds dt at (0,0): the dst coefficient after seeding both
/// parameters.
inline double mixed_partial_at_zero(const RealFunction& f, const TwoParamMap& g) {
    return f(g(seed_s(0.0), seed_t(0.0))).dst;
}

/// Outcome of a sampled smoothness or curve-into-TX check.
struct ProbeReport {
    bool pass = true;
    double worst_abs_dev = 0.0;
    std::string detail; ///< empty when everything passed

    void merge(bool ok, double dev, const std::string& what) {
        if (dev > worst_abs_dev) worst_abs_dev = dev;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

namespace detail {

inline bool within(double got, double want, double tol, double* dev) {
    const double d = std::abs(got - want);
    *dev = d;
    return d <= tol * std::max(1.0, std::abs(got));
}

} // namespace detail

/**
 * Sampled check that f o c behaves like a twice-differentiable real map:
 * at each sample point the jet first and second derivatives must agree with
 * central finite differences of the plain-real evaluation. Domain failures
 * at a sample are recorded in the report, not thrown.
 */
inline ProbeReport smoothness_probe(const RealFunction& f, const Curve& c,
                                    const std::vector<double>& samples,
                                    double tol, double h = 1e-4) {
    ProbeReport report;
    for (double u0 : samples) {
        try {
            // Shift so all derivative extraction happens at 0.
            const Curve shifted = reparam(c, u0, 1.0);
            const double d1 = f(shifted(seed_s(0.0))).ds;
            const double d2 = f(shifted(seed_s(0.0) + seed_t(0.0))).dst;

            const double fp = f(c(u0 + h)), fm = f(c(u0 - h)), f0 = f(c(u0));
            const double fd1 = (fp - fm) / (2.0 * h);
            const double fd2 = (fp - 2.0 * f0 + fm) / (h * h);

            double dev = 0.0;
            bool ok = detail::within(d1, fd1, tol, &dev);
            report.merge(ok, dev, "first derivative mismatch at u0=" +
                                      std::to_string(u0));
            ok = detail::within(d2, fd2, tol, &dev);
            report.merge(ok, dev, "second derivative mismatch at u0=" +
                                      std::to_string(u0));
        } catch (const Error& e) {
            report.merge(false, 0.0,
                         "domain error at u0=" + std::to_string(u0) + ": " +
                             e.what());
        }
    }
    return report;
}

} // namespace frolic
