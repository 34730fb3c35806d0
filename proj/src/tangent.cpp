#include "frolic/tangent.hpp"

namespace frolic {

bool tangent_equal(const TangentVector& v, const TangentVector& w,
                   const std::vector<RealFunction>& probes, double tol) {
    if (!points_equal(*v.space, v.base, w.base))
        throw BasePointMismatch("tangent_equal on vectors with different bases");
    for (const auto& f : probes)
        if (std::abs(pairing(v, f) - pairing(w, f)) > tol) return false;
    return true;
}

bool tangent_equal(const TangentVector& v, const TangentVector& w, double tol,
                   std::uint64_t probe_seed) {
    return tangent_equal(v, w, probe_functions(*v.space, 20, probe_seed), tol);
}

TangentVector scalar_mul(double s, const TangentVector& v) {
    TangentVector out;
    out.space = v.space;
    out.base = v.base;
    const Curve c = v.rep;
    out.rep = reparam(c, 0.0, s);
    return out;
}

TangentVector tangent_map(const SmoothMap& phi, const TangentVector& v) {
    TangentVector out;
    out.space = phi.target;
    out.rep = compose(phi.program, v.rep);
    out.base = phi.program(v.base);
    return out;
}

SecondTangentVector second_tangent_map(const SmoothMap& phi,
                                       const SecondTangentVector& xi) {
    return SecondTangentVector{phi.target, compose(phi.program, xi.rep)};
}

std::pair<TangentVector, TangentVector> product_split(const TangentVector& v) {
    if (!v.space->is_product())
        throw NotAProductSpace("product_split on " + v.space->name);
    const int la = v.space->left_arity;
    const Curve c = v.rep;

    TangentVector left, right;
    left.space = v.space->factor_left;
    left.rep = Curve([c, la](auto u) {
        auto p = c(u);
        p.resize(static_cast<size_t>(la));
        return p;
    });
    left.base = RealPoint(v.base.begin(), v.base.begin() + la);

    right.space = v.space->factor_right;
    right.rep = Curve([c, la](auto u) {
        auto p = c(u);
        using S = scalar_of<decltype(p)>;
        return Pt<S>(p.begin() + la, p.end());
    });
    right.base = RealPoint(v.base.begin() + la, v.base.end());
    return {left, right};
}

TangentVector product_join(const TangentVector& x, const TangentVector& y) {
    TangentVector out;
    out.space = product(x.space, y.space);
    const Curve cx = x.rep;
    const Curve cy = y.rep;
    out.rep = Curve([cx, cy](auto u) {
        auto p = cx(u);
        auto q = cy(u);
        p.insert(p.end(), q.begin(), q.end());
        return p;
    });
    out.base = x.base;
    out.base.insert(out.base.end(), y.base.begin(), y.base.end());
    return out;
}

ProbeReport tx_curve_check(const TwoParamMap& g, const SpaceDescriptor& space,
                           const std::vector<double>& s_samples, double tol) {
    ProbeReport report;
    const double h = 1e-4;

    // i) t -> g(s0, t) is probe-smooth for each sampled s0.
    for (double s0 : s_samples) {
        Curve fiber([g, s0](auto t) {
            using S = decltype(t);
            return g(S(s0), t);
        });
        for (const auto& f : space.gen_functions) {
            ProbeReport r = smoothness_probe(f, fiber, s_samples, tol);
            if (!r.pass)
                report.merge(false, r.worst_abs_dev,
                             "condition i at s=" + std::to_string(s0));
            else
                report.merge(true, r.worst_abs_dev, "");
        }
    }

    // ii) s -> g(s, 0) is probe-smooth.
    Curve base([g](auto s) {
        using S = decltype(s);
        return g(s, S(0.0));
    });
    for (const auto& f : space.gen_functions) {
        ProbeReport r = smoothness_probe(f, base, s_samples, tol);
        if (!r.pass)
            report.merge(false, r.worst_abs_dev, "condition ii");
        else
            report.merge(true, r.worst_abs_dev, "");
    }

    // iii) s -> d(f o g)/dt (s, 0) is smooth: compare its jet derivative
    // (the dst coefficient after seeding both parameters) with a central
    // finite difference of the t-jet evaluation.
    for (const auto& f : space.gen_functions) {
        auto fiber_deriv = [&](double s0) {
            return f(g(Jet2(s0), seed_t(0.0))).dt;
        };
        for (double s0 : s_samples) {
            try {
                const double jet = f(g(seed_s(s0), seed_t(0.0))).dst;
                const double fd =
                    (fiber_deriv(s0 + h) - fiber_deriv(s0 - h)) / (2.0 * h);
                const double dev = std::abs(jet - fd);
                const bool ok = dev <= tol * std::max(1.0, std::abs(jet));
                report.merge(ok, dev,
                             "condition iii at s=" + std::to_string(s0));
            } catch (const Error& e) {
                report.merge(false, 0.0,
                             std::string("condition iii domain error: ") +
                                 e.what());
            }
        }
    }
    return report;
}

std::vector<double> chart_consistency(const TangentVector& v) {
    if (!v.space->chart)
        throw ChartDomainError("space " + v.space->name + " has no chart");
    const Chart& chart = *v.space->chart;
    if (chart.domain && !chart.domain(v.base))
        throw ChartDomainError("base point outside chart domain");
    const JetPoint image = chart.to_coords(v.rep(seed_s(0.0)));
    std::vector<double> out;
    out.reserve(image.size());
    for (const Jet2& c : image) out.push_back(c.ds);
    return out;
}

} // namespace frolic
