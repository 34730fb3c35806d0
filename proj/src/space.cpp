#include "frolic/space.hpp"

#include "frolic/rng.hpp"

namespace frolic {

namespace {

RealFunction coordinate_fn(int i) {
    return RealFunction(
        [i](const auto& p) { return p[static_cast<size_t>(i)]; });
}

Curve coordinate_line(int i, int arity) {
    return Curve([i, arity](auto u) {
        using S = decltype(u);
        Pt<S> p(static_cast<size_t>(arity), S(0.0));
        p[static_cast<size_t>(i)] = u;
        return p;
    });
}

PointProgram identity_program() {
    return PointProgram([](const auto& p) { return p; });
}

} // namespace

SpacePtr euclidean_space(int n) {
    if (n < 1) throw InvalidParameter("euclidean arity must be >= 1");
    auto sp = std::make_shared<SpaceDescriptor>();
    sp->name = "euclidean(" + std::to_string(n) + ")";
    sp->point_arity = n;
    for (int i = 0; i < n; ++i) {
        sp->gen_functions.push_back(coordinate_fn(i));
        sp->gen_curves.push_back(coordinate_line(i, n));
    }
    sp->chart = Chart{n, identity_program(), identity_program(), nullptr};
    return sp;
}

SpacePtr circle_space() {
    auto sp = std::make_shared<SpaceDescriptor>();
    sp->name = "circle";
    sp->point_arity = 2;
    sp->membership = [](const RealPoint& p) {
        return std::abs(p[0] * p[0] + p[1] * p[1] - 1.0) < 1e-7;
    };
    sp->gen_functions.push_back(coordinate_fn(0));
    sp->gen_functions.push_back(coordinate_fn(1));
    sp->gen_curves.push_back(Curve([](auto u) {
        using S = decltype(u);
        return Pt<S>{gm::cos(u), gm::sin(u)};
    }));
    // Angle chart at basepoint (1, 0); the antipode is excluded.
    Chart chart;
    chart.dim = 1;
    chart.to_coords = PointProgram(
        [](const auto& p) { return std::decay_t<decltype(p)>{gm::atan2(p[1], p[0])}; });
    chart.from_coords = PointProgram([](const auto& x) {
        using S = scalar_of<decltype(x)>;
        return Pt<S>{gm::cos(x[0]), gm::sin(x[0])};
    });
    chart.domain = [](const RealPoint& p) { return p[0] > -0.95; };
    sp->chart = chart;
    return sp;
}

SpacePtr coordinate_cross_space() {
    auto sp = std::make_shared<SpaceDescriptor>();
    sp->name = "coordinate_cross";
    sp->point_arity = 2;
    sp->membership = [](const RealPoint& p) {
        return std::abs(p[0] * p[1]) < 1e-9;
    };
    sp->gen_functions.push_back(coordinate_fn(0));
    sp->gen_functions.push_back(coordinate_fn(1));
    sp->gen_curves.push_back(coordinate_line(0, 2));
    sp->gen_curves.push_back(coordinate_line(1, 2));
    return sp;
}

SpacePtr r_power_space(int j_size, const std::vector<std::vector<int>>& supports) {
    if (j_size < 1) throw InvalidParameter("r_power index set must be nonempty");
    auto sp = std::make_shared<SpaceDescriptor>();
    sp->name = "r_power(" + std::to_string(j_size) + ")";
    sp->point_arity = j_size;
    sp->chart = Chart{j_size, identity_program(), identity_program(), nullptr};

    std::vector<std::vector<int>> supp = supports;
    if (supp.empty()) {
        // Default declared family: every singleton, plus a few spread-out
        // five-point supports carrying nonlinear cores.
        for (int j = 0; j < j_size; ++j) supp.push_back({j});
        auto rng = make_rng(0x5eedf00du);
        const int mixed = std::min(4, j_size);
        for (int k = 0; k < mixed; ++k) {
            std::vector<int> s;
            while (static_cast<int>(s.size()) < std::min(5, j_size)) {
                int j = uniform_int(rng, 0, j_size - 1);
                bool dup = false;
                for (int seen : s) dup = dup || seen == j;
                if (!dup) s.push_back(j);
            }
            supp.push_back(s);
        }
    }

    for (const auto& s : supp) {
        for (int j : s)
            if (j < 0 || j >= j_size)
                throw InvalidParameter("support index out of range");
        FiniteSupportFunction fsf;
        fsf.support = s;
        if (s.size() == 1) {
            fsf.core = coordinate_fn(0);
        } else {
            const int m = static_cast<int>(s.size());
            fsf.core = RealFunction([m](const auto& q) {
                using S = scalar_of<decltype(q)>;
                S acc = q[0] * q[1 % m];
                acc = acc + gm::sin(q[2 % m]) * q[3 % m];
                acc = acc + q[static_cast<size_t>(m - 1)] * q[static_cast<size_t>(m - 1)];
                return acc;
            });
        }
        sp->support_functions.push_back(fsf);
        sp->gen_functions.push_back(fsf.lifted());
    }
    for (int j = 0; j < std::min(j_size, 16); ++j)
        sp->gen_curves.push_back(coordinate_line(j, j_size));
    return sp;
}

SpacePtr product(SpacePtr a, SpacePtr b) {
    auto sp = std::make_shared<SpaceDescriptor>();
    sp->name = a->name + " x " + b->name;
    sp->point_arity = a->point_arity + b->point_arity;
    sp->eq_tol = std::min(a->eq_tol, b->eq_tol);
    sp->factor_left = a;
    sp->factor_right = b;
    sp->left_arity = a->point_arity;

    const int la = a->point_arity;
    const auto ma = a->membership;
    const auto mb = b->membership;
    sp->membership = [la, ma, mb](const RealPoint& p) {
        RealPoint pa(p.begin(), p.begin() + la);
        RealPoint pb(p.begin() + la, p.end());
        if (ma && !ma(pa)) return false;
        if (mb && !mb(pb)) return false;
        return true;
    };

    for (const auto& f : a->gen_functions) {
        sp->gen_functions.push_back(RealFunction([f, la](const auto& p) {
            using S = scalar_of<decltype(p)>;
            Pt<S> pa(p.begin(), p.begin() + la);
            return f(pa);
        }));
    }
    for (const auto& f : b->gen_functions) {
        sp->gen_functions.push_back(RealFunction([f, la](const auto& p) {
            using S = scalar_of<decltype(p)>;
            Pt<S> pb(p.begin() + la, p.end());
            return f(pb);
        }));
    }
    for (const auto& ca : a->gen_curves)
        for (const auto& cb : b->gen_curves) {
            sp->gen_curves.push_back(Curve([ca, cb](auto u) {
                auto pa = ca(u);
                auto pb = cb(u);
                pa.insert(pa.end(), pb.begin(), pb.end());
                return pa;
            }));
        }

    if (a->chart && b->chart) {
        Chart chart;
        chart.dim = a->chart->dim + b->chart->dim;
        const auto ta = a->chart->to_coords;
        const auto tb = b->chart->to_coords;
        const auto fa = a->chart->from_coords;
        const auto fb = b->chart->from_coords;
        const int da = a->chart->dim;
        chart.to_coords = PointProgram([ta, tb, la](const auto& p) {
            using S = scalar_of<decltype(p)>;
            Pt<S> pa(p.begin(), p.begin() + la);
            Pt<S> pb(p.begin() + la, p.end());
            auto xa = ta(pa);
            auto xb = tb(pb);
            xa.insert(xa.end(), xb.begin(), xb.end());
            return xa;
        });
        chart.from_coords = PointProgram([fa, fb, da](const auto& x) {
            using S = scalar_of<decltype(x)>;
            Pt<S> xa(x.begin(), x.begin() + da);
            Pt<S> xb(x.begin() + da, x.end());
            auto pa = fa(xa);
            auto pb = fb(xb);
            pa.insert(pa.end(), pb.begin(), pb.end());
            return pa;
        });
        const auto doma = a->chart->domain;
        const auto domb = b->chart->domain;
        chart.domain = [doma, domb, la](const RealPoint& p) {
            RealPoint pa(p.begin(), p.begin() + la);
            RealPoint pb(p.begin() + la, p.end());
            if (doma && !doma(pa)) return false;
            if (domb && !domb(pb)) return false;
            return true;
        };
        sp->chart = chart;
    }
    return sp;
}

SpacePtr subset(SpacePtr parent, std::string name,
                std::function<bool(const RealPoint&)> member,
                std::vector<Curve> curves_into) {
    for (const auto& c : curves_into)
        for (double u : default_samples())
            if (!member(c(u)))
                throw CurveEscapesSubset("declared curve leaves the subset at u=" +
                                         std::to_string(u));
    auto sp = std::make_shared<SpaceDescriptor>();
    sp->name = std::move(name);
    sp->point_arity = parent->point_arity;
    sp->eq_tol = parent->eq_tol;
    sp->membership = std::move(member);
    sp->gen_functions = parent->gen_functions;
    sp->gen_curves = std::move(curves_into);
    return sp;
}

ProbeReport saturation_check(const SpaceDescriptor& space,
                             const std::vector<double>& samples, double tol) {
    ProbeReport report;
    for (const auto& c : space.gen_curves)
        for (double u : samples)
            if (!space.contains(c(u)))
                report.merge(false, 0.0,
                             "generator curve leaves " + space.name + " at u=" +
                                 std::to_string(u));
    for (const auto& f : space.gen_functions)
        for (const auto& c : space.gen_curves) {
            ProbeReport r = smoothness_probe(f, c, samples, tol);
            report.merge(r.pass, r.worst_abs_dev, r.detail);
        }
    return report;
}

std::vector<RealFunction> probe_functions(const SpaceDescriptor& space,
                                          int extra, std::uint64_t seed) {
    std::vector<RealFunction> probes = space.gen_functions;
    if (probes.empty()) return probes;
    auto rng = make_rng(seed);
    const int n = static_cast<int>(space.gen_functions.size());
    for (int k = 0; k < extra; ++k) {
        const RealFunction f = space.gen_functions[static_cast<size_t>(
            uniform_int(rng, 0, n - 1))];
        const RealFunction g = space.gen_functions[static_cast<size_t>(
            uniform_int(rng, 0, n - 1))];
        const double alpha = uniform(rng, -2.0, 2.0);
        const double beta = uniform(rng, -2.0, 2.0);
        switch (uniform_int(rng, 0, 4)) {
            case 0:
                probes.push_back(fn_add(fn_scale(alpha, f), fn_scale(beta, g)));
                break;
            case 1:
                probes.push_back(fn_mul(f, g));
                break;
            case 2:
                probes.push_back(RealFunction([f, alpha](const auto& p) {
                    using S = scalar_of<decltype(p)>;
                    return gm::sin(S(alpha) * f(p));
                }));
                break;
            case 3:
                probes.push_back(RealFunction([f, g, alpha](const auto& p) {
                    using S = scalar_of<decltype(p)>;
                    return gm::exp(S(alpha * 0.25) * f(p)) * g(p);
                }));
                break;
            default:
                // log and sqrt stay in domain through the 1 + f^2 guard.
                probes.push_back(RealFunction([f, g](const auto& p) {
                    using S = scalar_of<decltype(p)>;
                    const S fv = f(p);
                    return gm::log(S(1.0) + fv * fv) + gm::sqrt(S(1.0) + g(p) * g(p));
                }));
                break;
        }
    }
    return probes;
}

} // namespace frolic
