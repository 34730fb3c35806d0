#include "frolic/lie.hpp"

#include <cmath>

namespace frolic {

namespace {

void require_at_identity(const FrolicherGroupDescriptor& g,
                         const TangentVector& v, const char* who) {
    if (!points_equal(*g.space, v.base, g.identity))
        throw BasePointMismatch(std::string(who) + " requires a vector at the identity");
}

double inf_dev(const LieVector& a, const LieVector& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

double inf_norm(const LieVector& a) {
    double worst = 0.0;
    for (double x : a) worst = std::max(worst, std::abs(x));
    return worst;
}

LieVector lin_comb(double alpha, const LieVector& a, double beta,
                   const LieVector& b) {
    LieVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = alpha * a[i] + beta * b[i];
    return out;
}

/// Identity-based vector with a curved representative
/// t -> chart^-1(t x + t^2 y); its chart coordinates are x.
TangentVector curved_tangent(const FrolicherGroupDescriptor& g,
                             const LieVector& x, const LieVector& y) {
    const PointProgram from = g.space->chart->from_coords;
    TangentVector v;
    v.space = g.space;
    v.base = g.identity;
    v.rep = Curve([from, x, y](auto u) {
        using S = decltype(u);
        Pt<S> coords;
        coords.reserve(x.size());
        for (size_t i = 0; i < x.size(); ++i)
            coords.push_back(u * S(x[i]) + u * u * S(y[i]));
        return from(coords);
    });
    return v;
}

} // namespace

TrivializedTangent trivialize(const FrolicherGroupDescriptor& g,
                              const TangentVector& v) {
    const RealPoint base = v.base;
    const RealPoint binv = g.inv(base);
    const GroupProduct mul = g.mul;
    const Curve c = v.rep;

    TangentVector body;
    body.space = v.space;
    body.base = g.mul(binv, base);
    body.rep = Curve([mul, binv, c](auto u) {
        using S = decltype(u);
        return mul(lift_point<S>(binv), c(u));
    });
    return TrivializedTangent{base, body};
}

TangentVector untrivialize(const FrolicherGroupDescriptor& g,
                           const RealPoint& base, const TangentVector& body) {
    return left_translate(g, base, body);
}

TangentVector adjoint(const FrolicherGroupDescriptor& g, const RealPoint& h,
                      const TangentVector& v) {
    require_at_identity(g, v, "adjoint");
    const RealPoint hinv = g.inv(h);
    const GroupProduct mul = g.mul;
    const Curve c = v.rep;
    TangentVector out;
    out.space = v.space;
    out.base = g.mul(g.mul(h, v.base), hinv);
    out.rep = Curve([mul, h, hinv, c](auto u) {
        using S = decltype(u);
        return mul(mul(lift_point<S>(h), c(u)), lift_point<S>(hinv));
    });
    return out;
}

TrivializedTangent semidirect_mul(const FrolicherGroupDescriptor& g,
                                  const TrivializedTangent& a,
                                  const TrivializedTangent& b) {
    const RealPoint hinv = g.inv(b.base);
    TrivializedTangent out;
    out.base = g.mul(a.base, b.base);
    out.body = tangent_add(g, adjoint(g, hinv, a.body), b.body);
    return out;
}

T2Decomposition t2_decompose(const FrolicherGroupDescriptor& g,
                             const TwoParamMap& gamma) {
    const RealPoint base = gamma(0.0, 0.0);
    const RealPoint binv = g.inv(base);
    const GroupProduct mul = g.mul;
    const PointProgram inv = g.inv;

    T2Decomposition out;
    out.p1 = base;

    out.p2.space = g.space;
    out.p2.rep = Curve([mul, binv, gamma](auto s) {
        using S = decltype(s);
        return mul(lift_point<S>(binv), gamma(s, S(0.0)));
    });
    out.p2.base = out.p2.rep(0.0);

    out.p3.space = g.space;
    out.p3.rep = Curve([mul, binv, gamma](auto t) {
        using S = decltype(t);
        return mul(lift_point<S>(binv), gamma(S(0.0), t));
    });
    out.p3.base = out.p3.rep(0.0);

    // pi_4: (s, t) -> gamma(0,t)^-1 g gamma(s,0)^-1 gamma(s,t).
    out.p4.space = g.space;
    out.p4.rep = TwoParamMap([mul, inv, base, gamma](auto s, auto t) {
        using S = decltype(s);
        const S zero(0.0);
        auto left = mul(inv(gamma(zero, t)), lift_point<S>(base));
        left = mul(left, inv(gamma(s, zero)));
        return mul(left, gamma(s, t));
    });
    return out;
}

SecondTangentVector xi(const TangentVector& v) {
    const Curve c = v.rep;
    return SecondTangentVector{
        v.space, TwoParamMap([c](auto s, auto t) { return c(s * t); })};
}

LieVector xi_inverse(const FrolicherGroupDescriptor& g,
                     const SecondTangentVector& second) {
    if (!g.space->chart) throw ChartDomainError(g.name + " has no chart");
    const Chart& chart = *g.space->chart;
    const RealPoint base = second.rep(0.0, 0.0);
    if (chart.domain && !chart.domain(base))
        throw ChartDomainError("T^2 representative leaves the chart domain");

    const JetPoint coords = chart.to_coords(second.rep(seed_s(0.0), seed_t(0.0)));
    LieVector out;
    out.reserve(coords.size());
    for (const Jet2& c : coords) out.push_back(c.dst);
    return out;
}

TwoParamMap commutator_curve(const FrolicherGroupDescriptor& g,
                             const TangentVector& v, const TangentVector& w) {
    const GroupProduct mul = g.mul;
    const PointProgram inv = g.inv;
    const Curve c = v.rep, d = w.rep;
    return TwoParamMap([mul, inv, c, d](auto s, auto t) {
        const auto cs = c(s);
        const auto dt = d(t);
        return mul(mul(mul(cs, dt), inv(cs)), inv(dt));
    });
}

LieVector bracket(const FrolicherGroupDescriptor& g, const TangentVector& v,
                  const TangentVector& w) {
    require_at_identity(g, v, "bracket");
    require_at_identity(g, w, "bracket");
    return xi_inverse(g, SecondTangentVector{g.space, commutator_curve(g, v, w)});
}

double derivation_apply(const FrolicherGroupDescriptor& g,
                        const TangentVector& v, const RealFunction& f,
                        const RealPoint& at) {
    const GroupProduct mul = g.mul;
    const Curve c = v.rep;
    const Curve translated([mul, at, c](auto u) {
        using S = decltype(u);
        return mul(lift_point<S>(at), c(u));
    });
    return deriv_at_zero(f, translated);
}

double derivation_second(const FrolicherGroupDescriptor& g,
                         const TangentVector& v, const TangentVector& w,
                         const RealFunction& f, const RealPoint& at) {
    const JetPoint lifted = lift_point<Jet2>(at);
    const JetPoint cs = v.rep(seed_s(0.0));
    const JetPoint dt = w.rep(seed_t(0.0));
    return f(g.mul(g.mul(lifted, cs), dt)).dst;
}

StructureTable structure_constants(const FrolicherGroupDescriptor& g) {
    StructureTable table;
    table.dim = g.lie_dim;
    table.c.assign(static_cast<size_t>(g.lie_dim),
                   std::vector<LieVector>(static_cast<size_t>(g.lie_dim)));
    std::vector<TangentVector> basis;
    basis.reserve(static_cast<size_t>(g.lie_dim));
    for (int i = 0; i < g.lie_dim; ++i) {
        LieVector e(static_cast<size_t>(g.lie_dim), 0.0);
        e[static_cast<size_t>(i)] = 1.0;
        basis.push_back(chart_line(g, e));
    }
    for (int i = 0; i < g.lie_dim; ++i)
        for (int j = 0; j < g.lie_dim; ++j)
            table.c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                bracket(g, basis[static_cast<size_t>(i)],
                        basis[static_cast<size_t>(j)]);
    return table;
}

Report verify_comm_identity(const FrolicherGroupDescriptor& g, int trials,
                            double tol, std::uint64_t seed) {
    Report report{"comm", g.name, trials, 0.0, true, seed};
    const auto probes = probe_functions(*g.space, 20, mix_seed(seed, 0xf00d));
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = make_rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        const TangentVector v = random_tangent(g, rng);
        const TangentVector w = random_tangent(g, rng);
        const RealFunction& f =
            probes[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(probes.size()) - 1))];
        const RealPoint at = random_element(g, rng);

        const TangentVector z = chart_line(g, bracket(g, v, w));
        const double lhs = derivation_apply(g, z, f, at);
        const double rhs = derivation_second(g, v, w, f, at) -
                           derivation_second(g, w, v, f, at);
        report.absorb(std::abs(lhs - rhs), tol);
    }
    return report;
}

Report verify_mixed_partial_identity(const FrolicherGroupDescriptor& g,
                                     int trials, double tol,
                                     std::uint64_t seed) {
    Report report{"mixed", g.name, trials, 0.0, true, seed};
    const auto probes = probe_functions(*g.space, 20, mix_seed(seed, 0xf00d));
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = make_rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        const TangentVector v = random_tangent(g, rng);
        const TangentVector w = random_tangent(g, rng);
        const RealFunction& f =
            probes[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(probes.size()) - 1))];

        const double lhs =
            mixed_partial_at_zero(f, commutator_curve(g, v, w));
        const Jet2 cd = f(g.mul(v.rep(seed_s(0.0)), w.rep(seed_t(0.0))));
        const Jet2 dc = f(g.mul(w.rep(seed_s(0.0)), v.rep(seed_t(0.0))));
        const double rhs = (cd - dc).dst;
        report.absorb(std::abs(lhs - rhs), tol);
    }
    return report;
}

Report verify_lie_axioms(const FrolicherGroupDescriptor& g, int trials,
                         double tol, std::uint64_t seed) {
    Report report{"axioms", g.name, trials, 0.0, true, seed};
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = make_rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        const TangentVector u = random_tangent(g, rng);
        const TangentVector v = random_tangent(g, rng);
        const TangentVector w = random_tangent(g, rng);
        const double alpha = uniform(rng, -2.0, 2.0);
        const double beta = uniform(rng, -2.0, 2.0);

        // Antisymmetry, including the diagonal.
        const LieVector vw = bracket(g, v, w);
        const LieVector wv = bracket(g, w, v);
        report.absorb(inf_norm(lin_comb(1.0, vw, 1.0, wv)), tol);
        report.absorb(inf_norm(bracket(g, v, v)), tol);

        // Bilinearity in the first slot; the combination enters as a vector
        // sum through the group structure.
        const TangentVector combo = tangent_add(
            g, scalar_mul(alpha, v), scalar_mul(beta, u));
        report.absorb(inf_dev(bracket(g, combo, w),
                              lin_comb(alpha, vw, beta, bracket(g, u, w))),
                      tol);

        // Jacobi identity; nested brackets re-enter through the chart line.
        const LieVector j1 = bracket(g, u, chart_line(g, vw));
        const LieVector j2 = bracket(g, v, chart_line(g, bracket(g, w, u)));
        const LieVector j3 = bracket(g, w, chart_line(g, bracket(g, u, v)));
        LieVector sum(j1.size());
        for (size_t i = 0; i < sum.size(); ++i) sum[i] = j1[i] + j2[i] + j3[i];
        report.absorb(inf_norm(sum), tol);
    }
    return report;
}

Report verify_trivialization(const FrolicherGroupDescriptor& g, int trials,
                             double tol, std::uint64_t seed) {
    Report report{"trivialization", g.name, trials, 0.0, true, seed};
    const auto probes = probe_functions(*g.space, 20, mix_seed(seed, 0xf00d));
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = make_rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        const RealPoint gp = random_element(g, rng);
        const RealPoint hp = random_element(g, rng);
        const TangentVector v = left_translate(g, gp, random_tangent(g, rng));
        const TangentVector w = left_translate(g, hp, random_tangent(g, rng));

        const TrivializedTangent lhs = trivialize(g, tg_mul(g, v, w));
        const TrivializedTangent rhs =
            semidirect_mul(g, trivialize(g, v), trivialize(g, w));

        double base_dev = 0.0;
        for (size_t i = 0; i < lhs.base.size(); ++i)
            base_dev = std::max(base_dev, std::abs(lhs.base[i] - rhs.base[i]));
        report.absorb(base_dev, tol);

        double body_dev = 0.0;
        for (const auto& f : probes)
            body_dev = std::max(
                body_dev, std::abs(pairing(lhs.body, f) - pairing(rhs.body, f)));
        report.absorb(body_dev, tol);
    }
    return report;
}

Report verify_xi_section(const FrolicherGroupDescriptor& g, int trials,
                         double tol, std::uint64_t seed) {
    Report report{"xi_section", g.name, trials, 0.0, true, seed};
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = make_rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        LieVector x(static_cast<size_t>(g.lie_dim));
        LieVector y(static_cast<size_t>(g.lie_dim));
        for (auto& c : x) c = uniform(rng, -0.5, 0.5);
        for (auto& c : y) c = uniform(rng, -0.5, 0.5);
        // Alternate between plain chart lines and curved representatives of
        // the same class.
        const TangentVector v =
            (trial % 2 == 0) ? chart_line(g, x) : curved_tangent(g, x, y);
        report.absorb(inf_dev(xi_inverse(g, xi(v)), x), tol);
    }
    return report;
}

Report pushforward_bracket_check(const FrolicherGroupDescriptor& g,
                                 const FrolicherGroupDescriptor& h,
                                 const SmoothMap& alpha, int trials, double tol,
                                 std::uint64_t seed) {
    Report report{"functorial", g.name + "->" + h.name, trials, 0.0, true, seed};

    // Sampled homomorphism gate.
    auto rng = make_rng(mix_seed(seed, 0xa1fa));
    if (!points_equal(*h.space, alpha.program(g.identity), h.identity))
        throw NotAHomomorphism("alpha does not send identity to identity");
    for (int i = 0; i < 8; ++i) {
        const RealPoint a = random_element(g, rng);
        const RealPoint b = random_element(g, rng);
        const RealPoint lhs = alpha.program(g.mul(a, b));
        const RealPoint rhs = h.mul(alpha.program(a), alpha.program(b));
        if (!points_equal(*h.space, lhs, rhs))
            throw NotAHomomorphism("alpha fails the sampled homomorphism law");
    }

    for (int trial = 0; trial < trials; ++trial) {
        auto trial_rng = make_rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        const TangentVector v = random_tangent(g, trial_rng);
        const TangentVector w = random_tangent(g, trial_rng);

        const TangentVector pushed =
            tangent_map(alpha, chart_line(g, bracket(g, v, w)));
        const LieVector lhs = chart_consistency(pushed);
        const LieVector rhs =
            bracket(h, tangent_map(alpha, v), tangent_map(alpha, w));
        report.absorb(inf_dev(lhs, rhs), tol);
    }
    return report;
}

Report rj_isomorphism_check(const FrolicherGroupDescriptor& g, int trials,
                            double tol, std::uint64_t seed) {
    if (g.space->support_functions.empty())
        throw InvalidParameter("rj suite requires an r_power group");
    Report report{"rj", g.name, trials, 0.0, true, seed};
    const int dim = g.lie_dim;

    for (int trial = 0; trial < trials; ++trial) {
        auto rng = make_rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        RealPoint a(static_cast<size_t>(dim)), b(static_cast<size_t>(dim));
        for (auto& x : a) x = uniform(rng, -1.0, 1.0);
        for (auto& x : b) x = uniform(rng, -1.0, 1.0);

        // (a) forward: a curve with componentwise program a_j t + b_j t^2
        // maps to its componentwise derivative vector, float-exactly.
        Curve curve([a, b](auto u) {
            using S = decltype(u);
            Pt<S> p;
            p.reserve(a.size());
            for (size_t j = 0; j < a.size(); ++j)
                p.push_back(S(a[j]) * u + S(b[j]) * u * u);
            return p;
        });
        const JetPoint fwd = curve(seed_s(0.0));
        double dev = 0.0;
        for (size_t j = 0; j < a.size(); ++j)
            dev = std::max(dev, std::abs(fwd[j].ds - a[j]));
        report.absorb(dev, 0.0);

        // (b) inverse: x -> [t -> t x] followed by the forward map is the
        // identity on coordinates, float-exactly.
        const TangentVector line = chart_line(g, a);
        const JetPoint round = line.rep(seed_s(0.0));
        dev = 0.0;
        for (size_t j = 0; j < a.size(); ++j)
            dev = std::max(dev, std::abs(round[j].ds - a[j]));
        report.absorb(dev, 0.0);

        // (c) kernel: componentwise derivative zero forces zero pairing
        // against every declared finite-support function.
        Curve kernel([a](auto u) {
            using S = decltype(u);
            Pt<S> p;
            p.reserve(a.size());
            for (size_t j = 0; j < a.size(); ++j)
                p.push_back(S(a[j]) * u * u + S(a[j]) * (gm::cos(u) - S(1.0)));
            return p;
        });
        dev = 0.0;
        for (const auto& fsf : g.space->support_functions) {
            const RealFunction f = fsf.lifted();
            dev = std::max(dev, std::abs(deriv_at_zero(f, kernel)));
        }
        report.absorb(dev, tol);

        // (d) smoothness of s -> T_0 f([t -> t c_j(s)]) for declared f: the
        // jet derivative in s must match a central finite difference.
        const double h = 1e-4;
        for (size_t fi = 0; fi < std::min<size_t>(g.space->support_functions.size(), 6); ++fi) {
            const RealFunction f = g.space->support_functions[fi].lifted();
            auto line_pairing = [&](double s0) {
                JetPoint p;
                p.reserve(a.size());
                const RealPoint at = curve(s0);
                for (size_t j = 0; j < a.size(); ++j)
                    p.push_back(seed_t(0.0) * Jet2(at[j]));
                return f(p).dt;
            };
            // Jet derivative of the same quantity via a mixed seed.
            JetPoint p;
            p.reserve(a.size());
            const JetPoint cs = curve(seed_s(0.0));
            for (size_t j = 0; j < a.size(); ++j) {
                Jet2 c = cs[j];
                c.dt = 0.0; // only the s-dependence enters the outer slot
                p.push_back(seed_t(0.0) * c);
            }
            const double jet = f(p).dst;
            const double fd = (line_pairing(h) - line_pairing(-h)) / (2.0 * h);
            const bool ok = std::abs(jet - fd) <= 1e-5 * std::max(1.0, std::abs(jet));
            if (!ok) report.pass = false;
        }
    }
    return report;
}

SmoothMap conjugation_map(const FrolicherGroupDescriptor& g, const RealPoint& h) {
    const RealPoint hinv = g.inv(h);
    const GroupProduct mul = g.mul;
    SmoothMap alpha;
    alpha.source = g.space;
    alpha.target = g.space;
    alpha.program = PointProgram([mul, h, hinv](const auto& p) {
        using S = scalar_of<decltype(p)>;
        return mul(mul(lift_point<S>(h), p), lift_point<S>(hinv));
    });
    return alpha;
}

SmoothMap heisenberg_center_quotient(SpacePtr heis_space, SpacePtr additive2_space) {
    SmoothMap alpha;
    alpha.source = std::move(heis_space);
    alpha.target = std::move(additive2_space);
    alpha.program = PointProgram([](const auto& p) {
        using S = scalar_of<decltype(p)>;
        return Pt<S>{p[1], p[5]};
    });
    return alpha;
}

} // namespace frolic
