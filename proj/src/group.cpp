#include "frolic/group.hpp"

#include <array>
#include <cmath>

namespace frolic {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double real_det(const std::vector<double>& a, int n) {
    std::vector<double> m = a;
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[static_cast<size_t>(r) * n + col]) >
                std::abs(m[static_cast<size_t>(pivot) * n + col]))
                pivot = r;
        const double p = m[static_cast<size_t>(pivot) * n + col];
        if (p == 0.0) return 0.0;
        if (pivot != col) {
            det = -det;
            for (int c = 0; c < n; ++c)
                std::swap(m[static_cast<size_t>(pivot) * n + c],
                          m[static_cast<size_t>(col) * n + c]);
        }
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            const double f = m[static_cast<size_t>(r) * n + col] / p;
            for (int c = col; c < n; ++c)
                m[static_cast<size_t>(r) * n + c] -=
                    f * m[static_cast<size_t>(col) * n + c];
        }
    }
    return det;
}

RealFunction entry_fn(int i) {
    return RealFunction([i](const auto& p) { return p[static_cast<size_t>(i)]; });
}

// exp of the skew matrix of x through the Rodrigues coefficients
// A(q) = sin(sqrt q)/sqrt q and B(q) = (1 - cos(sqrt q))/q, both analytic in
// q = |x|^2. Below the seam the truncated series is used; its error is at
// most q^4/9! in the value slot, and for nilpotent q (chart lines seeded by
// jets) the polynomial is exact.
template <class S>
Pt<S> so3_exp(const Pt<S>& x) {
    const S q = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    S a, b;
    if (value_of(q) < 1e-6) {
        const S q2 = q * q;
        const S q3 = q2 * q;
        a = S(1.0) - q / S(6.0) + q2 / S(120.0) - q3 / S(5040.0);
        b = S(0.5) - q / S(24.0) + q2 / S(720.0) - q3 / S(40320.0);
    } else {
        const S th = gm::sqrt(q);
        a = gm::sin(th) / th;
        b = (S(1.0) - gm::cos(th)) / q;
    }
    const S z(0.0);
    const Pt<S> k{z, -x[2], x[1], x[2], z, -x[0], -x[1], x[0], z};
    const Pt<S> k2 = flat_mul(k, k, 3);
    Pt<S> r = flat_identity<S>(3);
    for (int i = 0; i < 9; ++i) r[i] = r[i] + a * k[i] + b * k2[i];
    return r;
}

// Log map: coords = G(c) * w with w the antisymmetric part (sin(theta) times
// the axis), c = (trace - 1)/2 = cos(theta) and G = theta / sin(theta)
// expanded in u = 1 - c near the identity.
template <class S>
Pt<S> so3_log(const Pt<S>& r) {
    const S w0 = (r[7] - r[5]) / S(2.0);
    const S w1 = (r[2] - r[6]) / S(2.0);
    const S w2 = (r[3] - r[1]) / S(2.0);
    const S c = (r[0] + r[4] + r[8] - S(1.0)) / S(2.0);
    const S u = S(1.0) - c;
    S g;
    if (value_of(u) < 1e-5) {
        const S u2 = u * u;
        g = S(1.0) + u / S(3.0) + S(2.0 / 15.0) * u2 + S(2.0 / 35.0) * u2 * u;
    } else {
        const S s = gm::sqrt((S(1.0) + c) * u); // sin(theta) for theta in (0, pi)
        g = gm::atan2(s, c) / s;
    }
    return Pt<S>{g * w0, g * w1, g * w2};
}

template <class S>
S wrap_angle(const S& x) {
    const double k = std::round(value_of(x) / kTwoPi);
    if (k == 0.0) return x;
    return x - S(kTwoPi * k);
}

std::shared_ptr<SpaceDescriptor> matrix_group_space(const std::string& name,
                                                    int n) {
    auto sp = std::make_shared<SpaceDescriptor>();
    sp->name = name;
    sp->point_arity = n * n;
    for (int i = 0; i < n * n; ++i) sp->gen_functions.push_back(entry_fn(i));
    return sp;
}

void add_chart_line_curves(SpaceDescriptor& sp, const Chart& chart) {
    // Scaled so the curves stay inside every builtin group over the default
    // sample range [-1, 1] (the unscaled gl and sl2 lines hit singular
    // matrices at u = -1).
    for (int k = 0; k < chart.dim; ++k) {
        const auto from = chart.from_coords;
        const int dim = chart.dim;
        sp.gen_curves.push_back(Curve([from, dim, k](auto u) {
            using S = decltype(u);
            Pt<S> x(static_cast<size_t>(dim), S(0.0));
            x[static_cast<size_t>(k)] = S(0.4) * u;
            return from(x);
        }));
    }
}

GroupPtr finish_matrix_group(std::shared_ptr<SpaceDescriptor> sp, int n,
                             Chart chart, std::string name, int lie_dim,
                             double radius,
                             std::function<bool(const RealPoint&)> guard) {
    sp->chart = chart;
    add_chart_line_curves(*sp, chart);

    auto g = std::make_shared<FrolicherGroupDescriptor>();
    g->name = std::move(name);
    g->space = sp;
    g->identity = flat_identity<double>(n);
    g->lie_dim = lie_dim;
    g->mul = GroupProduct([n](const auto& a, const auto& b) {
        return flat_mul(a, b, n);
    });
    g->inv = PointProgram([n](const auto& a) { return flat_inverse(a, n); });
    g->sample_radius = radius;
    g->sample_guard = std::move(guard);
    return g;
}

} // namespace

GroupPtr additive_group(int n) {
    auto g = std::make_shared<FrolicherGroupDescriptor>();
    g->name = "additive(" + std::to_string(n) + ")";
    g->space = euclidean_space(n);
    g->identity = RealPoint(static_cast<size_t>(n), 0.0);
    g->lie_dim = n;
    g->mul = GroupProduct([](const auto& a, const auto& b) {
        auto out = a;
        for (size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b[i];
        return out;
    });
    g->inv = PointProgram([](const auto& a) {
        auto out = a;
        for (auto& x : out) x = -x;
        return out;
    });
    g->sample_radius = 0.8;
    return g;
}

GroupPtr gl_group(int n) {
    if (n < 1 || n > 4) throw InvalidParameter("gl(n) supports 1 <= n <= 4");
    auto sp = matrix_group_space("gl(" + std::to_string(n) + ")", n);
    sp->membership = [n](const RealPoint& p) {
        return std::abs(real_det(p, n)) > 1e-9;
    };

    Chart chart;
    chart.dim = n * n;
    chart.to_coords = PointProgram([n](const auto& a) {
        using S = scalar_of<decltype(a)>;
        auto out = a;
        for (int i = 0; i < n; ++i)
            out[static_cast<size_t>(i) * n + i] =
                out[static_cast<size_t>(i) * n + i] - S(1.0);
        return out;
    });
    chart.from_coords = PointProgram([n](const auto& x) {
        using S = scalar_of<decltype(x)>;
        auto out = x;
        for (int i = 0; i < n; ++i)
            out[static_cast<size_t>(i) * n + i] =
                out[static_cast<size_t>(i) * n + i] + S(1.0);
        return out;
    });
    chart.domain = sp->membership;

    return finish_matrix_group(
        sp, n, chart, sp->name, n * n, 0.4 / n,
        [n](const RealPoint& p) { return std::abs(real_det(p, n)) > 0.1; });
}

GroupPtr so3_group() {
    auto sp = matrix_group_space("so3", 3);
    sp->membership = [](const RealPoint& p) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double dot = 0.0;
                for (int k = 0; k < 3; ++k)
                    dot += p[static_cast<size_t>(k) * 3 + i] *
                           p[static_cast<size_t>(k) * 3 + j];
                if (std::abs(dot - (i == j ? 1.0 : 0.0)) > 1e-6) return false;
            }
        return real_det(p, 3) > 0.0;
    };

    Chart chart;
    chart.dim = 3;
    chart.to_coords = PointProgram([](const auto& p) { return so3_log(p); });
    chart.from_coords = PointProgram([](const auto& x) { return so3_exp(x); });
    // Rotations close to angle pi have no stable skew coordinates.
    chart.domain = [](const RealPoint& p) {
        return (p[0] + p[4] + p[8] - 1.0) / 2.0 > -0.9;
    };

    return finish_matrix_group(sp, 3, chart, "so3", 3, 0.45, nullptr);
}

GroupPtr sl2_group() {
    auto sp = matrix_group_space("sl2", 2);
    sp->membership = [](const RealPoint& p) {
        return std::abs(p[0] * p[3] - p[1] * p[2] - 1.0) < 1e-6;
    };

    // Three free entries; the fourth is solved from det = 1.
    Chart chart;
    chart.dim = 3;
    chart.to_coords = PointProgram([](const auto& a) {
        using S = scalar_of<decltype(a)>;
        return Pt<S>{a[0] - S(1.0), a[1], a[2]};
    });
    chart.from_coords = PointProgram([](const auto& x) {
        using S = scalar_of<decltype(x)>;
        const S a = S(1.0) + x[0];
        return Pt<S>{a, x[1], x[2], (S(1.0) + x[1] * x[2]) / a};
    });
    chart.domain = [](const RealPoint& p) { return std::abs(p[0]) > 0.05; };

    return finish_matrix_group(sp, 2, chart, "sl2", 3, 0.35, nullptr);
}

GroupPtr heisenberg_group() {
    auto sp = matrix_group_space("heisenberg3", 3);
    sp->membership = [](const RealPoint& p) {
        return std::abs(p[0] - 1.0) < 1e-9 && std::abs(p[4] - 1.0) < 1e-9 &&
               std::abs(p[8] - 1.0) < 1e-9 && std::abs(p[3]) < 1e-9 &&
               std::abs(p[6]) < 1e-9 && std::abs(p[7]) < 1e-9;
    };

    // Coordinates (x, y, z) sitting at entries (0,1), (1,2), (0,2).
    Chart chart;
    chart.dim = 3;
    chart.to_coords = PointProgram([](const auto& a) {
        using S = scalar_of<decltype(a)>;
        return Pt<S>{a[1], a[5], a[2]};
    });
    chart.from_coords = PointProgram([](const auto& x) {
        using S = scalar_of<decltype(x)>;
        const S z(0.0), o(1.0);
        return Pt<S>{o, x[0], x[2], z, o, x[1], z, z, o};
    });

    return finish_matrix_group(sp, 3, chart, "heisenberg3", 3, 0.7, nullptr);
}

GroupPtr torus2_group() {
    auto sp = std::make_shared<SpaceDescriptor>();
    sp->name = "torus2";
    sp->point_arity = 2;
    sp->membership = [](const RealPoint& p) {
        return std::abs(p[0]) <= 3.15 && std::abs(p[1]) <= 3.15;
    };
    // Angle coordinates are not globally smooth on the torus; sin and cos of
    // them are.
    for (int i = 0; i < 2; ++i) {
        sp->gen_functions.push_back(RealFunction([i](const auto& p) {
            return gm::sin(p[static_cast<size_t>(i)]);
        }));
        sp->gen_functions.push_back(RealFunction([i](const auto& p) {
            return gm::cos(p[static_cast<size_t>(i)]);
        }));
    }

    Chart chart;
    chart.dim = 2;
    chart.to_coords = PointProgram([](const auto& p) { return p; });
    chart.from_coords = PointProgram([](const auto& x) {
        auto out = x;
        for (auto& a : out) a = wrap_angle(a);
        return out;
    });
    chart.domain = [](const RealPoint& p) {
        return std::abs(p[0]) < 3.0 && std::abs(p[1]) < 3.0;
    };
    sp->chart = chart;
    add_chart_line_curves(*sp, chart);

    auto g = std::make_shared<FrolicherGroupDescriptor>();
    g->name = "torus2";
    g->space = sp;
    g->identity = RealPoint{0.0, 0.0};
    g->lie_dim = 2;
    g->mul = GroupProduct([](const auto& a, const auto& b) {
        auto out = a;
        for (size_t i = 0; i < out.size(); ++i)
            out[i] = wrap_angle(out[i] + b[i]);
        return out;
    });
    g->inv = PointProgram([](const auto& a) {
        auto out = a;
        for (auto& x : out) x = wrap_angle(-x);
        return out;
    });
    g->sample_radius = 0.8;
    return g;
}

GroupPtr r_power_group(int j_size, const std::vector<std::vector<int>>& supports) {
    auto g = std::make_shared<FrolicherGroupDescriptor>();
    g->name = "r_power(" + std::to_string(j_size) + ")";
    g->space = r_power_space(j_size, supports);
    g->identity = RealPoint(static_cast<size_t>(j_size), 0.0);
    g->lie_dim = j_size;
    g->mul = GroupProduct([](const auto& a, const auto& b) {
        auto out = a;
        for (size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b[i];
        return out;
    });
    g->inv = PointProgram([](const auto& a) {
        auto out = a;
        for (auto& x : out) x = -x;
        return out;
    });
    g->sample_radius = 0.8;
    return g;
}

GroupPtr loop_group(int modes, const std::string& target) {
    if (modes < 0 || modes > 3)
        throw InvalidParameter("loop_group supports 0 <= modes <= 3");
    if (target != "so3")
        throw InvalidParameter("loop_group target must be so3");

    const int n_basis = 2 * modes + 1;
    const int dim = 3 * n_basis;
    const int quad = 8 * (modes + 1);

    // basis[b](theta_q) for b = 0 (constant), 2k-1 (cos k theta),
    // 2k (sin k theta).
    std::vector<std::vector<double>> basis(
        static_cast<size_t>(n_basis), std::vector<double>(static_cast<size_t>(quad)));
    for (int q = 0; q < quad; ++q) {
        const double theta = kTwoPi * q / quad;
        basis[0][static_cast<size_t>(q)] = 1.0;
        for (int k = 1; k <= modes; ++k) {
            basis[static_cast<size_t>(2 * k - 1)][static_cast<size_t>(q)] =
                std::cos(k * theta);
            basis[static_cast<size_t>(2 * k)][static_cast<size_t>(q)] =
                std::sin(k * theta);
        }
    }

    auto sp = std::make_shared<SpaceDescriptor>();
    sp->name = "loop(" + std::to_string(modes) + ", so3)";
    sp->point_arity = dim;
    // The Fourier re-projection makes the group laws hold only up to a
    // defect that scales with the cube of the element radius; the declared
    // point-equality tolerance absorbs it at the default sampling radius.
    sp->eq_tol = 1e-8;
    for (int i = 0; i < dim; ++i) sp->gen_functions.push_back(entry_fn(i));
    // Evaluation-functional probes: matrix entries of the loop value at two
    // quadrature angles.
    for (int q : {0, quad / 3}) {
        for (int e : {1, 5}) {
            sp->gen_functions.push_back(RealFunction([basis, n_basis, q,
                                                      e](const auto& p) {
                using S = scalar_of<decltype(p)>;
                Pt<S> x(3, S(0.0));
                for (int b = 0; b < n_basis; ++b)
                    for (int c = 0; c < 3; ++c)
                        x[static_cast<size_t>(c)] =
                            x[static_cast<size_t>(c)] +
                            S(basis[static_cast<size_t>(b)][static_cast<size_t>(q)]) *
                                p[static_cast<size_t>(3 * b + c)];
                return so3_exp(x)[static_cast<size_t>(e)];
            }));
        }
    }

    Chart chart;
    chart.dim = dim;
    chart.to_coords = PointProgram([](const auto& p) { return p; });
    chart.from_coords = PointProgram([](const auto& x) { return x; });
    sp->chart = chart;
    for (int k = 0; k < std::min(dim, 9); ++k) {
        sp->gen_curves.push_back(Curve([dim, k](auto u) {
            using S = decltype(u);
            Pt<S> p(static_cast<size_t>(dim), S(0.0));
            p[static_cast<size_t>(k)] = u;
            return p;
        }));
    }

    auto g = std::make_shared<FrolicherGroupDescriptor>();
    g->name = sp->name;
    g->space = sp;
    g->identity = RealPoint(static_cast<size_t>(dim), 0.0);
    g->lie_dim = dim;
    g->mul = GroupProduct([basis, n_basis, quad](const auto& a, const auto& b) {
        using S = scalar_of<decltype(a)>;
        // Pointwise products at the quadrature angles...
        std::vector<Pt<S>> values(static_cast<size_t>(quad));
        for (int q = 0; q < quad; ++q) {
            Pt<S> xa(3, S(0.0)), xb(3, S(0.0));
            for (int bi = 0; bi < n_basis; ++bi) {
                const double w = basis[static_cast<size_t>(bi)][static_cast<size_t>(q)];
                if (w == 0.0) continue;
                for (int c = 0; c < 3; ++c) {
                    xa[static_cast<size_t>(c)] =
                        xa[static_cast<size_t>(c)] +
                        S(w) * a[static_cast<size_t>(3 * bi + c)];
                    xb[static_cast<size_t>(c)] =
                        xb[static_cast<size_t>(c)] +
                        S(w) * b[static_cast<size_t>(3 * bi + c)];
                }
            }
            values[static_cast<size_t>(q)] =
                so3_log(flat_mul(so3_exp(xa), so3_exp(xb), 3));
        }
        // ... re-projected by discrete Fourier truncation.
        Pt<S> out(static_cast<size_t>(3 * n_basis), S(0.0));
        for (int bi = 0; bi < n_basis; ++bi) {
            const double scale = (bi == 0 ? 1.0 : 2.0) / quad;
            for (int q = 0; q < quad; ++q) {
                const double w =
                    scale * basis[static_cast<size_t>(bi)][static_cast<size_t>(q)];
                if (w == 0.0) continue;
                for (int c = 0; c < 3; ++c)
                    out[static_cast<size_t>(3 * bi + c)] =
                        out[static_cast<size_t>(3 * bi + c)] +
                        S(w) * values[static_cast<size_t>(q)][static_cast<size_t>(c)];
            }
        }
        return out;
    });
    // exp-chart coordinates negate under pointwise inversion, exactly and
    // degree-preserving, so no quadrature pass is needed.
    g->inv = PointProgram([](const auto& a) {
        auto out = a;
        for (auto& x : out) x = -x;
        return out;
    });
    g->sample_radius = 1e-3;
    return g;
}

std::vector<BuiltinInfo> builtin_group_listing() {
    return {
        {"additive", "n >= 1", "n"},
        {"gl", "1 <= n <= 4", "n^2"},
        {"so3", "", "3"},
        {"sl2", "", "3"},
        {"heisenberg3", "", "3"},
        {"torus2", "", "2"},
        {"r_power", "J_size >= 1, optional supports", "J_size"},
        {"loop", "0 <= modes <= 3, target so3", "3 (2 modes + 1)"},
    };
}

RealPoint random_element(const FrolicherGroupDescriptor& g, std::mt19937_64& rng) {
    const Chart& chart = *g.space->chart;
    for (int attempt = 0; attempt < 64; ++attempt) {
        RealPoint coords(static_cast<size_t>(g.lie_dim));
        for (auto& x : coords) x = uniform(rng, -g.sample_radius, g.sample_radius);
        RealPoint p = chart.from_coords(coords);
        if (!g.space->contains(p)) continue;
        if (g.sample_guard && !g.sample_guard(p)) continue;
        return p;
    }
    throw Error("random_element failed to draw a valid point in " + g.name);
}

TangentVector chart_line(const FrolicherGroupDescriptor& g,
                         const std::vector<double>& coords) {
    if (static_cast<int>(coords.size()) != g.lie_dim)
        throw InvalidParameter("coordinate length does not match lie_dim of " +
                               g.name);
    const PointProgram from = g.space->chart->from_coords;
    TangentVector v;
    v.space = g.space;
    v.base = g.identity;
    v.rep = Curve([from, coords](auto u) {
        using S = decltype(u);
        Pt<S> x;
        x.reserve(coords.size());
        for (double c : coords) x.push_back(u * S(c));
        return from(x);
    });
    return v;
}

TangentVector random_tangent(const FrolicherGroupDescriptor& g,
                             std::mt19937_64& rng, double scale) {
    std::vector<double> coords(static_cast<size_t>(g.lie_dim));
    for (auto& x : coords) x = uniform(rng, -scale, scale);
    return chart_line(g, coords);
}

TangentVector zero_vector(const FrolicherGroupDescriptor& g, RealPoint base) {
    TangentVector v;
    v.space = g.space;
    v.base = base;
    v.rep = Curve([base](auto u) {
        using S = decltype(u);
        (void)u;
        return lift_point<S>(base);
    });
    return v;
}

TangentVector tangent_add(const FrolicherGroupDescriptor& g,
                          const TangentVector& v, const TangentVector& w) {
    if (!points_equal(*g.space, v.base, w.base))
        throw BasePointMismatch("tangent_add at different base points");
    const RealPoint ginv = g.inv(v.base);
    const GroupProduct mul = g.mul;
    const Curve c = v.rep, d = w.rep;
    TangentVector out;
    out.space = v.space;
    out.base = v.base;
    out.rep = Curve([mul, ginv, c, d](auto u) {
        using S = decltype(u);
        return mul(mul(c(u), lift_point<S>(ginv)), d(u));
    });
    return out;
}

TangentVector tangent_neg(const FrolicherGroupDescriptor& g,
                          const TangentVector& v) {
    const RealPoint base = v.base;
    const GroupProduct mul = g.mul;
    const PointProgram inv = g.inv;
    const Curve c = v.rep;
    TangentVector out;
    out.space = v.space;
    out.base = base;
    out.rep = Curve([mul, inv, base, c](auto u) {
        using S = decltype(u);
        const auto lifted = lift_point<S>(base);
        return mul(mul(lifted, inv(c(u))), lifted);
    });
    return out;
}

TangentVector tg_mul(const FrolicherGroupDescriptor& g, const TangentVector& v,
                     const TangentVector& w) {
    const GroupProduct mul = g.mul;
    const Curve c = v.rep, d = w.rep;
    TangentVector out;
    out.space = v.space;
    out.base = g.mul(v.base, w.base);
    out.rep = Curve([mul, c, d](auto u) { return mul(c(u), d(u)); });
    return out;
}

TangentVector left_translate(const FrolicherGroupDescriptor& g,
                             const RealPoint& point, const TangentVector& v) {
    const GroupProduct mul = g.mul;
    const Curve c = v.rep;
    TangentVector out;
    out.space = v.space;
    out.base = g.mul(point, v.base);
    out.rep = Curve([mul, point, c](auto u) {
        using S = decltype(u);
        return mul(lift_point<S>(point), c(u));
    });
    return out;
}

ProbeReport group_axioms_check(const FrolicherGroupDescriptor& g, int trials,
                               std::uint64_t seed) {
    ProbeReport report;
    auto rng = make_rng(seed);
    const auto dev_points = [](const RealPoint& a, const RealPoint& b) {
        double worst = 0.0;
        for (size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, std::abs(a[i] - b[i]));
        return worst;
    };
    for (int trial = 0; trial < trials; ++trial) {
        const RealPoint a = random_element(g, rng);
        const RealPoint b = random_element(g, rng);
        const RealPoint c = random_element(g, rng);

        double dev = dev_points(g.mul(g.identity, a), a);
        report.merge(dev <= g.space->eq_tol, dev, "left identity law");
        dev = dev_points(g.mul(a, g.identity), a);
        report.merge(dev <= g.space->eq_tol, dev, "right identity law");
        dev = dev_points(g.mul(a, g.inv(a)), g.identity);
        report.merge(dev <= g.space->eq_tol, dev, "inverse law");
        dev = dev_points(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        report.merge(dev <= g.space->eq_tol, dev, "associativity");

        // Value part of a jet evaluation must match the plain-real path.
        JetPoint ja = lift_point<Jet2>(a);
        JetPoint jb = lift_point<Jet2>(b);
        for (size_t i = 0; i < ja.size(); ++i) {
            ja[i].ds = uniform(rng, -1.0, 1.0);
            jb[i].dt = uniform(rng, -1.0, 1.0);
        }
        const JetPoint jm = g.mul(ja, jb);
        const RealPoint rm = g.mul(a, b);
        double worst = 0.0;
        for (size_t i = 0; i < rm.size(); ++i)
            worst = std::max(worst, std::abs(jm[i].val - rm[i]));
        report.merge(worst == 0.0, worst, "jet value part vs real evaluation");
    }
    return report;
}

} // namespace frolic
