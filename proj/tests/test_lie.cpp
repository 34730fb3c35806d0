#include <doctest.h>

#include "frolic/lie.hpp"
#include "oracle_matrix.hpp"

using namespace frolic;

namespace {

std::vector<double> random_coords(std::mt19937_64& rng, int dim, double r = 0.6) {
    std::vector<double> x(static_cast<size_t>(dim));
    for (auto& c : x) c = uniform(rng, -r, r);
    return x;
}

} // namespace

TEST_CASE("trivialize splits base from identity-based body") {
    const auto g = gl_group(2);
    auto rng = make_rng(2);

    // A vector already at the identity trivializes to itself.
    const TangentVector v = random_tangent(*g, rng);
    const TrivializedTangent tv = trivialize(*g, v);
    CHECK(points_equal(*g->space, tv.base, g->identity));
    CHECK(tangent_equal(tv.body, v, 1e-12));

    // Round trip through untrivialize on translated vectors.
    for (int i = 0; i < 10; ++i) {
        const RealPoint base = random_element(*g, rng);
        const TangentVector w = left_translate(*g, base, random_tangent(*g, rng));
        const TrivializedTangent tw = trivialize(*g, w);
        CHECK(points_equal(*g->space, tw.base, base));
        CHECK(tangent_equal(untrivialize(*g, tw.base, tw.body), w, 1e-10));
    }

    // On an additive group the body coordinates ignore the base.
    const auto add = additive_group(3);
    auto rng2 = make_rng(3);
    const auto coords = random_coords(rng2, 3);
    const TangentVector av =
        left_translate(*add, RealPoint{5, -1, 2}, chart_line(*add, coords));
    const auto body = chart_consistency(trivialize(*add, av).body);
    for (int k = 0; k < 3; ++k)
        CHECK(body[static_cast<size_t>(k)] ==
              doctest::Approx(coords[static_cast<size_t>(k)]).epsilon(1e-13));
}

TEST_CASE("adjoint conjugates the representative") {
    const auto g = gl_group(2);
    auto rng = make_rng(5);
    const TangentVector v = random_tangent(*g, rng);

    CHECK(tangent_equal(adjoint(*g, g->identity, v), v, 1e-12));

    // additive groups are abelian: Ad is the identity.
    const auto add = additive_group(2);
    auto rng2 = make_rng(7);
    const TangentVector av = random_tangent(*add, rng2);
    CHECK(tangent_equal(adjoint(*add, RealPoint{3, -4}, av), av, 1e-12));

    // gl(2): chart coordinates become h A h^-1.
    for (int i = 0; i < 10; ++i) {
        const auto a = random_coords(rng, 4);
        const RealPoint h = random_element(*g, rng);
        const auto got = chart_consistency(adjoint(*g, h, chart_line(*g, a)));
        const auto hinv = g->inv(h);
        const auto want = oracle::mat_mul(oracle::mat_mul(h, a, 2), hinv, 2);
        for (int k = 0; k < 4; ++k)
            CHECK(got[static_cast<size_t>(k)] ==
                  doctest::Approx(want[static_cast<size_t>(k)]).epsilon(1e-10));
    }
}

TEST_CASE("semidirect product law") {
    const auto g = gl_group(2);
    auto rng = make_rng(11);

    // Zero bodies multiply to the zero body at the product base.
    const RealPoint a = random_element(*g, rng);
    const RealPoint b = random_element(*g, rng);
    const TrivializedTangent za{a, zero_vector(*g, g->identity)};
    const TrivializedTangent zb{b, zero_vector(*g, g->identity)};
    const TrivializedTangent prod = semidirect_mul(*g, za, zb);
    CHECK(points_equal(*g->space, prod.base, g->mul(a, b)));
    for (const auto& f : probe_functions(*g->space, 10, 1))
        CHECK(std::abs(pairing(prod.body, f)) < 1e-12);

    // On an additive group the law collapses to (g + h, v + w).
    const auto add = additive_group(2);
    auto rng2 = make_rng(13);
    const auto cv = random_coords(rng2, 2);
    const auto cw = random_coords(rng2, 2);
    const TrivializedTangent sa{RealPoint{1, 2}, chart_line(*add, cv)};
    const TrivializedTangent sb{RealPoint{-3, 5}, chart_line(*add, cw)};
    const TrivializedTangent sum = semidirect_mul(*add, sa, sb);
    CHECK(sum.base == RealPoint{-2, 7});
    const auto body = chart_consistency(sum.body);
    CHECK(body[0] == doctest::Approx(cv[0] + cw[0]).epsilon(1e-13));
    CHECK(body[1] == doctest::Approx(cv[1] + cw[1]).epsilon(1e-13));
}

TEST_CASE("trivialization is a group homomorphism") {
    for (const GroupPtr& g :
         {gl_group(2), so3_group(), sl2_group(), heisenberg_group(),
          torus2_group(), additive_group(3)}) {
        const Report r = verify_trivialization(*g, 25, 1e-9, 777);
        INFO(g->name, " dev ", r.worst_abs_dev);
        CHECK(r.pass);
    }
}

TEST_CASE("t2_decompose of a commutator curve hits the corollary") {
    const auto g = so3_group();
    auto rng = make_rng(17);
    for (int i = 0; i < 10; ++i) {
        const TangentVector v = random_tangent(*g, rng);
        const TangentVector w = random_tangent(*g, rng);
        const TwoParamMap gamma = commutator_curve(*g, v, w);
        const T2Decomposition dec = t2_decompose(*g, gamma);

        // p1 = e exactly: every factor evaluates to the identity matrix.
        CHECK(dec.p1 == g->identity);

        // p2 and p3 pair to zero against all probes.
        for (const auto& f : probe_functions(*g->space, 20, 19)) {
            CHECK(std::abs(pairing(dec.p2, f)) < 1e-10);
            CHECK(std::abs(pairing(dec.p3, f)) < 1e-10);
        }

        // p4 recovers the bracket of the original pair.
        const LieVector via_p4 = xi_inverse(*g, dec.p4);
        const LieVector direct = bracket(*g, v, w);
        for (size_t k = 0; k < direct.size(); ++k)
            CHECK(via_p4[k] == doctest::Approx(direct[k]).epsilon(1e-10));
    }
}

TEST_CASE("t2_decompose of degenerate two-parameter maps") {
    const auto g = gl_group(2);
    auto rng = make_rng(23);
    const TangentVector v = random_tangent(*g, rng);
    const Curve c = v.rep;

    // gamma constant in t: p3 is zero and p4 is the constant identity.
    const TwoParamMap only_s([c](auto s, auto t) {
        (void)t;
        return c(s);
    });
    const T2Decomposition dec = t2_decompose(*g, only_s);
    const auto probes = probe_functions(*g->space, 20, 29);
    for (const auto& f : probes) CHECK(std::abs(pairing(dec.p3, f)) < 1e-12);
    const JetPoint p4val = dec.p4.rep(seed_s(0.0), seed_t(0.0));
    for (size_t k = 0; k < p4val.size(); ++k) {
        CHECK(std::abs(p4val[k].val - g->identity[k]) < 1e-12);
        CHECK(std::abs(p4val[k].dst) < 1e-12);
    }

    // gamma(s, t) = c(st): p2 and p3 vanish, p4 matches gamma's class.
    const TwoParamMap diag([c](auto s, auto t) { return c(s * t); });
    const T2Decomposition ddec = t2_decompose(*g, diag);
    for (const auto& f : probes) {
        CHECK(std::abs(pairing(ddec.p2, f)) < 1e-12);
        CHECK(std::abs(pairing(ddec.p3, f)) < 1e-12);
    }
    const LieVector via_p4 = xi_inverse(*g, ddec.p4);
    const LieVector via_gamma = xi_inverse(*g, SecondTangentVector{g->space, diag});
    for (size_t k = 0; k < via_p4.size(); ++k)
        CHECK(via_p4[k] == doctest::Approx(via_gamma[k]).epsilon(1e-12));
}

TEST_CASE("xi_inverse is a section of xi") {
    for (const GroupPtr& g :
         {gl_group(2), so3_group(), sl2_group(), heisenberg_group(),
          torus2_group(), additive_group(3)}) {
        const Report r = verify_xi_section(*g, 30, 1e-10, 555);
        INFO(g->name, " dev ", r.worst_abs_dev);
        CHECK(r.pass);
    }

    // A constant representative maps to the zero vector.
    const auto g = so3_group();
    const SecondTangentVector constant{
        g->space, TwoParamMap([&](auto s, auto t) {
            using S = decltype(s);
            (void)s;
            (void)t;
            return lift_point<S>(flat_identity<double>(3));
        })};
    for (double c : xi_inverse(*g, constant)) CHECK(c == 0.0);

    // gamma(s,t) = exp(st A) in so3 recovers the skew coordinates of A.
    auto rng = make_rng(31);
    const auto a = random_coords(rng, 3);
    const TangentVector line = chart_line(*g, a);
    const LieVector coords = xi_inverse(*g, xi(line));
    for (int k = 0; k < 3; ++k)
        CHECK(coords[static_cast<size_t>(k)] ==
              doctest::Approx(a[static_cast<size_t>(k)]).epsilon(1e-12));

    // xi commutes with scalar reparametrization: xi(alpha v) is the class
    // of c(alpha s t), whose coordinates are alpha times those of xi(v).
    const double alpha = -1.75;
    const LieVector scaled = xi_inverse(*g, xi(scalar_mul(alpha, line)));
    for (int k = 0; k < 3; ++k)
        CHECK(scaled[static_cast<size_t>(k)] ==
              doctest::Approx(alpha * a[static_cast<size_t>(k)]).epsilon(1e-12));
}

TEST_CASE("bracket coordinates match the plain matrix commutator oracle") {
    struct Case {
        GroupPtr group;
        std::string kind;
        int n;
        int dim;
    };
    const Case cases[] = {
        {gl_group(2), "gl", 2, 4},
        {sl2_group(), "sl2", 2, 3},
        {so3_group(), "so3", 3, 3},
        {heisenberg_group(), "heisenberg3", 3, 3},
    };
    for (const auto& c : cases) {
        auto rng = make_rng(0xbead);
        for (int i = 0; i < 30; ++i) {
            const auto x = random_coords(rng, c.dim);
            const auto y = random_coords(rng, c.dim);
            const LieVector got =
                bracket(*c.group, chart_line(*c.group, x), chart_line(*c.group, y));
            const auto want = oracle::bracket_coords(c.kind, x, y, c.n);
            for (size_t k = 0; k < want.size(); ++k) {
                INFO(c.kind);
                CHECK(std::abs(got[k] - want[k]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("gl(3) and gl(4) brackets also match the oracle") {
    for (int n : {3, 4}) {
        const auto g = gl_group(n);
        auto rng = make_rng(0x61 + static_cast<std::uint64_t>(n));
        for (int i = 0; i < 10; ++i) {
            const auto x = random_coords(rng, n * n, 0.4);
            const auto y = random_coords(rng, n * n, 0.4);
            const LieVector got =
                bracket(*g, chart_line(*g, x), chart_line(*g, y));
            const auto want = oracle::commutator(x, y, n);
            for (size_t k = 0; k < want.size(); ++k) {
                INFO("gl(", n, ")");
                CHECK(std::abs(got[k] - want[k]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("abelian groups have identically zero brackets") {
    for (const GroupPtr& g :
         {additive_group(1), additive_group(3), torus2_group(), r_power_group(16)}) {
        auto rng = make_rng(0xace);
        for (int i = 0; i < 10; ++i) {
            const LieVector b = bracket(*g, random_tangent(*g, rng),
                                        random_tangent(*g, rng));
            for (double c : b) {
                INFO(g->name);
                CHECK(std::abs(c) <= 1e-12);
            }
        }
    }
}

TEST_CASE("bracket requires identity-based vectors") {
    const auto g = gl_group(2);
    auto rng = make_rng(0xf);
    const TangentVector v = random_tangent(*g, rng);
    const TangentVector off =
        left_translate(*g, random_element(*g, rng), random_tangent(*g, rng));
    CHECK_THROWS_AS(bracket(*g, off, v), BasePointMismatch);
}

TEST_CASE("derivations act by translated differentiation") {
    const auto add = additive_group(2);

    // f = x1^2 differentiates to 2 g1 in the e1 direction.
    const RealFunction f_sq([](const auto& p) { return p[0] * p[0]; });
    const TangentVector e1 = chart_line(*add, {1.0, 0.0});
    const RealPoint at{1.7, -0.4};
    CHECK(derivation_apply(*add, e1, f_sq, at) ==
          doctest::Approx(2.0 * 1.7).epsilon(1e-13));

    // Constants are annihilated.
    CHECK(derivation_apply(*add, e1, fn_const(4.2), at) == 0.0);

    // At the identity, chart coordinates come back.
    const auto g = so3_group();
    auto rng = make_rng(0x51);
    const auto coords = random_coords(rng, 3);
    const TangentVector v = chart_line(*g, coords);
    const Chart& chart = *g->space->chart;
    for (int k = 0; k < 3; ++k) {
        const auto to = chart.to_coords;
        const RealFunction chart_k([to, k](const auto& p) {
            return to(p)[static_cast<size_t>(k)];
        });
        CHECK(derivation_apply(*g, v, chart_k, g->identity) ==
              doctest::Approx(coords[static_cast<size_t>(k)]).epsilon(1e-12));
    }
}

TEST_CASE("second derivations via translated products") {
    const auto add = additive_group(2);
    const RealFunction f_prod([](const auto& p) { return p[0] * p[1]; });
    const TangentVector e1 = chart_line(*add, {1.0, 0.0});
    const TangentVector e2 = chart_line(*add, {0.0, 1.0});
    CHECK(derivation_second(*add, e1, e2, f_prod, add->identity) == 1.0);

    // Affine functions have vanishing second derivations.
    const RealFunction f_lin([](const auto& p) { return p[0] + p[1] * 3.0; });
    auto rng = make_rng(0x52);
    for (int i = 0; i < 5; ++i) {
        const TangentVector v = random_tangent(*add, rng);
        const TangentVector w = random_tangent(*add, rng);
        CHECK(derivation_second(*add, v, w, f_lin, add->identity) == 0.0);
    }

    // At e, the sigma/tau slot roles can be swapped (the jet ring computes a
    // symmetric mixed partial) and an outer finite difference over the inner
    // jet derivative confirms the value independently.
    const auto g = gl_group(2);
    auto rng2 = make_rng(0x53);
    const auto probes = probe_functions(*g->space, 10, 3);
    for (int i = 0; i < 5; ++i) {
        const TangentVector v = random_tangent(*g, rng2);
        const TangentVector w = random_tangent(*g, rng2);
        const RealFunction& f = probes[static_cast<size_t>(
            uniform_int(rng2, 0, static_cast<int>(probes.size()) - 1))];
        const double direct = derivation_second(*g, v, w, f, g->identity);

        const JetPoint swapped =
            g->mul(g->mul(lift_point<Jet2>(g->identity), v.rep(seed_t(0.0))),
                   w.rep(seed_s(0.0)));
        CHECK(std::abs(direct - f(swapped).dst) <= 1e-10);

        const double h = 1e-4;
        auto inner = [&](double s0) {
            const JetPoint cs = v.rep(Jet2(s0));
            return f(g->mul(cs, w.rep(seed_t(0.0)))).dt;
        };
        const double fd = (inner(h) - inner(-h)) / (2.0 * h);
        CHECK(std::abs(direct - fd) <= 1e-6 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("comm and mixed-partial identities hold on exact builtins") {
    for (const GroupPtr& g :
         {additive_group(3), gl_group(2), sl2_group(), so3_group(),
          heisenberg_group(), torus2_group()}) {
        const Report comm = verify_comm_identity(*g, 25, 1e-8, 4242);
        INFO(g->name, " comm dev ", comm.worst_abs_dev);
        CHECK(comm.pass);
        const Report mixed = verify_mixed_partial_identity(*g, 25, 1e-9, 4242);
        INFO(g->name, " mixed dev ", mixed.worst_abs_dev);
        CHECK(mixed.pass);
    }
}

TEST_CASE("lie axioms hold on matrix groups and degenerate abelians") {
    for (const GroupPtr& g : {gl_group(2), sl2_group(), so3_group(),
                              heisenberg_group()}) {
        const Report r = verify_lie_axioms(*g, 20, 1e-8, 31337);
        INFO(g->name, " dev ", r.worst_abs_dev);
        CHECK(r.pass);
    }
    const Report abelian = verify_lie_axioms(*additive_group(4), 10, 1e-12, 1);
    CHECK(abelian.pass);
    CHECK(abelian.worst_abs_dev == 0.0);
}

TEST_CASE("structure constants of the standard examples") {
    // so3: the epsilon tensor.
    const StructureTable so3 = structure_constants(*so3_group());
    const double want_so3[3][3][3] = {
        {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
        {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
        {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                CHECK(std::abs(so3.c[i][j][k] - want_so3[i][j][k]) <= 1e-10);

    // heisenberg3: [e_x, e_y] = e_z and nothing else.
    const StructureTable heis = structure_constants(*heisenberg_group());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const double want =
                    (i == 0 && j == 1 && k == 2) ? 1.0
                    : (i == 1 && j == 0 && k == 2) ? -1.0 : 0.0;
                CHECK(std::abs(heis.c[i][j][k] - want) <= 1e-10);
            }

    // torus2: all zero.
    const StructureTable torus = structure_constants(*torus2_group());
    for (const auto& row : torus.c)
        for (const auto& entry : row)
            for (double c : entry) CHECK(std::abs(c) <= 1e-12);

    // sl2 in the (h, e, f) chart basis: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    const StructureTable sl2 = structure_constants(*sl2_group());
    CHECK(sl2.c[0][1][1] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(sl2.c[0][2][2] == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(sl2.c[1][2][0] == doctest::Approx(1.0).epsilon(1e-10));
    auto rngcheck = make_rng(0x77);
    for (int i = 0; i < 3; ++i) {
        const auto x = random_coords(rngcheck, 3);
        const auto y = random_coords(rngcheck, 3);
        const auto got = bracket(*sl2_group(), chart_line(*sl2_group(), x),
                                 chart_line(*sl2_group(), y));
        const auto want = oracle::bracket_coords("sl2", x, y, 2);
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(got[static_cast<size_t>(k)] -
                           want[static_cast<size_t>(k)]) <= 1e-10);
    }
}

TEST_CASE("pushforwards respect the bracket") {
    // Identity map: trivially equal.
    const auto g = so3_group();
    const SmoothMap ident{g->space, g->space,
                          PointProgram([](const auto& p) { return p; })};
    CHECK(pushforward_bracket_check(*g, *g, ident, 10, 1e-12, 5).pass);

    // Conjugation automorphisms on gl(2) and so3.
    for (const GroupPtr& h : {gl_group(2), so3_group()}) {
        auto rng = make_rng(0x99);
        const SmoothMap conj = conjugation_map(*h, random_element(*h, rng));
        const Report r = pushforward_bracket_check(*h, *h, conj, 20, 1e-9, 6);
        INFO(h->name, " dev ", r.worst_abs_dev);
        CHECK(r.pass);
    }

    // heisenberg3 -> additive(2): both sides land on zero.
    const auto heis = heisenberg_group();
    const auto add2 = additive_group(2);
    const SmoothMap quot = heisenberg_center_quotient(heis->space, add2->space);
    const Report r = pushforward_bracket_check(*heis, *add2, quot, 20, 1e-12, 7);
    CHECK(r.pass);

    // A non-homomorphism is rejected.
    const auto add = additive_group(2);
    const SmoothMap shift{add->space, add->space,
                          PointProgram([](const auto& p) {
                              using S = scalar_of<decltype(p)>;
                              auto out = p;
                              out[0] = out[0] + S(1.0);
                              return out;
                          })};
    CHECK_THROWS_AS(pushforward_bracket_check(*add, *add, shift, 5, 1e-9, 8),
                    NotAHomomorphism);
}

TEST_CASE("conjugation pushforward matches the Ad oracle") {
    const auto g = gl_group(2);
    auto rng = make_rng(0xaa);
    const RealPoint h = random_element(*g, rng);
    const SmoothMap conj = conjugation_map(*g, h);
    const auto x = random_coords(rng, 4);
    const auto y = random_coords(rng, 4);

    const TangentVector pushed =
        tangent_map(conj, chart_line(*g, bracket(*g, chart_line(*g, x),
                                                 chart_line(*g, y))));
    const auto got = chart_consistency(pushed);

    const auto hinv = g->inv(h);
    const auto comm = oracle::commutator(x, y, 2);
    const auto want = oracle::mat_mul(oracle::mat_mul(h, comm, 2), hinv, 2);
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(got[static_cast<size_t>(k)] -
                       want[static_cast<size_t>(k)]) <= 1e-9);
}

TEST_CASE("the r_power tangent space is its own coordinate space") {
    const auto g = r_power_group(60);
    const Report r = rj_isomorphism_check(*g, 25, 1e-10, 909);
    CHECK(r.pass);
    CHECK(r.worst_abs_dev == 0.0); // forward and inverse legs are float-exact

    CHECK_THROWS_AS(rj_isomorphism_check(*additive_group(3), 5, 1e-10, 1),
                    InvalidParameter);
}

TEST_CASE("loop group: identities that only touch jets at e hold exactly") {
    const auto g = loop_group(2);
    const Report mixed = verify_mixed_partial_identity(*g, 15, 1e-9, 2025);
    INFO("mixed dev ", mixed.worst_abs_dev);
    CHECK(mixed.pass);
    const Report xi_r = verify_xi_section(*g, 15, 1e-10, 2025);
    CHECK(xi_r.pass);

    // The truncated product is only approximately associative, so the
    // finite-element identities carry the documented defect scale instead
    // of float noise: ~ radius^2 (about 1e-6 at the default radius 1e-3)
    // for the trivialization law.
    const Report triv = verify_trivialization(*g, 10, 1e-5, 2025);
    INFO("triv dev ", triv.worst_abs_dev);
    CHECK(triv.pass);
    CHECK(triv.worst_abs_dev > 1e-9); // the defect is real, not noise
}
