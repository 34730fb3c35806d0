#pragma once

#include "frolic/group.hpp"
#include "frolic/report.hpp"

namespace frolic {

/// Chart coordinates of an identity-based tangent vector; the bracket output.
using LieVector = std::vector<double>;

/// Image of the trivialization TG ~ G x g: base point plus identity-based
/// body, Phi([c]) = (c(0), c(0)^-1 [c]).
struct TrivializedTangent {
    RealPoint base;
    TangentVector body;
};

/// Components of the trivialization of T^2 G.
struct T2Decomposition {
    RealPoint p1;
    TangentVector p2;
    TangentVector p3;
    SecondTangentVector p4;
};

/// Basis bracket table: c[i][j] holds the coordinates of [e_i, e_j].
struct StructureTable {
    int dim = 0;
    std::vector<std::vector<LieVector>> c;
};

TrivializedTangent trivialize(const FrolicherGroupDescriptor& g,
                              const TangentVector& v);

/// Inverse of trivialize: (base, w) -> base * w by left translation.
TangentVector untrivialize(const FrolicherGroupDescriptor& g,
                           const RealPoint& base, const TangentVector& body);

/// Ad(h) v = [s -> h c(s) h^-1] for v at the identity.
TangentVector adjoint(const FrolicherGroupDescriptor& g, const RealPoint& h,
                      const TangentVector& v);

/// Semidirect product law (g, v)(h, w) = (gh, Ad(h^-1) v + w).
TrivializedTangent semidirect_mul(const FrolicherGroupDescriptor& g,
                                  const TrivializedTangent& a,
                                  const TrivializedTangent& b);

/// Trivialization components of the element of T^2 G represented by gamma.
T2Decomposition t2_decompose(const FrolicherGroupDescriptor& g,
                             const TwoParamMap& gamma);

/// Xi(v): the line through v, represented by gamma(s, t) = c(st).
SecondTangentVector xi(const TangentVector& v);

/// Chart mixed partials of a T^2-representative: the coordinates of
/// Xi^-1(xi) whenever xi lies in the image of Xi.
LieVector xi_inverse(const FrolicherGroupDescriptor& g,
                     const SecondTangentVector& xi);

/// Commutator-curve bracket: gamma(s,t) = c(s) d(t) c(s)^-1 d(t)^-1,
/// [v, w] = Xi^-1([gamma]).
LieVector bracket(const FrolicherGroupDescriptor& g, const TangentVector& v,
                  const TangentVector& w);

/// The commutator curve itself, for decomposition checks.
TwoParamMap commutator_curve(const FrolicherGroupDescriptor& g,
                             const TangentVector& v, const TangentVector& w);

/// D_v f(g) = (f o lambda_g o c)'(0).
double derivation_apply(const FrolicherGroupDescriptor& g,
                        const TangentVector& v, const RealFunction& f,
                        const RealPoint& at);

/// D_v(D_w f)(g) = d^2/ds dt f(g c(s) d(t)) at (0, 0).
double derivation_second(const FrolicherGroupDescriptor& g,
                         const TangentVector& v, const TangentVector& w,
                         const RealFunction& f, const RealPoint& at);

/// Brackets of all chart-basis-line pairs.
StructureTable structure_constants(const FrolicherGroupDescriptor& g);

// Verification suites. Every report carries the worst absolute deviation
// found over the seeded trials.

/// D_[v,w] = [D_v, D_w] at sampled elements, the two sides through disjoint
/// jet pipelines.
Report verify_comm_identity(const FrolicherGroupDescriptor& g, int trials,
                            double tol, std::uint64_t seed);

/// d^2/ds dt of f o gamma against f(c(s)d(t)) - f(d(s)c(t)) at (0,0).
Report verify_mixed_partial_identity(const FrolicherGroupDescriptor& g,
                                     int trials, double tol,
                                     std::uint64_t seed);

/// Antisymmetry, bilinearity and the Jacobi identity in chart coordinates;
/// nested brackets re-enter through the chart line.
Report verify_lie_axioms(const FrolicherGroupDescriptor& g, int trials,
                         double tol, std::uint64_t seed);

/// trivialize(tg_mul(v, w)) against semidirect_mul of the trivializations.
Report verify_trivialization(const FrolicherGroupDescriptor& g, int trials,
                             double tol, std::uint64_t seed);

/// Xi section identity: xi_inverse(xi(v)) = chart coordinates of v.
Report verify_xi_section(const FrolicherGroupDescriptor& g, int trials,
                         double tol, std::uint64_t seed);

/// Chart coords of T alpha [v, w] against [T alpha v, T alpha w]; alpha must
/// pass a sampled homomorphism check first.
Report pushforward_bracket_check(const FrolicherGroupDescriptor& g,
                                 const FrolicherGroupDescriptor& h,
                                 const SmoothMap& alpha, int trials, double tol,
                                 std::uint64_t seed);

/// Forward/inverse/kernel/smoothness checks of T_0 R^J ~ R^J.
Report rj_isomorphism_check(const FrolicherGroupDescriptor& g, int trials,
                            double tol, std::uint64_t seed);

/// The inner automorphism p -> h p h^-1 as a smooth map G -> G.
SmoothMap conjugation_map(const FrolicherGroupDescriptor& g, const RealPoint& h);

/// The quotient heisenberg3 -> additive(2) that forgets the center.
SmoothMap heisenberg_center_quotient(SpacePtr heis_space, SpacePtr additive2_space);

} // namespace frolic
