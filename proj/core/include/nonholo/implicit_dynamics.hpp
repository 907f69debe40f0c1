#pragma once

#include <utility>

#include "nonholo/constraint.hpp"
#include "nonholo/types.hpp"

namespace nonholo {

/// Value of the vector field D on velocity phase space: dq = q̇ exactly,
/// dqdot = the explicit accelerations.
struct DFieldValue {
    Vec dq;
    Vec dqdot;
};

/// Multipliers and reactive force at a state, in both index positions.
/// Internally consistent: r_covariant = λ_a C^a_i = g_ij r_contravariant^j,
/// power = R_i q̇^i (zero on the constraint for ideal constraints).
struct ReactionReport {
    Vec lambda;
    Vec r_contravariant;
    Vec r_covariant;
    double power = 0.0;
};

/// Gram matrix of the constraint gradients, G^{ab} = g^{ij} C^a_i C^b_j, and
/// its inverse G_ab. Symmetric positive-definite at regular states;
/// SingularMatrix exactly at irregular ones.
std::pair<Mat, Mat> constraint_gram(const SystemSpec& sys,
                                    const ImplicitConstraint& ic,
                                    const VelState& s);

/// Lagrange multipliers: the unique solution of G^{ab} λ_b = Λ^a with
///     Λ^a = C^a_i (Γ^i_hk q̇^h q̇^k − A^i) − q̇^i ∂_i C^a.
/// Solved by SPD factorization; G_ab is never formed here.
Vec multipliers(const SystemSpec& sys, const ImplicitConstraint& ic,
                const VelState& s);

/// Reactive force report: λ, R^i = λ_a g^{ij} C^a_j, R_i = λ_a C^a_i, and the
/// reactive power R_i q̇^i.
ReactionReport reactive_force(const SystemSpec& sys,
                              const ImplicitConstraint& ic, const VelState& s);

/// Contravariant projector π^{ij} = G_ab C^{ai} C^{bj} onto the span of the
/// constraint gradients. Symmetric; π^{ij} C^a_j = g^{ij} C^a_j, and the
/// mixed form P = π g is idempotent with trace r.
Mat projector(const SystemSpec& sys, const ImplicitConstraint& ic,
              const VelState& s);

/// The second-kind dynamical system:
///     dq^i/dt = q̇^i,
///     dq̇^i/dt = (g^{ij} − π^{ij})(A_j − Γ_hkj q̇^h q̇^k) − q̇^j ∂_jC^a C_a^i.
///
/// The formula is defined on the whole velocity phase space and annihilates
/// the directional derivative of every C^a wherever the Gram matrix is
/// regular, but only its restriction to C = 0 has physical meaning; no
/// projection toward C is applied here (drift control belongs to the
/// integration layer).
DFieldValue d_field(const SystemSpec& sys, const ImplicitConstraint& ic,
                    const VelState& s);

}  // namespace nonholo
