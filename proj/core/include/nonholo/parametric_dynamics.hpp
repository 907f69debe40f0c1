#pragma once

#include <functional>
#include <utility>

#include "nonholo/constraint.hpp"
#include "nonholo/types.hpp"

namespace nonholo {

/// Value of the vector field Z at a point of the constraint manifold:
/// dq = ψ(q, z) by construction, dz = the normal-form parameter accelerations.
struct ZFieldValue {
    Vec dq;
    Vec dz;
};

/// Fiber metric G_αβ = g_ij ψ^i_α ψ^j_β and its inverse G^αβ.
///
/// Symmetric positive-definite at regular states; SingularMatrix exactly at
/// irregular ones (the Gram matrix of the fiber columns degenerates there).
std::pair<Mat, Mat> fiber_metric(const SystemSpec& sys,
                                 const ParametricConstraint& pc,
                                 const ParamState& s);

/// Covariant components Z_α = ψ^i_α (L_i − g_ij ψ^j_k ψ^k) of the reduced
/// forces: the fiber projection of the free forces minus the metric product
/// with the transport part ψ^j_k ψ^k of the constrained acceleration.
/// For parametrizations whose fiber columns stay g-orthogonal to ψ^j_k ψ^k
/// (all builtin systems), this reduces to ψ^i_α L_i.
Vec z_covariant(const SystemSpec& sys, const ParametricConstraint& pc,
                const ParamState& s);

/// The first-kind dynamical system in normal form:
///     dq^i/dt = ψ^i(q, z),    dz^α/dt = G^{αβ} Z_β.
/// SingularMatrix at irregular states.
ZFieldValue z_field(const SystemSpec& sys, const ParametricConstraint& pc,
                    const ParamState& s);

/// Candidate conserved quantity F(q, z); gradients optional (finite
/// differences with the module-wide scale otherwise).
struct FirstIntegral {
    std::function<double(const Vec& q, const Vec& z)> value;
    std::function<Vec(const Vec& q, const Vec& z)> grad_q;  ///< optional
    std::function<Vec(const Vec& q, const Vec& z)> grad_z;  ///< optional
};

/// Directional derivative of F along Z:
///     ψ^i ∂F/∂q^i + Z^α ∂F/∂z^α,
/// zero (to tolerance) at s iff F is conserved there.
double first_integral_residual(const SystemSpec& sys,
                               const ParametricConstraint& pc,
                               const FirstIntegral& f, const ParamState& s);

/// Equilibrium diagnostic: returns (‖ψ(q,z)‖, ‖Z_α‖). Both near zero flags a
/// singular point of the first-kind system; for homogeneous constraints these
/// occur at z = 0, where the chart itself is irregular.
std::pair<double, double> singular_residual(const SystemSpec& sys,
                                            const ParametricConstraint& pc,
                                            const ParamState& s);

/// Mass-weighted squared deviation of the constrained acceleration from the
/// free one, as a function of the parameter accelerations:
///     G(ż) = ½ g_ij (q̈^i(ż) − q̈_f^i)(q̈^j(ż) − q̈_f^j),
/// with q̈(ż) = ψ^i_j ψ^j + ψ^i_α ż^α and g q̈_f = L. The actual ż returned
/// by z_field minimizes this quantity.
double gauss_function(const SystemSpec& sys, const ParametricConstraint& pc,
                      const ParamState& s, const Vec& zdot);

}  // namespace nonholo
