#pragma once

#include <functional>
#include <utility>

#include "nonholo/types.hpp"

namespace nonholo {

/// (q, z) ↦ ψ(q, z), the velocity field of the parametric representation.
using PsiFn = std::function<Vec(const Vec& q, const Vec& z)>;
using PsiJacFn = std::function<Mat(const Vec& q, const Vec& z)>;

/// (q, q̇) ↦ C(q, q̇), the residual of the implicit representation.
using ConstraintFn = std::function<Vec(const Vec& q, const Vec& qdot)>;
using ConstraintJacFn = std::function<Mat(const Vec& q, const Vec& qdot)>;

/// Kinematical constraint given parametrically as q̇ = ψ(q, z) with m < n
/// parameters. (q, z) serve as local coordinates on the constraint manifold.
///
/// Analytic Jacobians are optional; finite differences are used when absent.
/// Regularity at a state means rank ∂ψ/∂z = m there. Only the pointwise rank
/// condition is checkable at runtime; that the constraint set fibers onto the
/// configuration manifold globally is the caller's responsibility.
struct ParametricConstraint {
    int n = 0;
    int m = 0;
    PsiFn psi;
    PsiJacFn psi_dz;  ///< optional analytic ∂ψ^i/∂z^α (n×m)
    PsiJacFn psi_dq;  ///< optional analytic ∂ψ^i/∂q^j (n×n)
    bool linear_in_z = false;
};

/// Kinematical constraint given implicitly as C^a(q, q̇) = 0, a = 1..r,
/// with r = n − m independent equations at regular states.
struct ImplicitConstraint {
    int n = 0;
    int r = 0;
    ConstraintFn c;
    ConstraintJacFn c_dqdot;  ///< optional analytic ∂C^a/∂q̇^i (r×n)
    ConstraintJacFn c_dq;     ///< optional analytic ∂C^a/∂q^i (r×n)
    bool linear_in_qdot = false;
};

/// Outcome of a numerical rank (regularity) test.
struct RankReport {
    std::pair<int, int> matrix_shape;
    int numerical_rank = 0;
    double smallest_retained_singular_value = 0.0;
    bool regular = false;
};

/// ∂ψ/∂z, analytic when available, finite differences otherwise.
Mat psi_dz_eval(const ParametricConstraint& pc, const Vec& q, const Vec& z);
/// ∂ψ/∂q, analytic when available, finite differences otherwise.
Mat psi_dq_eval(const ParametricConstraint& pc, const Vec& q, const Vec& z);
/// ∂C/∂q̇, analytic when available, finite differences otherwise.
Mat c_dqdot_eval(const ImplicitConstraint& ic, const Vec& q, const Vec& qdot);
/// ∂C/∂q, analytic when available, finite differences otherwise.
Mat c_dq_eval(const ImplicitConstraint& ic, const Vec& q, const Vec& qdot);

/// Numerical rank report: singular values below
/// σ_max · max(rows, cols) · 1e-10 count as zero.
RankReport rank_report(const Mat& m, int required_rank);

/// Regularity of the parametric chart at (q, z): rank ∂ψ/∂z = m.
RankReport check_regular_parametric(const ParametricConstraint& pc,
                                    const ConfState& q, const Vec& z);

/// Regularity of the implicit representation at (q, q̇): rank ∂C/∂q̇ = r.
RankReport check_regular_implicit(const ImplicitConstraint& ic,
                                  const VelState& s);

/// Residuals of the three identities linking the two representations of one
/// and the same constraint submanifold:
///     C(q, ψ(q,z)) = 0,   C^a_i ψ^i_α = 0,   ∂_i C^a + C^a_j ψ^j_i = 0.
struct CompatibilityResiduals {
    Vec on_manifold;    ///< r-vector C(q, ψ(q,z))
    Mat fiber_tangency; ///< r×m matrix C^a_i ψ^i_α
    Mat chain_rule;     ///< r×n matrix ∂_i C^a + C^a_j ψ^j_i
};

CompatibilityResiduals compatibility_residuals(const ParametricConstraint& pc,
                                               const ImplicitConstraint& ic,
                                               const ConfState& q, const Vec& z);

/// Parametrization of a constraint linear in the velocities.
///
/// Writes C = M(q) q̇ − b(q) and solves for r of the velocities by
/// column-pivoted elimination on M(q_probe). The remaining m velocities
/// become the parameters z; the pivot-column choice is frozen at the probe
/// and reused globally. If the frozen pivot block loses rank away from the
/// probe, evaluating the result raises RankDeficient rather than silently
/// re-pivoting (a chart switch would change the meaning of z mid-trajectory).
ParametricConstraint parametrize_linear(const ImplicitConstraint& ic,
                                        const ConfState& q_probe);

}  // namespace nonholo
