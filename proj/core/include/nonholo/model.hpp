#pragma once

#include <functional>
#include <vector>

#include "nonholo/types.hpp"

namespace nonholo {

/// Finite-difference step scale: cube root of machine epsilon, the usual
/// truncation/round-off balance for central O(h²) stencils.
double fd_default_scale();

/// Central-difference Jacobian of a vector-valued function.
///
/// The per-component step is h_k = scale · max(1, |x_k|). Throws
/// EvaluationFailure if f throws or returns non-finite values at a probe.
Mat fd_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x,
                double scale = fd_default_scale());

/// Metric evaluated at q, checked for symmetry and symmetrized exactly.
Mat metric_matrix(const SystemSpec& sys, const Vec& q);

/// Inverse metric g^{ij}(q); SingularMatrix if g is numerically singular.
Mat inverse_metric(const SystemSpec& sys, const Vec& q);

/// ∂g/∂q^k for every k, analytic when the system provides it, otherwise
/// central finite differences of the metric evaluator.
std::vector<Mat> metric_derivatives(const SystemSpec& sys, const Vec& q);

/// Christoffel symbols of the first kind,
///     Γ_ijk = ½ (∂_i g_jk + ∂_j g_ki − ∂_k g_ij),
/// returned as n slices indexed by the last (covariant-force) index:
/// result[k](i, j) = Γ_ijk. Each slice is symmetric in (i, j); all slices
/// vanish for a metric constant in q.
std::vector<Mat> christoffel_lower(const SystemSpec& sys, const Vec& q);

/// Quadratic contraction w_k = Γ_ijk v^i v^j over the slices above.
Vec christoffel_quadratic(const std::vector<Mat>& gamma, const Vec& v);

/// Kinetic energy K = ½ g_ij q̇^i q̇^j ≥ 0.
double kinetic_energy(const SystemSpec& sys, const VelState& s);

/// Free-motion covariant force term L_i = A_i(q, q̇) − Γ_hki q̇^h q̇^k, the
/// right-hand side of the unconstrained equations g_ij q̈^j = L_i.
Vec free_force_term(const SystemSpec& sys, const VelState& s);

/// Sanity checks on a SystemSpec at a sample configuration: metric symmetry
/// and positive-definiteness, and (when provided) agreement of the analytic
/// metric derivative with finite differences to `tol` relative.
void validate_system(const SystemSpec& sys, const Vec& q_sample,
                     double tol = 1e-5);

}  // namespace nonholo
