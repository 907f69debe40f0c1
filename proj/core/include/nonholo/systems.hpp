#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nonholo/constraint.hpp"
#include "nonholo/types.hpp"

namespace nonholo {

/// Closed-form reference expressions for a builtin system, used as regression
/// fixtures against the computed pipeline. Entries absent for a system are
/// default-constructed (empty) std::functions.
struct Fixtures {
    std::function<Mat(const Vec& q, const Vec& z)> fiber_metric;   ///< G_αβ
    std::function<Vec(const Vec& q, const Vec& z)> z_covariant;    ///< Z_α
    std::function<Vec(const Vec& q, const Vec& z)> z_rhs;          ///< dz/dt
    std::function<Mat(const Vec& q, const Vec& qd)> gram_up;       ///< G^{ab}
    std::function<Mat(const Vec& q, const Vec& qd)> projector;     ///< π^{ij}
    std::function<Vec(const Vec& q, const Vec& qd)> multipliers;   ///< λ_a
    std::function<Vec(const Vec& q, const Vec& qd)> reactive_contra;  ///< R^i
    std::function<Vec(const Vec& q, const Vec& qd)> d_rhs;         ///< D^i
    std::function<Vec(const Vec& q, const Vec& qd)> transport;     ///< q̇^j∂_jC^a C_a^i
    std::function<double(const Vec& q, const Vec& z)> fiber_det;   ///< det G_αβ
};

/// Per-coordinate sampling box for random regular states.
struct SampleBox {
    Vec q_lo, q_hi;
    Vec z_lo, z_hi;
};

/// A worked mechanical system bundling both constraint representations, the
/// documented force field (inside spec), closed-form fixtures, and sampling
/// metadata. Immutable after construction.
struct BuiltinSystem {
    std::string name;
    SystemSpec spec;
    ParametricConstraint parametric;
    ImplicitConstraint implicit;
    ParamState default_state;
    Fixtures fixtures;
    SampleBox box;
    /// Fast predicate used during sampling to stay clear of irregular states.
    std::function<bool(const ParamState&)> sample_hint;
    std::vector<std::string> coordinate_names;
    std::string description;
    std::string force_description;
};

/// Rod sliding on a plane: coordinates (x, y, θ), metric diag(m, m, I),
/// constraint ẋ sinθ − ẏ cosθ = 0, parameters z = (longitudinal speed, θ̇).
/// Documented forces: none.
BuiltinSystem make_skate(double m, double inertia);

/// Disc rolling upright on a plane: coordinates (x, y, θ, ψ) with rolling
/// angle θ and axis heading ψ, metric diag(m, m, A, B), rolling constraints
/// ẋ = R cosψ θ̇, ẏ = R sinψ θ̇, parameters z = (θ̇, ψ̇).
/// Documented forces: constant axial torque A₃ = torque.
BuiltinSystem make_vertical_disc(double m, double axial_inertia,
                                 double diametral_inertia, double radius,
                                 double torque = 1.0);

/// Two discs of mass m on a common frictionless axle of fixed length a,
/// rolling on the plane: reduced coordinates (x, y, θ₁, θ₂, ψ), a
/// ψ-dependent metric with off-diagonal x–ψ and y–ψ coupling, parameters
/// z = (θ̇₁, θ̇₂). Documented forces: constant torque A₃ = torque on θ₁.
BuiltinSystem make_coaxial_discs(double m, double axial_inertia,
                                 double diametral_inertia, double radius,
                                 double axle_length, double torque = 1.0);

/// Two free points in the plane constrained to keep parallel velocities
/// (ẋ₁ẏ₂ − ẋ₂ẏ₁ = 0, quadratic and non-linear): coordinates
/// (x₁, y₁, x₂, y₂), parameters z = (ρ, σ, θ) with q̇ = (ρcosθ, ρsinθ,
/// σcosθ, σsinθ). Documented forces: inclined-plane gravity
/// A = (m₁ g, 0, m₂ g, 0); the chart and the implicit form both degenerate
/// at zero velocities.
BuiltinSystem make_parallel_points(double m1, double m2, double incline_g);

/// Names accepted by make_builtin, in listing order.
const std::vector<std::string>& builtin_names();

/// Factory by name with key=value parameter overrides (unknown names or keys
/// raise InvalidParameter).
BuiltinSystem make_builtin(const std::string& name,
                           const std::map<std::string, double>& params = {});

/// Uniform sample in the system's box, resampled until both representations
/// are regular (throws Error after too many attempts).
ParamState sample_regular_state(const BuiltinSystem& bs, std::mt19937& rng);

}  // namespace nonholo
