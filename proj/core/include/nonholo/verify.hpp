#pragma once

#include <random>
#include <string>
#include <vector>

#include "nonholo/integrate.hpp"
#include "nonholo/systems.hpp"
#include "nonholo/types.hpp"

namespace nonholo {

/// Outcome of one structural check. passed ⇔ max_residual ≤ tolerance.
struct VerificationReport {
    std::string check;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    int samples = 0;
};

/// One-line JSON object {check, max_residual, tolerance, passed, samples}.
std::string to_json(const VerificationReport& report);

VerificationReport make_report(const std::string& check, double max_residual,
                               double tolerance, int samples);

// Tolerances of the structural checks, fixed here once for the whole suite.
inline constexpr double kTolIdeality = 1e-9;
inline constexpr double kTolPower = 1e-9;
inline constexpr double kTolTangency = 1e-8;
inline constexpr double kTolProjector = 1e-10;
inline constexpr double kTolGauss = 1e-8;
inline constexpr double kTolNewton = 1e-9;
inline constexpr double kTolCompatibility = 1e-8;
inline constexpr double kTolCross = 1e-6;
inline constexpr double kTolEnergy = 1e-5;
inline constexpr double kTolFixture = 1e-9;
inline constexpr double kTolDrift = 1e-8;

/// Reactive force projected onto the fiber directions, R_i ψ^i_α, evaluated
/// with the reactive force of the lifted state. Near zero certifies that the
/// reaction lies in the span of the constraint gradients (ideal constraint).
Vec ideality_residual(const SystemSpec& sys, const ParametricConstraint& pc,
                      const ImplicitConstraint& ic, const ParamState& s);

/// Residual of the reduced equations of motion at the ż produced by z_field:
///     G_αβ ż^β + Γ_ijk ψ^i ψ^j ψ^k_α + g_ij ψ^i_k ψ^k ψ^j_α − A_α,
/// reassembled term by term. Near zero certifies stationarity of the
/// mass-weighted acceleration deviation (see gauss_function).
Vec gauss_residual(const SystemSpec& sys, const ParametricConstraint& pc,
                   const ParamState& s);

/// Minimality margin of the Gauss function at ż against `count` random
/// perturbations of norm `delta`: min over samples of G(ż+δ) − G(ż).
/// Non-negative when ż is the minimizer.
double gauss_minimality_margin(const SystemSpec& sys,
                               const ParametricConstraint& pc,
                               const ParamState& s, std::mt19937& rng,
                               int count = 8, double delta = 1e-2);

/// Integrates both fields from the same physical initial state and reports
/// the max over time and coordinates of |q_Z − q_D|. Aborts (DriftExceeded,
/// singular states) surface as a failed report with infinite residual.
VerificationReport cross_compare(const SystemSpec& sys,
                                 const ParametricConstraint& pc,
                                 const ImplicitConstraint& ic,
                                 const ParamState& s0,
                                 const IntegrationConfig& cfg,
                                 double tolerance = kTolCross);

/// Energy balance along a recorded trajectory: max over interior samples of
/// |ΔK/Δt − A_i q̇^i| with central differences. Since ideal reactions do no
/// work, this must vanish to the discretization tolerance.
VerificationReport energy_balance(const Trajectory& traj,
                                  const SystemSpec& sys,
                                  double tolerance = kTolEnergy);

/// The full structural suite for one builtin system: ideality, reactive
/// power, tangency, projector algebra, reduced-equation residual and Gauss
/// minimality, Newton balance, representation compatibility, closed-form
/// fixtures, cross-method agreement, drift, and energy balance.
std::vector<VerificationReport> run_system_suite(const BuiltinSystem& bs,
                                                 unsigned seed,
                                                 int samples = 100);

}  // namespace nonholo
