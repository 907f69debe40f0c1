#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nonholo/constraint.hpp"
#include "nonholo/types.hpp"

namespace nonholo {

enum class Method { parametric, implicit };

/// Fixed-step integration settings.
struct IntegrationConfig {
    double step = 1e-3;
    double t_end = 1.0;
    int record_every = 10;
    double drift_abort_threshold = 1e-6;
    bool project = false;  ///< post-step velocity projection (implicit method)
};

/// Time-stamped states with per-step diagnostics. For the parametric method
/// a state is [q; z] and reactive_power stays empty; for the implicit method
/// a state is [q; q̇].
struct Trajectory {
    Method method = Method::parametric;
    int n = 0;    ///< configuration dimension
    int aux = 0;  ///< auxiliary dimension (m or n)
    std::string system_name;
    std::vector<double> times;
    std::vector<Vec> states;
    std::vector<double> constraint_residual;  ///< max_a |C^a|, when available
    std::vector<double> kinetic;
    std::vector<double> reactive_power;  ///< implicit method only

    /// Chart map from a recorded state to (q, q̇); set by the simulate
    /// wrappers (lifts through ψ for parametric trajectories).
    std::function<VelState(const Vec&)> to_vel;
};

/// One classic fourth-order Runge–Kutta update; local error O(h⁵).
Vec rk4_step(const std::function<Vec(const Vec&)>& field, const Vec& s,
             double h);

/// Per-state diagnostics hook for the generic driver.
struct StepDiagnostics {
    double constraint_residual = 0.0;
    double kinetic = 0.0;
    double reactive_power = 0.0;
};
using Monitor = std::function<StepDiagnostics(double t, const Vec& s)>;

/// Generic fixed-step driver: runs round(t_end/step) RK4 steps, records every
/// record_every steps (plus the final state), and aborts with DriftExceeded
/// when the monitored constraint residual exceeds the configured threshold.
Trajectory simulate(const std::function<Vec(const Vec&)>& field, const Vec& s0,
                    const IntegrationConfig& cfg, const Monitor& monitor,
                    bool check_drift_each_step = false);

/// Integrate the first-kind field from (q₀, z₀). The optional implicit twin
/// is used for the recorded constraint-residual diagnostic.
Trajectory simulate_parametric(const SystemSpec& sys,
                               const ParametricConstraint& pc,
                               const ImplicitConstraint* ic,
                               const ParamState& s0,
                               const IntegrationConfig& cfg);

/// Integrate the second-kind field from (q₀, q̇₀). The initial state must be
/// regular and on the constraint (residual within the abort threshold);
/// the residual is checked every step. With cfg.project set, velocities are
/// re-projected onto C after each step (minimal correction in the g metric).
Trajectory simulate_implicit(const SystemSpec& sys,
                             const ImplicitConstraint& ic, const VelState& s0,
                             const IntegrationConfig& cfg);

/// Lift of a parametric point to velocity phase space: (q, ψ(q, z)).
VelState lift(const ParametricConstraint& pc, const ParamState& s);

/// Constraint-residual extremes over the recorded states.
struct DriftReport {
    double max_residual = 0.0;
    double residual_at_end = 0.0;
};
DriftReport drift_report(const Trajectory& traj, const ImplicitConstraint& ic);

/// CSV serialization: header `t,q1..qn,<aux...>,Cres,K,Rpower`, 17 significant
/// digits, Rpower left empty for parametric trajectories.
void write_csv(const Trajectory& traj, std::ostream& out);
void write_csv_file(const Trajectory& traj, const std::string& path);

}  // namespace nonholo
