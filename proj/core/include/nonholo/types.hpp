#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace nonholo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// q ↦ g(q), the n×n kinetic-energy metric (symmetric positive-definite).
using MetricFn = std::function<Mat(const Vec& q)>;

/// (q, q̇) ↦ A(q, q̇), covariant active forces. Velocity dependence is allowed.
using ForceFn = std::function<Vec(const Vec& q, const Vec& qdot)>;

/// q ↦ { ∂g/∂q^k } as a list of n matrices, one per coordinate.
using MetricDerivFn = std::function<std::vector<Mat>(const Vec& q)>;

/// Mechanical system: configuration dimension, metric and active forces.
///
/// All evaluators are pure functions of their arguments; a SystemSpec is
/// immutable after construction and safe to share across threads. The caller
/// is responsible for using one consistent unit system.
struct SystemSpec {
    int n = 0;
    MetricFn metric;
    ForceFn forces;
    MetricDerivFn metric_derivative;  ///< optional; finite differences otherwise
    std::string name;
};

/// A point of the configuration manifold.
struct ConfState {
    Vec q;
};

/// A kinematical state (q, q̇) on the velocity phase space.
struct VelState {
    Vec q;
    Vec qdot;
};

/// A point (q, z) of the constraint manifold in the parametric chart.
struct ParamState {
    Vec q;
    Vec z;
};

}  // namespace nonholo
