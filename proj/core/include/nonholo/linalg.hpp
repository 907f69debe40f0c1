#pragma once

#include <Eigen/Dense>

#include "nonholo/types.hpp"

namespace nonholo {

/// Reciprocal-condition floor below which factorizations are declared singular.
inline constexpr double kRcondFloor = 1e-12;

/// Relative singular-value threshold factor for numerical rank decisions.
inline constexpr double kRankRelTol = 1e-10;

/// SPD factorization wrapper. Throws SingularMatrix if the matrix is not
/// positive-definite to working precision.
Eigen::LLT<Mat> spd_factor(const Mat& a, const char* what);

/// Inverse of a symmetric positive-definite matrix via Cholesky.
Mat spd_inverse(const Mat& a, const char* what);

/// Dense inverse with partial pivoting; SingularMatrix below kRcondFloor.
Mat pivoted_inverse(const Mat& a, const char* what);

/// Solve a x = b with partial pivoting and a reciprocal-condition check.
Vec pivoted_solve(const Mat& a, const Vec& b, const char* what);

}  // namespace nonholo
