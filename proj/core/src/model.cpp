#include "nonholo/model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "nonholo/errors.hpp"
#include "nonholo/linalg.hpp"

namespace nonholo {

namespace {

Vec checked_eval(const std::function<Vec(const Vec&)>& f, const Vec& x) {
    Vec y;
    try {
        y = f(x);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw EvaluationFailure(std::string("evaluator threw: ") + e.what());
    }
    if (!y.allFinite()) {
        throw EvaluationFailure("evaluator returned non-finite values");
    }
    return y;
}

}  // namespace

double fd_default_scale() {
    return std::cbrt(std::numeric_limits<double>::epsilon());
}

Mat fd_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x,
                double scale) {
    if (!(scale > 0.0)) {
        throw InvalidParameter("fd_jacobian: scale must be positive");
    }
    const Eigen::Index nx = x.size();
    Mat jac;
    for (Eigen::Index k = 0; k < nx; ++k) {
        const double h = scale * std::max(1.0, std::abs(x[k]));
        Vec xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        const Vec fp = checked_eval(f, xp);
        const Vec fm = checked_eval(f, xm);
        if (jac.size() == 0) jac.resize(fp.size(), nx);
        jac.col(k) = (fp - fm) / (2.0 * h);
    }
    if (jac.size() == 0) jac.resize(checked_eval(f, x).size(), 0);
    return jac;
}

Mat metric_matrix(const SystemSpec& sys, const Vec& q) {
    if (q.size() != sys.n) {
        throw DimensionMismatch("metric_matrix: configuration has wrong size");
    }
    Mat g = sys.metric(q);
    if (g.rows() != sys.n || g.cols() != sys.n || !g.allFinite()) {
        throw EvaluationFailure("metric evaluator returned a bad matrix");
    }
    const double asym = (g - g.transpose()).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    if (asym > 1e-12 * scale) {
        throw EvaluationFailure("metric is not symmetric to 1e-12 relative");
    }
    return 0.5 * (g + g.transpose());
}

Mat inverse_metric(const SystemSpec& sys, const Vec& q) {
    return pivoted_inverse(metric_matrix(sys, q), "inverse_metric");
}

std::vector<Mat> metric_derivatives(const SystemSpec& sys, const Vec& q) {
    const int n = sys.n;
    std::vector<Mat> dg(static_cast<size_t>(n));
    if (sys.metric_derivative) {
        dg = sys.metric_derivative(q);
        if (static_cast<int>(dg.size()) != n) {
            throw EvaluationFailure("metric_derivative: wrong slice count");
        }
        for (const Mat& s : dg) {
            if (s.rows() != n || s.cols() != n || !s.allFinite()) {
                throw EvaluationFailure("metric_derivative: bad slice");
            }
        }
        return dg;
    }
    const double scale = fd_default_scale();
    for (int k = 0; k < n; ++k) {
        const double h = scale * std::max(1.0, std::abs(q[k]));
        Vec qp = q, qm = q;
        qp[k] += h;
        qm[k] -= h;
        dg[static_cast<size_t>(k)] =
            (metric_matrix(sys, qp) - metric_matrix(sys, qm)) / (2.0 * h);
    }
    return dg;
}

std::vector<Mat> christoffel_lower(const SystemSpec& sys, const Vec& q) {
    const int n = sys.n;
    const std::vector<Mat> dg = metric_derivatives(sys, q);
    std::vector<Mat> gamma(static_cast<size_t>(n), Mat::Zero(n, n));
    for (int k = 0; k < n; ++k) {
        Mat& slice = gamma[static_cast<size_t>(k)];
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j <= i; ++j) {
                const double v = 0.5 * (dg[static_cast<size_t>(i)](j, k) +
                                        dg[static_cast<size_t>(j)](k, i) -
                                        dg[static_cast<size_t>(k)](i, j));
                slice(i, j) = v;
                slice(j, i) = v;
            }
        }
    }
    return gamma;
}

Vec christoffel_quadratic(const std::vector<Mat>& gamma, const Vec& v) {
    Vec w(static_cast<Eigen::Index>(gamma.size()));
    for (size_t k = 0; k < gamma.size(); ++k) {
        w[static_cast<Eigen::Index>(k)] = v.dot(gamma[k] * v);
    }
    return w;
}

double kinetic_energy(const SystemSpec& sys, const VelState& s) {
    return 0.5 * s.qdot.dot(metric_matrix(sys, s.q) * s.qdot);
}

Vec free_force_term(const SystemSpec& sys, const VelState& s) {
    Vec a = sys.forces(s.q, s.qdot);
    if (a.size() != sys.n || !a.allFinite()) {
        throw EvaluationFailure("force evaluator returned a bad vector");
    }
    return a - christoffel_quadratic(christoffel_lower(sys, s.q), s.qdot);
}

void validate_system(const SystemSpec& sys, const Vec& q_sample, double tol) {
    const Mat g = metric_matrix(sys, q_sample);
    spd_factor(g, "validate_system");  // positive-definiteness
    if (sys.metric_derivative) {
        const std::vector<Mat> analytic = sys.metric_derivative(q_sample);
        SystemSpec fd_view = sys;
        fd_view.metric_derivative = nullptr;
        const std::vector<Mat> numeric = metric_derivatives(fd_view, q_sample);
        for (int k = 0; k < sys.n; ++k) {
            const Mat& a = analytic[static_cast<size_t>(k)];
            const Mat& b = numeric[static_cast<size_t>(k)];
            const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
            if ((a - b).cwiseAbs().maxCoeff() > tol * scale) {
                std::ostringstream msg;
                msg << "analytic metric derivative disagrees with finite "
                       "differences in coordinate "
                    << k;
                throw EvaluationFailure(msg.str());
            }
        }
    }
}

}  // namespace nonholo
