#include "nonholo/linalg.hpp"

#include <string>

#include "nonholo/errors.hpp"

namespace nonholo {

Eigen::LLT<Mat> spd_factor(const Mat& a, const char* what) {
    Eigen::LLT<Mat> llt(a);
    if (llt.info() != Eigen::Success || !(llt.rcond() > kRcondFloor)) {
        throw SingularMatrix(std::string(what) +
                             ": matrix is not positive-definite to working "
                             "precision");
    }
    return llt;
}

Mat spd_inverse(const Mat& a, const char* what) {
    auto llt = spd_factor(a, what);
    return llt.solve(Mat::Identity(a.rows(), a.cols()));
}

Mat pivoted_inverse(const Mat& a, const char* what) {
    Eigen::PartialPivLU<Mat> lu(a);
    if (!(lu.rcond() > kRcondFloor)) {
        throw SingularMatrix(std::string(what) +
                             ": reciprocal condition below 1e-12");
    }
    return lu.inverse();
}

Vec pivoted_solve(const Mat& a, const Vec& b, const char* what) {
    Eigen::PartialPivLU<Mat> lu(a);
    if (!(lu.rcond() > kRcondFloor)) {
        throw SingularMatrix(std::string(what) +
                             ": reciprocal condition below 1e-12");
    }
    return lu.solve(b);
}

}  // namespace nonholo
