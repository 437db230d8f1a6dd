#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace galosc {

/// Pure Galilean boost/rotation parameters (translations are not part of the
/// finite matrix representation).
struct BoostParameters {
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
};

inline void validate_rotation(const Eigen::Matrix3d& R, double tol = 1e-12) {
    if ((R.transpose() * R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("R is not orthogonal");
    if (std::abs(R.determinant() - 1.0) > tol)
        throw std::invalid_argument("R is not a proper rotation");
}

/// SU(2) image D^{1/2}(R) of a proper rotation, on the branch with
/// nonnegative trace. Uses the largest-pivot quaternion extraction.
inline Eigen::Matrix2cd su2_from_rotation(const Eigen::Matrix3d& R) {
    validate_rotation(R);
    double t = R.trace();
    double q0, q1, q2, q3;
    if (t > 0.0) {
        double s = std::sqrt(t + 1.0) * 2.0;
        q0 = 0.25 * s;
        q1 = (R(2, 1) - R(1, 2)) / s;
        q2 = (R(0, 2) - R(2, 0)) / s;
        q3 = (R(1, 0) - R(0, 1)) / s;
    } else if (R(0, 0) > R(1, 1) && R(0, 0) > R(2, 2)) {
        double s = std::sqrt(1.0 + R(0, 0) - R(1, 1) - R(2, 2)) * 2.0;
        q0 = (R(2, 1) - R(1, 2)) / s;
        q1 = 0.25 * s;
        q2 = (R(0, 1) + R(1, 0)) / s;
        q3 = (R(0, 2) + R(2, 0)) / s;
    } else if (R(1, 1) > R(2, 2)) {
        double s = std::sqrt(1.0 + R(1, 1) - R(0, 0) - R(2, 2)) * 2.0;
        q0 = (R(0, 2) - R(2, 0)) / s;
        q1 = (R(0, 1) + R(1, 0)) / s;
        q2 = 0.25 * s;
        q3 = (R(1, 2) + R(2, 1)) / s;
    } else {
        double s = std::sqrt(1.0 + R(2, 2) - R(0, 0) - R(1, 1)) * 2.0;
        q0 = (R(1, 0) - R(0, 1)) / s;
        q1 = (R(0, 2) + R(2, 0)) / s;
        q2 = (R(1, 2) + R(2, 1)) / s;
        q3 = 0.25 * s;
    }
    if (q0 < 0.0) {
        q0 = -q0; q1 = -q1; q2 = -q2; q3 = -q3;
    }
    using namespace std::complex_literals;
    Eigen::Matrix2cd U;
    // U = q0 - i (q1 s1 + q2 s2 + q3 s3)
    U << q0 - 1i * q3, -q2 - 1i * q1,
         q2 - 1i * q1, q0 + 1i * q3;
    return U;
}

/// Block lower-triangular spinor transformation Delta^{1/2}(v, R): D^{1/2}(R)
/// on the diagonal blocks and -(1/2) sigma.v D^{1/2}(R) in the lower left.
/// The upper components never mix with the lower ones.
inline Eigen::Matrix4cd build_boost_matrix(const BoostParameters& bp) {
    Eigen::Matrix2cd D = su2_from_rotation(bp.R);
    using namespace std::complex_literals;
    Eigen::Matrix2cd sv;
    sv << bp.v.z(), bp.v.x() - 1i * bp.v.y(),
          bp.v.x() + 1i * bp.v.y(), -bp.v.z();
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    out.block<2, 2>(0, 0) = D;
    out.block<2, 2>(2, 2) = D;
    out.block<2, 2>(2, 0) = -0.5 * sv * D;
    return out;
}

}  // namespace galosc
