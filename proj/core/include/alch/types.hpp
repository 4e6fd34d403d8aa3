#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

namespace alch {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

/// Bohr radius in angstrom; all internal math runs in hartree/bohr.
inline constexpr double kAngstromPerBohr = 0.52917721092;

inline double angstrom_to_bohr(double x) { return x / kAngstromPerBohr; }
inline Vec3 angstrom_to_bohr(const Vec3& r) { return r / kAngstromPerBohr; }

}  // namespace alch
