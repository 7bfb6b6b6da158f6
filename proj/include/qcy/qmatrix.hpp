#pragma once

#include <array>

#include <Eigen/Core>

#include "qcy/conformal.hpp"

namespace qcy {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

/// The constant 6x6 matrix of the divergence formula, acting block-wise on
/// V = (D1, D2, D3, A1, A2, A3).
struct QMatrix {
  Mat6 m;
};

const QMatrix& q_matrix();

/// Eigenvalues in ascending order.
Vec6 q_spectrum();

/// Dimension of the kernel (eigenvalues below tol in absolute value).
int q_kernel_dimension(double tol = 1e-12);

using BlockVector = std::array<HorizontalCovector, 6>;

/// <Q V, V> with Q acting as Q (x) Id_4.
double q_form(const BlockVector& v);

/// The same quadratic form written as a cyclic sum over (1, 2, 3).
double q_form_cyclic(const BlockVector& v);

/// |q_form(V) - q_form_cyclic(V)|.
double quadratic_form_audit(const BlockVector& v);

}  // namespace qcy
