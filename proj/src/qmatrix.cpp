#include "qcy/qmatrix.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace qcy {

const QMatrix& q_matrix() {
  static const QMatrix q = [] {
    // entries in thirds
    constexpr int thirds[6][6] = {
        {6, 0, 0, 10, -2, -2},   {0, 6, 0, -2, 10, -2},   {0, 0, 6, -2, -2, 10},
        {10, -2, -2, 22, -2, -2}, {-2, 10, -2, -2, 22, -2}, {-2, -2, 10, -2, -2, 22},
    };
    QMatrix r;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r.m(i, j) = thirds[i][j] / 3.0;
    return r;
  }();
  return q;
}

Vec6 q_spectrum() {
  Eigen::SelfAdjointEigenSolver<Mat6> solver(q_matrix().m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

int q_kernel_dimension(double tol) {
  const Vec6 ev = q_spectrum();
  int n = 0;
  for (int i = 0; i < 6; ++i) n += std::abs(ev(i)) < tol;
  return n;
}

double q_form(const BlockVector& v) {
  const Mat6& q = q_matrix().m;
  double s = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) s += q(i, j) * v[static_cast<std::size_t>(i)].dot(v[static_cast<std::size_t>(j)]);
  return s;
}

double q_form_cyclic(const BlockVector& v) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const Vec4& Di = v[static_cast<std::size_t>(i)];
    const Vec4& Dj = v[static_cast<std::size_t>(j)];
    const Vec4& Dk = v[static_cast<std::size_t>(k)];
    const Vec4& Ai = v[static_cast<std::size_t>(3 + i)];
    const Vec4& Aj = v[static_cast<std::size_t>(3 + j)];
    const Vec4& Ak = v[static_cast<std::size_t>(3 + k)];
    s += Di.dot(3.0 * Ai - Aj - Ak + 2.0 * Di);
    s += Ai.dot(22.0 / 3.0 * Ai - 2.0 / 3.0 * Aj - 2.0 / 3.0 * Ak + 11.0 / 3.0 * Di - 1.0 / 3.0 * Dj - 1.0 / 3.0 * Dk);
  }
  return s;
}

double quadratic_form_audit(const BlockVector& v) { return std::abs(q_form(v) - q_form_cyclic(v)); }

}  // namespace qcy
