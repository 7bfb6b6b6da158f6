#include <doctest.h>

#include <cmath>

#include <Eigen/LU>

#include "qcy/group.hpp"
#include "qcy/sampling.hpp"

using namespace qcy;

namespace {

double dist(const Quaternion& a, const Quaternion& b) { return std::sqrt((a - b).norm2()); }

double dist(const GroupPoint& a, const GroupPoint& b) {
  const auto x = a.coords(), y = b.coords();
  double m = 0.0;
  for (int i = 0; i < kDim; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

Quaternion random_quat(Sampler& s) { return {s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2)}; }

// Hamilton product through the 4x4 left-multiplication matrix, independent of the operator.
Quaternion matrix_mul(const Quaternion& a, const Quaternion& b) {
  Eigen::Matrix4d L;
  L << a.w, -a.x, -a.y, -a.z,
       a.x, a.w, -a.z, a.y,
       a.y, a.z, a.w, -a.x,
       a.z, -a.y, a.x, a.w;
  const Eigen::Vector4d r = L * Eigen::Vector4d(b.w, b.x, b.y, b.z);
  return {r(0), r(1), r(2), r(3)};
}

}  // namespace

TEST_CASE("quat_mul examples") {
  const Quaternion b(0.3, -1.2, 2.5, 0.7);
  CHECK(quat_mul(Quaternion::identity(), b) == b);
  CHECK(quat_mul(Quaternion::i(), Quaternion::j()) == Quaternion::k());
  CHECK(quat_mul(Quaternion(1, 1, 0, 0), Quaternion(1, 0, 1, 0)) == Quaternion(1, 1, 1, 1));
  CHECK(quat_mul(Quaternion::j(), Quaternion::i()) == -Quaternion::k());
  CHECK(quat_mul(Quaternion::k(), Quaternion::k()) == Quaternion(-1.0));
}

TEST_CASE("quat_inv examples and errors") {
  CHECK(quat_inv(Quaternion::identity()) == Quaternion::identity());
  CHECK(quat_inv(Quaternion::i()) == -Quaternion::i());
  CHECK(dist(quat_inv(Quaternion(0, 0, 0, 2)), Quaternion(0, 0, 0, -0.5)) == 0.0);
  CHECK_THROWS_AS(quat_inv(Quaternion{}), DomainError);
}

TEST_CASE("quaternion properties") {
  Sampler s(7, 1);
  for (int k = 0; k < 500; ++k) {
    const Quaternion a = random_quat(s), b = random_quat(s), c = random_quat(s);
    CHECK(dist(a * (b * c), (a * b) * c) < 1e-13);
    CHECK(dist(a * b, matrix_mul(a, b)) < 1e-14);
    CHECK(std::abs((a * b).norm2() - a.norm2() * b.norm2()) < 1e-12 * (1.0 + a.norm2() * b.norm2()));
    CHECK(dist((a * b).conj(), b.conj() * a.conj()) < 1e-14);
    CHECK(dist(a * quat_inv(a), Quaternion::identity()) < 1e-14);
  }
}

TEST_CASE("group law examples") {
  const GroupPoint g{{0.5, -1.0, 2.0, 0.25}, {1.0, -3.0, 0.5}};
  CHECK(group_mul(GroupPoint{}, g) == g);
  CHECK(group_mul(g, GroupPoint{}) == g);
  const GroupPoint ij = group_mul({Quaternion::i(), {}}, {Quaternion::j(), {}});
  CHECK(ij == GroupPoint{{0, 1, 1, 0}, {0, 0, -2}});
  // oracle: 2 Im(i * conj(j)) through quat_mul
  const Quaternion tw = 2.0 * quat_mul(Quaternion::i(), Quaternion::j().conj());
  CHECK(ij.omega == ImQuaternion::from_imag(tw));
  CHECK(dist(group_mul(g, group_inv(g)), GroupPoint{}) == 0.0);
}

TEST_CASE("group_inv examples") {
  CHECK(group_inv(GroupPoint{}) == GroupPoint{});
  CHECK(group_inv({Quaternion::i(), {0, 0, 1}}) == GroupPoint{-Quaternion::i(), {0, 0, -1}});
  CHECK(group_inv({{1, 0, 1, 0}, {2, 0, 0}}) == GroupPoint{{-1, 0, -1, 0}, {-2, 0, 0}});
}

TEST_CASE("dilation examples and errors") {
  const GroupPoint g{Quaternion::i(), {0, 0, 1}};
  CHECK(dilation(1.0, g) == g);
  CHECK(dilation(2.0, g) == GroupPoint{{0, 2, 0, 0}, {0, 0, 4}});
  CHECK_THROWS_AS(dilation(0.0, g), DomainError);
  CHECK_THROWS_AS(dilation(-1.0, g), DomainError);
}

TEST_CASE("group properties") {
  Sampler s(11, 2);
  for (int k = 0; k < 500; ++k) {
    const GroupPoint a = s.point(3), b = s.point(3), c = s.point(3);
    CHECK(dist(group_mul(a, group_mul(b, c)), group_mul(group_mul(a, b), c)) < 1e-12);
    CHECK(dist(group_mul(group_inv(a), a), GroupPoint{}) < 1e-14);
    const double l = s.uniform(0.1, 5.0), m = s.uniform(0.1, 5.0);
    CHECK(dist(dilation(l, group_mul(a, b)), group_mul(dilation(l, a), dilation(l, b))) < 1e-11);
    CHECK(dist(dilation(l, dilation(m, a)), dilation(l * m, a)) < 1e-12);
  }
}

TEST_CASE("jacobians match finite differences") {
  Sampler s(3, 3);
  const GroupPoint g0 = s.point(1.0), p = s.point(1.0);
  const Mat7 J = left_translation_jacobian(g0);
  const double h = 1e-6;
  for (int j = 0; j < kDim; ++j) {
    auto plus = p.coords(), minus = p.coords();
    plus[j] += h;
    minus[j] -= h;
    const auto a = group_mul(g0, GroupPoint::from_coords(plus)).coords();
    const auto b = group_mul(g0, GroupPoint::from_coords(minus)).coords();
    for (int i = 0; i < kDim; ++i) CHECK(std::abs((a[i] - b[i]) / (2 * h) - J(i, j)) < 1e-8);
  }
  CHECK(std::abs(left_translation_jacobian(g0).determinant() - 1.0) < 1e-12);
  CHECK(std::abs(dilation_jacobian(2.0).determinant() - std::pow(2.0, kHomogeneousDim)) < 1e-9);
}
