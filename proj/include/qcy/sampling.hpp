#pragma once

#include <cstdint>
#include <random>

#include "qcy/cayley.hpp"
#include "qcy/frame.hpp"

namespace qcy {

/// Seeded source of random test inputs. Each (seed, stream) pair gives an
/// independent, reproducible sequence.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
    rng_.seed(seq);
  }

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  double normal() { return std::normal_distribution<double>()(rng_); }

  /// Uniform in the box |coords| <= box.
  GroupPoint point(double box) {
    Coords c;
    for (auto& v : c) v = uniform(-box, box);
    return GroupPoint::from_coords(c);
  }

  Vec4 vec4(double scale = 1.0) {
    Vec4 v;
    for (int i = 0; i < 4; ++i) v(i) = uniform(-scale, scale);
    return v;
  }

  Mat4 symmetric() {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) m(i, j) = m(j, i) = uniform(-1.0, 1.0);
    return m;
  }

  /// Uniform on the unit sphere of H x H.
  SpherePoint sphere() {
    const Quaternion q(normal(), normal(), normal(), normal());
    const Quaternion p(normal(), normal(), normal(), normal());
    return SpherePoint(q, p);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qcy
