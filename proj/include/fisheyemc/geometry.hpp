#pragma once

#include <array>
#include <cmath>

#include "fisheyemc/errors.hpp"

namespace fmc {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    Vec3 normalized() const;
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return Mat3{}; }
    static Mat3 rotation_z(double angle_rad);
    static Mat3 rotation_y(double angle_rad);
    static Mat3 rotation_x(double angle_rad);

    double operator()(int r, int c) const { return m[static_cast<size_t>(r) * 3 + c]; }
    double& operator()(int r, int c) { return m[static_cast<size_t>(r) * 3 + c]; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    Mat3 operator*(const Mat3& o) const;
    Mat3 transposed() const;
    double det() const;

    // Max abs entry of M^T M - I.
    double orthonormality_error() const;
    // Gram-Schmidt on the rows; keeps right-handedness for near-rotations.
    Mat3 orthonormalized() const;
};

// Rigid transform mapping points from a source frame to a destination frame:
// p_dst = R * p_src + t.  R is validated to be a proper rotation on
// construction (orthonormal within 1e-9, det +1).
class Pose {
  public:
    Pose() = default;
    Pose(const Mat3& rotation, const Vec3& translation);

    static Pose identity() { return Pose{}; }

    const Mat3& rotation() const { return rotation_; }
    const Vec3& translation() const { return translation_; }

    Vec3 apply(const Vec3& p) const { return rotation_ * p + translation_; }
    Vec3 apply_direction(const Vec3& d) const { return rotation_ * d; }

  private:
    Mat3 rotation_ = Mat3::identity();
    Vec3 translation_{};
};

// compose(a, b) applies b first, then a; the rotation product is
// re-orthonormalized so long chains do not drift.
Pose compose(const Pose& a, const Pose& b);
Pose invert(const Pose& a);

}  // namespace fmc
