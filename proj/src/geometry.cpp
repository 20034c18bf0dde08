#include "fisheyemc/geometry.hpp"

#include <algorithm>

namespace fmc {

Vec3 Vec3::normalized() const {
    const double n = norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DomainError("cannot normalize zero or non-finite vector");
    }
    return {x / n, y / n, z / n};
}

Mat3 Mat3::rotation_z(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {c, -s, 0, s, c, 0, 0, 0, 1};
    return r;
}

Mat3 Mat3::rotation_y(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {c, 0, s, 0, 1, 0, -s, 0, c};
    return r;
}

Mat3 Mat3::rotation_x(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {1, 0, 0, 0, c, -s, 0, s, c};
    return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    }
    return r;
}

Mat3 Mat3::transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
}

double Mat3::det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

double Mat3::orthonormality_error() const {
    const Mat3 g = transposed() * (*this);
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            err = std::max(err, std::abs(g(i, j) - target));
        }
    }
    return err;
}

Mat3 Mat3::orthonormalized() const {
    Vec3 r0{m[0], m[1], m[2]};
    Vec3 r1{m[3], m[4], m[5]};
    r0 = r0.normalized();
    r1 = (r1 - r0 * r1.dot(r0)).normalized();
    // Cross product keeps the handedness of a proper rotation.
    const Vec3 r2{r0.y * r1.z - r0.z * r1.y, r0.z * r1.x - r0.x * r1.z,
                  r0.x * r1.y - r0.y * r1.x};
    Mat3 r;
    r.m = {r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z};
    return r;
}

Pose::Pose(const Mat3& rotation, const Vec3& translation)
    : rotation_(rotation), translation_(translation) {
    if (!translation_.finite()) throw InvalidArgument("pose translation must be finite");
    for (double v : rotation_.m) {
        if (!std::isfinite(v)) throw InvalidArgument("pose rotation must be finite");
    }
    if (rotation_.orthonormality_error() > 1e-9) {
        throw InvalidArgument("pose rotation is not orthonormal within 1e-9");
    }
    if (rotation_.det() < 0.0) {
        throw InvalidArgument("pose rotation must have determinant +1");
    }
}

Pose compose(const Pose& a, const Pose& b) {
    const Mat3 r = (a.rotation() * b.rotation()).orthonormalized();
    const Vec3 t = a.rotation() * b.translation() + a.translation();
    return Pose(r, t);
}

Pose invert(const Pose& a) {
    const Mat3 rt = a.rotation().transposed();
    const Vec3 t = rt * a.translation();
    return Pose(rt, {-t.x, -t.y, -t.z});
}

}  // namespace fmc
