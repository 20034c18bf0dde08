#include "fisheyemc/camera.hpp"

#include <algorithm>
#include <cmath>

namespace fmc {

namespace {

constexpr int kMonotonicitySamples = 4096;
constexpr double kPi = 3.14159265358979323846;
constexpr double kRhoTol = 1e-9;  // px

double eval_poly(const std::array<double, 4>& k, double theta) {
    return theta * (k[0] + theta * (k[1] + theta * (k[2] + theta * k[3])));
}

}  // namespace

FisheyeIntrinsics::FisheyeIntrinsics(const std::array<double, 4>& k, double cx, double cy,
                                     int width, int height, double theta_max_rad)
    : k_(k), cx_(cx), cy_(cy), width_(width), height_(height), theta_max_(theta_max_rad) {
    for (double v : k_) {
        if (!std::isfinite(v)) throw InvalidArgument("calibration: k must be finite");
    }
    if (!std::isfinite(cx_) || !std::isfinite(cy_)) {
        throw InvalidArgument("calibration: distortion center must be finite");
    }
    if (width_ <= 0 || height_ <= 0) {
        throw InvalidArgument("calibration: image size must be positive");
    }
    if (!(theta_max_ > 0.0) || theta_max_ > kPi) {
        throw InvalidArgument("calibration: theta_max must be in (0, pi]");
    }
    double prev = 0.0;
    for (int i = 1; i <= kMonotonicitySamples; ++i) {
        const double theta = theta_max_ * i / kMonotonicitySamples;
        const double rho = eval_poly(k_, theta);
        if (!(rho > prev)) {
            throw InvalidArgument("calibration: rho(theta) is not strictly increasing on [0, theta_max]");
        }
        prev = rho;
    }
    rho_max_ = eval_poly(k_, theta_max_);
}

double FisheyeIntrinsics::theta_to_rho(double theta) const {
    if (!std::isfinite(theta) || theta < 0.0 || theta > theta_max_) {
        throw DomainError("theta_to_rho: theta outside [0, theta_max]");
    }
    return eval_poly(k_, theta);
}

double FisheyeIntrinsics::rho_to_theta(double rho) const {
    if (!std::isfinite(rho) || rho < 0.0 || rho > rho_max_) {
        throw DomainError("rho_to_theta: rho outside [0, rho(theta_max)]");
    }
    if (rho == 0.0) return 0.0;

    // Bracketed bisection; monotonicity guarantees a unique root.
    double lo = 0.0, hi = theta_max_;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (eval_poly(k_, mid) < rho) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Newton polish.
    double theta = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
        const double f = eval_poly(k_, theta) - rho;
        if (std::abs(f) < kRhoTol) break;
        const double df = k_[0] + theta * (2 * k_[1] + theta * (3 * k_[2] + theta * 4 * k_[3]));
        if (!(df > 0.0)) break;
        theta -= f / df;
        theta = std::clamp(theta, 0.0, theta_max_);
    }
    return theta;
}

PixelCoord FisheyeIntrinsics::project(const Vec3& dir, bool* valid) const {
    if (!dir.finite()) throw InvalidArgument("project: direction must be finite");
    const double r_xy = std::hypot(dir.x, dir.y);
    const double theta = std::atan2(r_xy, dir.z);
    if (valid) *valid = theta <= theta_max_;
    if (r_xy == 0.0) {
        if (valid && dir.z < 0.0) *valid = false;
        return {cx_, cy_};
    }
    const double rho = eval_poly(k_, theta);
    return {cx_ + rho * dir.x / r_xy, cy_ + rho * dir.y / r_xy};
}

Vec3 FisheyeIntrinsics::unproject(const PixelCoord& px) const {
    if (!std::isfinite(px.u) || !std::isfinite(px.v)) {
        throw InvalidArgument("unproject: pixel must be finite");
    }
    const double dx = px.u - cx_;
    const double dy = px.v - cy_;
    const double rho = std::hypot(dx, dy);
    if (rho > rho_max_) {
        throw DomainError("unproject: pixel outside the lens image circle");
    }
    if (rho == 0.0) return {0.0, 0.0, 1.0};
    const double theta = rho_to_theta(rho);
    const double s = std::sin(theta);
    return {s * dx / rho, s * dy / rho, std::cos(theta)};
}

bool FisheyeIntrinsics::in_image_circle(const PixelCoord& px) const {
    return std::hypot(px.u - cx_, px.v - cy_) <= rho_max_;
}

}  // namespace fmc
