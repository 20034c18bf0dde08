#include "fisheyemc/motion.hpp"

#include <cmath>

namespace fmc {

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
// Below this heading change the closed-form chord loses precision to
// cancellation; the truncated series is accurate to ~1e-28 there.
constexpr double kSeriesSwitchRad = 1e-4;

// sin(x)/x
double sinc(double x) {
    if (std::abs(x) < kSeriesSwitchRad) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// (1 - cos(x))/x
double versinc(double x) {
    if (std::abs(x) < kSeriesSwitchRad) {
        const double x2 = x * x;
        return x * (0.5 - x2 / 24.0 + x2 * x2 / 720.0);
    }
    return (1.0 - std::cos(x)) / x;
}

}  // namespace

void EgoMotion::validate() const {
    if (!std::isfinite(speed_mps) || speed_mps < 0.0) {
        throw InvalidArgument("ego motion: speed must be finite and >= 0");
    }
    if (!std::isfinite(yaw_rate_dps)) {
        throw InvalidArgument("ego motion: yaw rate must be finite");
    }
    if (!std::isfinite(dt_s) || !(dt_s > 0.0)) {
        throw InvalidArgument("ego motion: dt must be finite and > 0");
    }
}

Pose vehicle_motion_pose(const EgoMotion& ego) {
    ego.validate();
    const double psi = ego.yaw_rate_dps * kDegToRad * ego.dt_s;
    const double arc = ego.speed_mps * ego.dt_s;
    // Chord of the arc: x = r sin(psi), y = r (1 - cos(psi)), r = arc / psi.
    const Vec3 t{arc * sinc(psi), arc * versinc(psi), 0.0};
    return Pose(Mat3::rotation_z(psi), t);
}

Pose relative_camera_pose(const Pose& vehicle_motion, const Pose& extrinsics) {
    return compose(invert(extrinsics), compose(vehicle_motion, extrinsics));
}

}  // namespace fmc
