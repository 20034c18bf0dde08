#pragma once

#include "fisheyemc/geometry.hpp"

namespace fmc {

/// Vehicle ego-motion over one frame interval. Yaw rate is counter-clockwise
/// positive when viewed from above (vehicle z up).
struct EgoMotion {
    double speed_mps = 0.0;
    double yaw_rate_dps = 0.0;
    double dt_s = 1.0;

    /// Throws InvalidArgument unless dt > 0 and speed >= 0.
    void validate() const;
};

/// Pose of the vehicle frame at time t expressed in the vehicle frame at
/// t - dt (maps points from the later frame into the earlier one).
///
/// Planar circular-arc model on the ground plane (vehicle x forward, y left,
/// z up): heading change psi = yaw_rate * dt, chord displacement
/// (r sin psi, r (1 - cos psi)) with r = speed / omega. Evaluated through
/// sinc-style series near psi = 0, so the arc degenerates continuously to the
/// straight-line displacement speed * dt.
Pose vehicle_motion_pose(const EgoMotion& ego);

/// Conjugates the vehicle motion by the camera-to-vehicle extrinsics:
/// X^-1 * M * X. Result maps camera-frame points at time t into the camera
/// frame at t - dt (the reference frame).
Pose relative_camera_pose(const Pose& vehicle_motion, const Pose& extrinsics);

}  // namespace fmc
