#pragma once

#include <cstdint>

#include "fisheyemc/camera.hpp"
#include "fisheyemc/frame.hpp"
#include "fisheyemc/geometry.hpp"

namespace fmc {

/// Textured fronto-parallel plane observed from two camera poses. The world
/// frame coincides with the reference camera; the plane is z = plane_depth_m.
/// The target camera pose in the world frame equals the relative pose that
/// maps target-frame points into the reference frame, so the pose handed to
/// the predictor is exactly the ground truth.
struct SyntheticScene {
    uint64_t seed = 1;
    double plane_depth_m = 10.0;
    enum class Texture { Noise, Checker };
    Texture texture = Texture::Noise;
    double texture_scale_m = 0.5;  // feature size on the plane
    double background = 0.0;       // rays missing the plane
};

struct SyntheticPair {
    GrayFrame reference;
    GrayFrame target;
};

/// Analytic intensity of the procedural texture at a point on the plane.
/// Deterministic in (seed, position); smooth multi-octave value noise or a
/// soft-edged checkerboard.
double synthetic_texture(const SyntheticScene& scene, double x, double y);

/// Renders both views by unprojecting each pixel, intersecting the ray with
/// the plane and sampling the texture analytically. Throws DomainError when
/// the plane is not in front of both cameras.
SyntheticPair render_synthetic_pair(const FisheyeIntrinsics& intr, const Pose& relpose,
                                    const SyntheticScene& scene);

}  // namespace fmc
