#include "fisheyemc/synth.hpp"

#include <cmath>

namespace fmc {

namespace {

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Lattice value in [0, 1), deterministic in (ix, iy, seed).
double lattice_value(int64_t ix, int64_t iy, uint64_t seed) {
    uint64_t h = mix64(static_cast<uint64_t>(ix) * 0x8da6b343ull ^
                       static_cast<uint64_t>(iy) * 0xd8163841ull ^ seed);
    return static_cast<double>(h >> 11) * (1.0 / 9007199254740992.0);
}

double fade(double t) { return t * t * t * (t * (t * 6.0 - 15.0) + 10.0); }

double value_noise(double x, double y, uint64_t seed) {
    const double fx = std::floor(x);
    const double fy = std::floor(y);
    const int64_t ix = static_cast<int64_t>(fx);
    const int64_t iy = static_cast<int64_t>(fy);
    const double tx = fade(x - fx);
    const double ty = fade(y - fy);
    const double v00 = lattice_value(ix, iy, seed);
    const double v10 = lattice_value(ix + 1, iy, seed);
    const double v01 = lattice_value(ix, iy + 1, seed);
    const double v11 = lattice_value(ix + 1, iy + 1, seed);
    const double top = v00 + (v10 - v00) * tx;
    const double bot = v01 + (v11 - v01) * tx;
    return top + (bot - top) * ty;
}

}  // namespace

double synthetic_texture(const SyntheticScene& scene, double x, double y) {
    const double inv_scale = 1.0 / scene.texture_scale_m;
    if (scene.texture == SyntheticScene::Texture::Checker) {
        constexpr double kPi = 3.14159265358979323846;
        const double s = std::sin(kPi * x * inv_scale) * std::sin(kPi * y * inv_scale);
        return 127.5 + 97.5 * std::tanh(3.0 * s);
    }
    double value = 0.0;
    double amplitude = 1.0;
    double total = 0.0;
    double freq = inv_scale;
    for (int octave = 0; octave < 3; ++octave) {
        value += amplitude * value_noise(x * freq, y * freq, scene.seed + octave);
        total += amplitude;
        amplitude *= 0.5;
        freq *= 2.0;
    }
    return 20.0 + 215.0 * value / total;
}

SyntheticPair render_synthetic_pair(const FisheyeIntrinsics& intr, const Pose& relpose,
                                    const SyntheticScene& scene) {
    if (!(scene.plane_depth_m > 0.0)) {
        throw DomainError("synthetic scene: plane must be in front of the reference camera");
    }
    if (relpose.translation().z >= scene.plane_depth_m) {
        throw DomainError("synthetic scene: plane must be in front of the target camera");
    }
    if (!(scene.texture_scale_m > 0.0)) {
        throw InvalidArgument("synthetic scene: texture scale must be positive");
    }

    auto render = [&](const Pose& cam_to_world) {
        GrayFrame frame(intr.width(), intr.height(), scene.background);
        for (int y = 0; y < intr.height(); ++y) {
            for (int x = 0; x < intr.width(); ++x) {
                const PixelCoord px{static_cast<double>(x), static_cast<double>(y)};
                if (!intr.in_image_circle(px)) continue;
                const Vec3 dir = cam_to_world.apply_direction(intr.unproject(px));
                if (dir.z <= 1e-12) continue;  // parallel to or away from the plane
                const double t = (scene.plane_depth_m - cam_to_world.translation().z) / dir.z;
                if (t <= 0.0) continue;
                const Vec3 p = cam_to_world.translation() + dir * t;
                frame.at(x, y) = synthetic_texture(scene, p.x, p.y);
            }
        }
        return frame;
    };

    SyntheticPair pair;
    pair.reference = render(Pose::identity());
    pair.target = render(relpose);
    return pair;
}

}  // namespace fmc
