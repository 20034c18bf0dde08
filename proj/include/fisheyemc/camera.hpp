#pragma once

#include <array>
#include <string>

#include "fisheyemc/geometry.hpp"

namespace fmc {

struct PixelCoord {
    double u = 0.0;
    double v = 0.0;
};

/// Fisheye lens model mapping the field angle theta (radians off the optical
/// axis) to the image radius rho (pixels) through a 4th-degree polynomial
/// rho(theta) = k1*theta + k2*theta^2 + k3*theta^3 + k4*theta^4.
///
/// Camera frame convention: z forward along the optical axis, x right,
/// y down; pixel origin is the top-left image corner.
class FisheyeIntrinsics {
  public:
    /// Validates the model: rho(theta) must be strictly increasing on
    /// [0, theta_max] (checked on a 4096-point grid) and theta_max in (0, pi].
    FisheyeIntrinsics(const std::array<double, 4>& k, double cx, double cy, int width,
                      int height, double theta_max_rad);

    const std::array<double, 4>& k() const { return k_; }
    double cx() const { return cx_; }
    double cy() const { return cy_; }
    int width() const { return width_; }
    int height() const { return height_; }
    double theta_max() const { return theta_max_; }
    /// Image-circle radius rho(theta_max) in pixels.
    double rho_max() const { return rho_max_; }

    /// Polynomial evaluation; theta must be in [0, theta_max].
    double theta_to_rho(double theta) const;

    /// Inverse of theta_to_rho by bisection plus Newton polish; the returned
    /// theta satisfies |theta_to_rho(theta) - rho| < 1e-9 px.
    double rho_to_theta(double rho) const;

    /// Maps a unit direction to its pixel. valid=false when the field angle
    /// exceeds theta_max (the pixel value is still the polynomial extension).
    PixelCoord project(const Vec3& dir, bool* valid) const;

    /// Inverse of project; throws DomainError when the pixel lies outside the
    /// lens image circle.
    Vec3 unproject(const PixelCoord& px) const;

    bool in_image_circle(const PixelCoord& px) const;

    static FisheyeIntrinsics from_json_text(const std::string& json_text);
    std::string to_json_text() const;

  private:
    std::array<double, 4> k_;
    double cx_, cy_;
    int width_, height_;
    double theta_max_;
    double rho_max_;
};

}  // namespace fmc
