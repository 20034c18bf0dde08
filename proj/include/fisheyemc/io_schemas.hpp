#pragma once

#include <optional>
#include <string>

#include "fisheyemc/camera.hpp"
#include "fisheyemc/motion.hpp"
#include "fisheyemc/zonal.hpp"

namespace fmc {

/// Parsed motion file: ego-motion record plus optional camera-to-vehicle
/// extrinsics (identity when absent).
struct MotionFile {
    EgoMotion ego;
    Pose extrinsics;
    bool has_extrinsics = false;
};

// Calibration JSON:
//   {"schema_version":1, "k":[k1,k2,k3,k4], "cx":.., "cy":..,
//    "width":.., "height":.., "theta_max_deg":..}
// theta_max_deg defaults to 95 when absent.
FisheyeIntrinsics load_calibration_text(const std::string& json_text);
FisheyeIntrinsics load_calibration_file(const std::string& path);
std::string calibration_to_json(const FisheyeIntrinsics& intr);

// Motion JSON:
//   {"schema_version":1, "speed_mps":.., "yaw_rate_dps":.., "dt_s":..,
//    "extrinsics": {"R":[9 row-major], "t":[3]}}   (extrinsics optional)
MotionFile load_motion_text(const std::string& json_text);
MotionFile load_motion_file(const std::string& path);
std::string motion_to_json(const MotionFile& motion);

/// Relative camera pose implied by a motion file; set invert_extrinsics when
/// the stored extrinsics are vehicle-to-camera instead of camera-to-vehicle.
Pose relative_pose_from_motion(const MotionFile& motion, bool invert_extrinsics = false);

// Boxes as JSON-lines, one object per line:
//   {"image": "name", "class": 3, "box": [x1, y1, x2, y2], "score": 0.9}
// "score" is required for detections and must be absent in ground truth.
BoxSet load_boxes_jsonl_text(const std::string& text, bool expect_scores);
BoxSet load_boxes_jsonl_file(const std::string& path, bool expect_scores);

// Ellipse-union zone JSON:
//   {"schema_version":1, "e1": {"cx":..,"cy":..,"ax":..,"ay":..}, "e2": {...}}
ZoneSpec load_ellipse_zone_file(const std::string& path, int frame_width, int frame_height);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fmc
