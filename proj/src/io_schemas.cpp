#include "fisheyemc/io_schemas.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fmc {

namespace {

using nlohmann::json;

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
    }
}

double get_number(const json& j, const char* field, const char* what) {
    if (!j.contains(field) || !j[field].is_number()) {
        throw ParseError(std::string(what) + ": missing or non-numeric field '" + field + "'");
    }
    return j[field].get<double>();
}

void check_schema_version(const json& j, const char* what) {
    if (j.contains("schema_version") && j["schema_version"] != 1) {
        throw ParseError(std::string(what) + ": unsupported schema_version");
    }
}

Pose pose_from_json(const json& j, const char* what) {
    if (!j.contains("R") || !j["R"].is_array() || j["R"].size() != 9 || !j.contains("t") ||
        !j["t"].is_array() || j["t"].size() != 3) {
        throw ParseError(std::string(what) + ": extrinsics need R[9] (row-major) and t[3]");
    }
    Mat3 r;
    for (int i = 0; i < 9; ++i) {
        if (!j["R"][i].is_number()) throw ParseError(std::string(what) + ": R entries must be numbers");
        r.m[static_cast<size_t>(i)] = j["R"][i].get<double>();
    }
    Vec3 t;
    for (int i = 0; i < 3; ++i) {
        if (!j["t"][i].is_number()) throw ParseError(std::string(what) + ": t entries must be numbers");
    }
    t.x = j["t"][0].get<double>();
    t.y = j["t"][1].get<double>();
    t.z = j["t"][2].get<double>();
    try {
        return Pose(r, t);
    } catch (const Error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

FisheyeIntrinsics load_calibration_text(const std::string& json_text) {
    const json j = parse_json(json_text, "calibration");
    check_schema_version(j, "calibration");
    if (!j.contains("k") || !j["k"].is_array() || j["k"].size() != 4) {
        throw ParseError("calibration: field 'k' must be an array of 4 coefficients");
    }
    std::array<double, 4> k{};
    for (int i = 0; i < 4; ++i) {
        if (!j["k"][i].is_number()) throw ParseError("calibration: 'k' entries must be numbers");
        k[static_cast<size_t>(i)] = j["k"][i].get<double>();
    }
    const double cx = get_number(j, "cx", "calibration");
    const double cy = get_number(j, "cy", "calibration");
    const int width = static_cast<int>(get_number(j, "width", "calibration"));
    const int height = static_cast<int>(get_number(j, "height", "calibration"));
    double theta_max_deg = 95.0;
    if (j.contains("theta_max_deg")) theta_max_deg = get_number(j, "theta_max_deg", "calibration");
    try {
        return FisheyeIntrinsics(k, cx, cy, width, height, theta_max_deg * kDegToRad);
    } catch (const Error& e) {
        throw ParseError(std::string("calibration: ") + e.what());
    }
}

FisheyeIntrinsics load_calibration_file(const std::string& path) {
    return load_calibration_text(read_text_file(path));
}

std::string calibration_to_json(const FisheyeIntrinsics& intr) {
    json j;
    j["schema_version"] = 1;
    j["k"] = intr.k();
    j["cx"] = intr.cx();
    j["cy"] = intr.cy();
    j["width"] = intr.width();
    j["height"] = intr.height();
    j["theta_max_deg"] = intr.theta_max() / kDegToRad;
    return j.dump(2) + "\n";
}

FisheyeIntrinsics FisheyeIntrinsics::from_json_text(const std::string& json_text) {
    return load_calibration_text(json_text);
}

std::string FisheyeIntrinsics::to_json_text() const { return calibration_to_json(*this); }

MotionFile load_motion_text(const std::string& json_text) {
    const json j = parse_json(json_text, "motion");
    check_schema_version(j, "motion");
    MotionFile m;
    m.ego.speed_mps = get_number(j, "speed_mps", "motion");
    m.ego.yaw_rate_dps = get_number(j, "yaw_rate_dps", "motion");
    m.ego.dt_s = get_number(j, "dt_s", "motion");
    try {
        m.ego.validate();
    } catch (const Error& e) {
        throw ParseError(std::string("motion: ") + e.what());
    }
    if (j.contains("extrinsics")) {
        m.extrinsics = pose_from_json(j["extrinsics"], "motion");
        m.has_extrinsics = true;
    }
    return m;
}

MotionFile load_motion_file(const std::string& path) {
    return load_motion_text(read_text_file(path));
}

std::string motion_to_json(const MotionFile& motion) {
    json j;
    j["schema_version"] = 1;
    j["speed_mps"] = motion.ego.speed_mps;
    j["yaw_rate_dps"] = motion.ego.yaw_rate_dps;
    j["dt_s"] = motion.ego.dt_s;
    if (motion.has_extrinsics) {
        j["extrinsics"]["R"] = motion.extrinsics.rotation().m;
        j["extrinsics"]["t"] = {motion.extrinsics.translation().x, motion.extrinsics.translation().y,
                                motion.extrinsics.translation().z};
    }
    return j.dump(2) + "\n";
}

Pose relative_pose_from_motion(const MotionFile& motion, bool invert_extrinsics) {
    const Pose vehicle = vehicle_motion_pose(motion.ego);
    Pose extrinsics = motion.extrinsics;
    if (invert_extrinsics) extrinsics = invert(extrinsics);
    return relative_camera_pose(vehicle, extrinsics);
}

BoxSet load_boxes_jsonl_text(const std::string& text, bool expect_scores) {
    BoxSet set;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // Skip blank lines.
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string where = "boxes line " + std::to_string(line_no);
        const json j = parse_json(line, where.c_str());
        if (!j.contains("image") || !j["image"].is_string()) {
            throw ParseError(where + ": missing string field 'image'");
        }
        if (!j.contains("class") || !j["class"].is_number_integer()) {
            throw ParseError(where + ": missing integer field 'class'");
        }
        if (!j.contains("box") || !j["box"].is_array() || j["box"].size() != 4) {
            throw ParseError(where + ": field 'box' must be [x1, y1, x2, y2]");
        }
        Box box;
        box.class_id = j["class"].get<int>();
        for (int i = 0; i < 4; ++i) {
            if (!j["box"][i].is_number()) throw ParseError(where + ": 'box' entries must be numbers");
        }
        box.x1 = j["box"][0].get<double>();
        box.y1 = j["box"][1].get<double>();
        box.x2 = j["box"][2].get<double>();
        box.y2 = j["box"][3].get<double>();
        if (j.contains("score")) {
            if (!j["score"].is_number()) throw ParseError(where + ": 'score' must be a number");
            box.score = j["score"].get<double>();
            if (box.score < 0.0 || box.score > 1.0) {
                throw ParseError(where + ": 'score' must be in [0, 1]");
            }
        }
        if (expect_scores && !box.has_score()) {
            throw ParseError(where + ": detection record is missing 'score'");
        }
        if (!expect_scores && box.has_score()) {
            throw ParseError(where + ": ground-truth record must not carry 'score'");
        }
        try {
            set.add(j["image"].get<std::string>(), box);
        } catch (const Error& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return set;
}

BoxSet load_boxes_jsonl_file(const std::string& path, bool expect_scores) {
    return load_boxes_jsonl_text(read_text_file(path), expect_scores);
}

ZoneSpec load_ellipse_zone_file(const std::string& path, int frame_width, int frame_height) {
    const json j = parse_json(read_text_file(path), "ellipse zone");
    check_schema_version(j, "ellipse zone");
    auto parse_ellipse = [](const json& e, const char* name) {
        EllipseSpec spec;
        if (!e.is_object()) throw ParseError(std::string("ellipse zone: '") + name + "' must be an object");
        spec.cx = get_number(e, "cx", name);
        spec.cy = get_number(e, "cy", name);
        spec.ax = get_number(e, "ax", name);
        spec.ay = get_number(e, "ay", name);
        return spec;
    };
    if (!j.contains("e1") || !j.contains("e2")) {
        throw ParseError("ellipse zone: fields 'e1' and 'e2' are required");
    }
    try {
        return ZoneSpec::ellipse_union(frame_width, frame_height, parse_ellipse(j["e1"], "e1"),
                                       parse_ellipse(j["e2"], "e2"));
    } catch (const Error& e) {
        throw ParseError(std::string("ellipse zone: ") + e.what());
    }
}

}  // namespace fmc
