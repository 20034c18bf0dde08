#include "fisheyemc.h"

#include <cstring>
#include <new>
#include <string>

#include "fisheyemc/camera.hpp"
#include "fisheyemc/color.hpp"
#include "fisheyemc/compression.hpp"
#include "fisheyemc/epipolar.hpp"
#include "fisheyemc/errors.hpp"
#include "fisheyemc/frame.hpp"
#include "fisheyemc/image_io.hpp"
#include "fisheyemc/io_schemas.hpp"
#include "fisheyemc/motion.hpp"
#include "fisheyemc/predictor.hpp"
#include "fisheyemc/synth.hpp"
#include "fisheyemc/zonal.hpp"

struct fmc_camera {
    fmc::FisheyeIntrinsics intr;
};

struct fmc_image {
    fmc::Image8 img;
};

struct fmc_yuv420 {
    fmc::YuvImage420 yuv;
};

struct fmc_epipole_table {
    fmc::EpipoleTable table;
};

struct fmc_prediction {
    fmc::PredictionResult result;
    std::vector<int32_t> depth_map;
};

struct fmc_box_set {
    fmc::BoxSet set;
};

struct fmc_eval_report {
    fmc::EvalReport report;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
fmc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FMC_OK;
    } catch (const fmc::DomainError& e) {
        set_error(e.what());
        return FMC_ERR_DOMAIN;
    } catch (const fmc::ParseError& e) {
        set_error(e.what());
        return FMC_ERR_PARSE;
    } catch (const fmc::IoError& e) {
        set_error(e.what());
        return FMC_ERR_IO;
    } catch (const fmc::InvalidArgument& e) {
        set_error(e.what());
        return FMC_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return FMC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return FMC_ERR_INTERNAL;
    }
}

fmc_status invalid(const char* message) {
    set_error(message);
    return FMC_ERR_INVALID_ARGUMENT;
}

fmc::Pose to_pose(const fmc_pose& p) {
    fmc::Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[static_cast<size_t>(i)] = p.r[i];
    return fmc::Pose(r, {p.t[0], p.t[1], p.t[2]});
}

void from_pose(const fmc::Pose& pose, fmc_pose* out) {
    for (int i = 0; i < 9; ++i) out->r[i] = pose.rotation().m[static_cast<size_t>(i)];
    out->t[0] = pose.translation().x;
    out->t[1] = pose.translation().y;
    out->t[2] = pose.translation().z;
}

fmc::GrayFrame gray_frame_of(const fmc_image* img) {
    if (img->img.channels != 1) {
        throw fmc::InvalidArgument("expected a single-channel image");
    }
    return fmc::GrayFrame::from_u8(img->img.width, img->img.height, img->img.data.data());
}

fmc_image* image_from_frame(const fmc::GrayFrame& frame) {
    auto* out = new fmc_image{fmc::Image8(frame.width(), frame.height(), 1)};
    out->img.data = frame.to_u8();
    return out;
}

fmc::ZoneSpec to_zone(const fmc_zone_spec& z) {
    switch (z.variant) {
        case FMC_ZONE_CIRCLE:
            return fmc::ZoneSpec::circle(z.frame_width, z.frame_height, z.fraction);
        case FMC_ZONE_ANNULUS:
            return fmc::ZoneSpec::annulus(z.frame_width, z.frame_height, z.inner, z.outer);
        case FMC_ZONE_ELLIPSE_UNION:
            return fmc::ZoneSpec::ellipse_union(
                z.frame_width, z.frame_height,
                {z.e1[0], z.e1[1], z.e1[2], z.e1[3]},
                {z.e2[0], z.e2[1], z.e2[2], z.e2[3]});
        default:
            throw fmc::InvalidArgument("zone: unknown variant");
    }
}

const std::optional<double>* class_ap_of(const fmc::ClassReport& cr, fmc_eval_zone zone) {
    switch (zone) {
        case FMC_EVAL_FULL: return &cr.ap_full;
        case FMC_EVAL_CENTRAL: return &cr.ap_central;
        case FMC_EVAL_PERIPHERAL: return &cr.ap_peripheral;
    }
    return nullptr;
}

}  // namespace

extern "C" {

const char* fmc_version(void) { return "0.1.0"; }

const char* fmc_status_name(fmc_status status) {
    switch (status) {
        case FMC_OK: return "ok";
        case FMC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case FMC_ERR_DOMAIN: return "domain error";
        case FMC_ERR_PARSE: return "parse error";
        case FMC_ERR_IO: return "io error";
        case FMC_ERR_NO_RESULT: return "no result";
        case FMC_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* fmc_last_error(void) { return g_last_error.c_str(); }

/* ---- camera ------------------------------------------------------------ */

fmc_status fmc_camera_create(const double k[4], double cx, double cy, int width, int height,
                             double theta_max_rad, fmc_camera** out) {
    if (!k || !out) return invalid("fmc_camera_create: null pointer");
    return guarded([&] {
        *out = new fmc_camera{
            fmc::FisheyeIntrinsics({k[0], k[1], k[2], k[3]}, cx, cy, width, height, theta_max_rad)};
    });
}

fmc_status fmc_camera_from_json(const char* json_text, fmc_camera** out) {
    if (!json_text || !out) return invalid("fmc_camera_from_json: null pointer");
    return guarded([&] { *out = new fmc_camera{fmc::load_calibration_text(json_text)}; });
}

fmc_status fmc_camera_from_json_file(const char* path, fmc_camera** out) {
    if (!path || !out) return invalid("fmc_camera_from_json_file: null pointer");
    return guarded([&] { *out = new fmc_camera{fmc::load_calibration_file(path)}; });
}

fmc_status fmc_camera_to_json(const fmc_camera* cam, char* buffer, size_t buffer_size,
                              size_t* needed) {
    if (!cam) return invalid("fmc_camera_to_json: null camera");
    return guarded([&] {
        const std::string text = fmc::calibration_to_json(cam->intr);
        if (needed) *needed = text.size() + 1;
        if (buffer && buffer_size > 0) {
            const size_t n = std::min(buffer_size - 1, text.size());
            std::memcpy(buffer, text.data(), n);
            buffer[n] = '\0';
        }
    });
}

void fmc_camera_destroy(fmc_camera* cam) { delete cam; }

int fmc_camera_width(const fmc_camera* cam) { return cam ? cam->intr.width() : 0; }
int fmc_camera_height(const fmc_camera* cam) { return cam ? cam->intr.height() : 0; }
double fmc_camera_theta_max(const fmc_camera* cam) { return cam ? cam->intr.theta_max() : 0.0; }
double fmc_camera_rho_max(const fmc_camera* cam) { return cam ? cam->intr.rho_max() : 0.0; }

fmc_status fmc_camera_theta_to_rho(const fmc_camera* cam, double theta, double* rho) {
    if (!cam || !rho) return invalid("fmc_camera_theta_to_rho: null pointer");
    return guarded([&] { *rho = cam->intr.theta_to_rho(theta); });
}

fmc_status fmc_camera_rho_to_theta(const fmc_camera* cam, double rho, double* theta) {
    if (!cam || !theta) return invalid("fmc_camera_rho_to_theta: null pointer");
    return guarded([&] { *theta = cam->intr.rho_to_theta(rho); });
}

fmc_status fmc_camera_project(const fmc_camera* cam, const double dir[3], double uv[2],
                              int* valid) {
    if (!cam || !dir || !uv) return invalid("fmc_camera_project: null pointer");
    return guarded([&] {
        bool ok = false;
        const fmc::PixelCoord px = cam->intr.project({dir[0], dir[1], dir[2]}, &ok);
        uv[0] = px.u;
        uv[1] = px.v;
        if (valid) *valid = ok ? 1 : 0;
    });
}

fmc_status fmc_camera_unproject(const fmc_camera* cam, double u, double v, double dir[3]) {
    if (!cam || !dir) return invalid("fmc_camera_unproject: null pointer");
    return guarded([&] {
        const fmc::Vec3 d = cam->intr.unproject({u, v});
        dir[0] = d.x;
        dir[1] = d.y;
        dir[2] = d.z;
    });
}

/* ---- pose -------------------------------------------------------------- */

void fmc_pose_identity(fmc_pose* out) {
    if (!out) return;
    from_pose(fmc::Pose::identity(), out);
}

fmc_status fmc_pose_compose(const fmc_pose* a, const fmc_pose* b, fmc_pose* out) {
    if (!a || !b || !out) return invalid("fmc_pose_compose: null pointer");
    return guarded([&] { from_pose(fmc::compose(to_pose(*a), to_pose(*b)), out); });
}

fmc_status fmc_pose_invert(const fmc_pose* a, fmc_pose* out) {
    if (!a || !out) return invalid("fmc_pose_invert: null pointer");
    return guarded([&] { from_pose(fmc::invert(to_pose(*a)), out); });
}

fmc_status fmc_vehicle_motion_pose(double speed_mps, double yaw_rate_dps, double dt_s,
                                   fmc_pose* out) {
    if (!out) return invalid("fmc_vehicle_motion_pose: null pointer");
    return guarded([&] {
        from_pose(fmc::vehicle_motion_pose({speed_mps, yaw_rate_dps, dt_s}), out);
    });
}

fmc_status fmc_relative_camera_pose(const fmc_pose* vehicle_motion, const fmc_pose* cam_to_vehicle,
                                    fmc_pose* out) {
    if (!vehicle_motion || !cam_to_vehicle || !out) {
        return invalid("fmc_relative_camera_pose: null pointer");
    }
    return guarded([&] {
        from_pose(fmc::relative_camera_pose(to_pose(*vehicle_motion), to_pose(*cam_to_vehicle)),
                  out);
    });
}

fmc_status fmc_relative_pose_from_json_file(const char* path, int invert_extrinsics,
                                            fmc_pose* out) {
    if (!path || !out) return invalid("fmc_relative_pose_from_json_file: null pointer");
    return guarded([&] {
        const fmc::MotionFile motion = fmc::load_motion_file(path);
        from_pose(fmc::relative_pose_from_motion(motion, invert_extrinsics != 0), out);
    });
}

/* ---- images ------------------------------------------------------------ */

fmc_status fmc_image_create(int width, int height, int channels, fmc_image** out) {
    if (!out) return invalid("fmc_image_create: null pointer");
    return guarded([&] { *out = new fmc_image{fmc::Image8(width, height, channels)}; });
}

fmc_status fmc_image_read(const char* path, fmc_image** out) {
    if (!path || !out) return invalid("fmc_image_read: null pointer");
    return guarded([&] { *out = new fmc_image{fmc::read_image(path)}; });
}

fmc_status fmc_image_write(const fmc_image* img, const char* path) {
    if (!img || !path) return invalid("fmc_image_write: null pointer");
    return guarded([&] { fmc::write_image(img->img, path); });
}

int fmc_image_width(const fmc_image* img) { return img ? img->img.width : 0; }
int fmc_image_height(const fmc_image* img) { return img ? img->img.height : 0; }
int fmc_image_channels(const fmc_image* img) { return img ? img->img.channels : 0; }
uint8_t* fmc_image_data(fmc_image* img) { return img ? img->img.data.data() : nullptr; }
const uint8_t* fmc_image_data_const(const fmc_image* img) {
    return img ? img->img.data.data() : nullptr;
}

fmc_status fmc_image_to_gray(const fmc_image* img, fmc_image** out) {
    if (!img || !out) return invalid("fmc_image_to_gray: null pointer");
    return guarded([&] { *out = new fmc_image{fmc::to_gray(img->img)}; });
}

void fmc_image_destroy(fmc_image* img) { delete img; }

fmc_status fmc_mse(const fmc_image* a, const fmc_image* b, double* out) {
    if (!a || !b || !out) return invalid("fmc_mse: null pointer");
    return guarded([&] {
        if (a->img.width != b->img.width || a->img.height != b->img.height ||
            a->img.channels != b->img.channels) {
            throw fmc::InvalidArgument("fmc_mse: image dimensions differ");
        }
        double acc = 0.0;
        for (size_t i = 0; i < a->img.data.size(); ++i) {
            const double d = static_cast<double>(a->img.data[i]) - b->img.data[i];
            acc += d * d;
        }
        *out = acc / static_cast<double>(a->img.data.size());
    });
}

/* ---- yuv ---------------------------------------------------------------- */

fmc_status fmc_rgb_to_yuv420(const fmc_image* rgb, fmc_yuv420** out) {
    if (!rgb || !out) return invalid("fmc_rgb_to_yuv420: null pointer");
    return guarded([&] { *out = new fmc_yuv420{fmc::rgb_to_yuv420(rgb->img)}; });
}

fmc_status fmc_yuv420_to_rgb(const fmc_yuv420* yuv, fmc_image** out) {
    if (!yuv || !out) return invalid("fmc_yuv420_to_rgb: null pointer");
    return guarded([&] { *out = new fmc_image{fmc::yuv420_to_rgb(yuv->yuv)}; });
}

const uint8_t* fmc_yuv420_plane(const fmc_yuv420* yuv, int plane, int* width, int* height) {
    if (!yuv) return nullptr;
    const int w = yuv->yuv.width;
    const int h = yuv->yuv.height;
    switch (plane) {
        case 0:
            if (width) *width = w;
            if (height) *height = h;
            return yuv->yuv.y.data();
        case 1:
            if (width) *width = w / 2;
            if (height) *height = h / 2;
            return yuv->yuv.u.data();
        case 2:
            if (width) *width = w / 2;
            if (height) *height = h / 2;
            return yuv->yuv.v.data();
        default:
            return nullptr;
    }
}

size_t fmc_yuv420_byte_count(const fmc_yuv420* yuv) { return yuv ? yuv->yuv.byte_count() : 0; }

void fmc_yuv420_destroy(fmc_yuv420* yuv) { delete yuv; }

/* ---- compression --------------------------------------------------------- */

fmc_status fmc_compression_ratio(uint64_t raw_bytes, uint64_t compressed_bytes, double* cr) {
    if (!cr) return invalid("fmc_compression_ratio: null pointer");
    return guarded([&] { *cr = fmc::make_compression_record(raw_bytes, compressed_bytes).cr; });
}

/* ---- epipolar ------------------------------------------------------------ */

fmc_status fmc_depths_inverse_uniform(int count, double min_depth, double max_depth,
                                      int include_infinity, double* depths) {
    if (!depths) return invalid("fmc_depths_inverse_uniform: null pointer");
    return guarded([&] {
        const auto d =
            fmc::DepthCandidates::inverse_uniform(count, min_depth, max_depth, include_infinity != 0);
        for (size_t i = 0; i < d.size(); ++i) depths[i] = d[i];
    });
}

fmc_status fmc_epipole_curve(const fmc_camera* cam, const fmc_pose* relpose, double u, double v,
                             const double* depths, int n_depths, double* out_uv,
                             int32_t* out_valid) {
    if (!cam || !relpose || !depths || !out_uv) return invalid("fmc_epipole_curve: null pointer");
    return guarded([&] {
        const fmc::DepthCandidates d(std::vector<double>(depths, depths + n_depths));
        const auto curve = fmc::epipole_curve(cam->intr, to_pose(*relpose), {u, v}, d);
        for (size_t i = 0; i < curve.size(); ++i) {
            out_uv[2 * i] = curve[i].first.u;
            out_uv[2 * i + 1] = curve[i].first.v;
            if (out_valid) out_valid[i] = curve[i].second ? 1 : 0;
        }
    });
}

fmc_status fmc_epipole_table_build(const fmc_camera* cam, const fmc_pose* relpose, int block_size,
                                   const double* depths, int n_depths, fmc_epipole_table** out) {
    if (!cam || !relpose || !depths || !out) return invalid("fmc_epipole_table_build: null pointer");
    return guarded([&] {
        const fmc::DepthCandidates d(std::vector<double>(depths, depths + n_depths));
        *out = new fmc_epipole_table{
            fmc::build_epipole_table(cam->intr, to_pose(*relpose), block_size, d)};
    });
}

int fmc_epipole_table_rows(const fmc_epipole_table* table) {
    return table ? table->table.grid_rows() : 0;
}
int fmc_epipole_table_cols(const fmc_epipole_table* table) {
    return table ? table->table.grid_cols() : 0;
}
int fmc_epipole_table_depth_count(const fmc_epipole_table* table) {
    return table ? table->table.depth_count() : 0;
}

fmc_status fmc_epipole_table_mv(const fmc_epipole_table* table, int row, int col, int depth_index,
                                double mv[2], int* valid) {
    if (!table || !mv) return invalid("fmc_epipole_table_mv: null pointer");
    return guarded([&] {
        const fmc::Vec2& v = table->table.mv(row, col, depth_index);
        mv[0] = v.x;
        mv[1] = v.y;
        if (valid) *valid = table->table.valid(row, col, depth_index) ? 1 : 0;
    });
}

fmc_status fmc_epipole_table_candidate_mvs(const fmc_epipole_table* table, int row, int col,
                                           int depth_index, double mv0[2], double mv1[2],
                                           double mv2[2]) {
    if (!table || !mv0 || !mv1 || !mv2) {
        return invalid("fmc_epipole_table_candidate_mvs: null pointer");
    }
    bool available = false;
    const fmc_status st = guarded([&] {
        const auto mvs = fmc::candidate_mvs(table->table, row, col, depth_index);
        if (mvs) {
            available = true;
            mv0[0] = (*mvs)[0].x;
            mv0[1] = (*mvs)[0].y;
            mv1[0] = (*mvs)[1].x;
            mv1[1] = (*mvs)[1].y;
            mv2[0] = (*mvs)[2].x;
            mv2[1] = (*mvs)[2].y;
        }
    });
    if (st != FMC_OK) return st;
    if (!available) {
        set_error("candidate unavailable: a block corner is invalid at this depth");
        return FMC_ERR_NO_RESULT;
    }
    return FMC_OK;
}

void fmc_epipole_table_destroy(fmc_epipole_table* table) { delete table; }

/* ---- prediction ----------------------------------------------------------- */

void fmc_predict_opts_default(fmc_predict_opts* opts) {
    if (!opts) return;
    opts->block_size = 16;
    opts->subblock_size = 4;
    opts->include_zero_mv = 1;
    opts->four_param = 0;
    opts->num_threads = 0;
}

fmc_status fmc_predict_frame(const fmc_image* ref, const fmc_image* target, const fmc_camera* cam,
                             const fmc_pose* relpose, const double* depths, int n_depths,
                             const fmc_predict_opts* opts, fmc_prediction** out) {
    if (!ref || !target || !cam || !relpose || !depths || !out) {
        return invalid("fmc_predict_frame: null pointer");
    }
    return guarded([&] {
        fmc_predict_opts defaults;
        fmc_predict_opts_default(&defaults);
        const fmc_predict_opts* o = opts ? opts : &defaults;
        fmc::PredictOptions options;
        options.block_size = o->block_size;
        options.subblock_size = o->subblock_size;
        options.include_zero_mv = o->include_zero_mv != 0;
        options.four_param = o->four_param != 0;
        options.num_threads = o->num_threads;
        const fmc::DepthCandidates d(std::vector<double>(depths, depths + n_depths));
        auto* pred = new fmc_prediction;
        try {
            pred->result = fmc::predict_frame(gray_frame_of(ref), gray_frame_of(target), cam->intr,
                                              to_pose(*relpose), d, options);
        } catch (...) {
            delete pred;
            throw;
        }
        pred->depth_map.assign(pred->result.depth_map.begin(), pred->result.depth_map.end());
        *out = pred;
    });
}

double fmc_prediction_frame_mse(const fmc_prediction* pred) {
    return pred ? pred->result.frame_mse : 0.0;
}
int fmc_prediction_block_rows(const fmc_prediction* pred) {
    return pred ? pred->result.block_rows : 0;
}
int fmc_prediction_block_cols(const fmc_prediction* pred) {
    return pred ? pred->result.block_cols : 0;
}
const int32_t* fmc_prediction_depth_map(const fmc_prediction* pred) {
    return pred ? pred->depth_map.data() : nullptr;
}
const double* fmc_prediction_block_mse(const fmc_prediction* pred) {
    return pred ? pred->result.block_mse.data() : nullptr;
}

fmc_status fmc_prediction_predicted_image(const fmc_prediction* pred, fmc_image** out) {
    if (!pred || !out) return invalid("fmc_prediction_predicted_image: null pointer");
    return guarded([&] { *out = image_from_frame(pred->result.predicted); });
}

fmc_status fmc_prediction_error_image(const fmc_prediction* pred, fmc_image** out) {
    if (!pred || !out) return invalid("fmc_prediction_error_image: null pointer");
    return guarded([&] { *out = image_from_frame(pred->result.error_image); });
}

void fmc_prediction_destroy(fmc_prediction* pred) { delete pred; }

/* ---- zonal ---------------------------------------------------------------- */

fmc_status fmc_box_set_create(fmc_box_set** out) {
    if (!out) return invalid("fmc_box_set_create: null pointer");
    return guarded([&] { *out = new fmc_box_set; });
}

fmc_status fmc_box_set_add(fmc_box_set* set, const char* image, int class_id, double x1, double y1,
                           double x2, double y2, double score) {
    if (!set || !image) return invalid("fmc_box_set_add: null pointer");
    return guarded([&] {
        fmc::Box box;
        box.class_id = class_id;
        box.x1 = x1;
        box.y1 = y1;
        box.x2 = x2;
        box.y2 = y2;
        box.score = score < 0.0 ? -1.0 : score;
        set->set.add(image, box);
    });
}

fmc_status fmc_box_set_load_jsonl(const char* path, int with_scores, fmc_box_set** out) {
    if (!path || !out) return invalid("fmc_box_set_load_jsonl: null pointer");
    return guarded([&] {
        *out = new fmc_box_set{fmc::load_boxes_jsonl_file(path, with_scores != 0)};
    });
}

size_t fmc_box_set_size(const fmc_box_set* set) { return set ? set->set.size() : 0; }

void fmc_box_set_destroy(fmc_box_set* set) { delete set; }

namespace {

fmc::ZoneSpec to_zone(const fmc_zone_spec& z) {
    switch (z.variant) {
        case FMC_ZONE_CIRCLE:
            return fmc::ZoneSpec::circle(z.frame_width, z.frame_height, z.fraction);
        case FMC_ZONE_ANNULUS:
            return fmc::ZoneSpec::annulus(z.frame_width, z.frame_height, z.inner, z.outer);
        case FMC_ZONE_ELLIPSE_UNION:
            return fmc::ZoneSpec::ellipse_union(
                z.frame_width, z.frame_height,
                {z.e1[0], z.e1[1], z.e1[2], z.e1[3]},
                {z.e2[0], z.e2[1], z.e2[2], z.e2[3]});
        default:
            throw fmc::InvalidArgument("zone: unknown variant");
    }
}

}  // namespace

fmc_status fmc_zone_circle(int frame_width, int frame_height, double fraction,
                           fmc_zone_spec* out) {
    if (!out) return invalid("fmc_zone_circle: null pointer");
    return guarded([&] {
        fmc::ZoneSpec::circle(frame_width, frame_height, fraction);  // validates
        *out = fmc_zone_spec{};
        out->variant = FMC_ZONE_CIRCLE;
        out->frame_width = frame_width;
        out->frame_height = frame_height;
        out->fraction = fraction;
    });
}

fmc_status fmc_zone_annulus(int frame_width, int frame_height, double inner, double outer,
                            fmc_zone_spec* out) {
    if (!out) return invalid("fmc_zone_annulus: null pointer");
    return guarded([&] {
        fmc::ZoneSpec::annulus(frame_width, frame_height, inner, outer);  // validates
        *out = fmc_zone_spec{};
        out->variant = FMC_ZONE_ANNULUS;
        out->frame_width = frame_width;
        out->frame_height = frame_height;
        out->inner = inner;
        out->outer = outer;
    });
}

fmc_status fmc_zone_ellipse_union(int frame_width, int frame_height, const double e1[4],
                                  const double e2[4], fmc_zone_spec* out) {
    if (!e1 || !e2 || !out) return invalid("fmc_zone_ellipse_union: null pointer");
    return guarded([&] {
        fmc::ZoneSpec::ellipse_union(frame_width, frame_height, {e1[0], e1[1], e1[2], e1[3]},
                                     {e2[0], e2[1], e2[2], e2[3]});  // validates
        *out = fmc_zone_spec{};
        out->variant = FMC_ZONE_ELLIPSE_UNION;
        out->frame_width = frame_width;
        out->frame_height = frame_height;
        for (int i = 0; i < 4; ++i) {
            out->e1[i] = e1[i];
            out->e2[i] = e2[i];
        }
    });
}

fmc_status fmc_zone_of(const fmc_zone_spec* zone, double x1, double y1, double x2, double y2,
                       int* central) {
    if (!zone || !central) return invalid("fmc_zone_of: null pointer");
    return guarded([&] {
        fmc::Box box;
        box.x1 = x1;
        box.y1 = y1;
        box.x2 = x2;
        box.y2 = y2;
        box.validate();
        *central = fmc::zone_of_is_central(box, to_zone(*zone)) ? 1 : 0;
    });
}

fmc_status fmc_iou(const double a[4], const double b[4], double* out) {
    if (!a || !b || !out) return invalid("fmc_iou: null pointer");
    return guarded([&] {
        fmc::Box ba, bb;
        ba.x1 = a[0];
        ba.y1 = a[1];
        ba.x2 = a[2];
        ba.y2 = a[3];
        bb.x1 = b[0];
        bb.y1 = b[1];
        bb.x2 = b[2];
        bb.y2 = b[3];
        ba.validate();
        bb.validate();
        *out = fmc::iou(ba, bb);
    });
}

fmc_status fmc_zonal_map(const fmc_box_set* ground_truth, const fmc_box_set* detections,
                         const fmc_zone_spec* zone, double iou_threshold, fmc_eval_report** out) {
    if (!ground_truth || !detections || !zone || !out) {
        return invalid("fmc_zonal_map: null pointer");
    }
    return guarded([&] {
        *out = new fmc_eval_report{
            fmc::zonal_map(ground_truth->set, detections->set, to_zone(*zone), iou_threshold)};
    });
}

int fmc_eval_report_class_count(const fmc_eval_report* report) {
    return report ? static_cast<int>(report->report.per_class.size()) : 0;
}

int fmc_eval_report_class_id(const fmc_eval_report* report, int index) {
    if (!report || index < 0 || index >= fmc_eval_report_class_count(report)) return -1;
    return report->report.per_class[static_cast<size_t>(index)].class_id;
}

namespace {

const std::optional<double>* class_ap_of(const fmc::ClassReport& cr, fmc_eval_zone zone) {
    switch (zone) {
        case FMC_EVAL_FULL: return &cr.ap_full;
        case FMC_EVAL_CENTRAL: return &cr.ap_central;
        case FMC_EVAL_PERIPHERAL: return &cr.ap_peripheral;
    }
    return nullptr;
}

}  // namespace

fmc_status fmc_eval_report_class_ap(const fmc_eval_report* report, int index, fmc_eval_zone zone,
                                    double* ap) {
    if (!report || !ap) return invalid("fmc_eval_report_class_ap: null pointer");
    if (index < 0 || index >= fmc_eval_report_class_count(report)) {
        return invalid("fmc_eval_report_class_ap: class index out of range");
    }
    const auto* value = class_ap_of(report->report.per_class[static_cast<size_t>(index)], zone);
    if (!value) return invalid("fmc_eval_report_class_ap: unknown zone");
    if (!value->has_value()) {
        set_error("AP undefined: no ground truth for this class in this zone");
        return FMC_ERR_NO_RESULT;
    }
    *ap = **value;
    return FMC_OK;
}

fmc_status fmc_eval_report_map(const fmc_eval_report* report, fmc_eval_zone zone, double* map) {
    if (!report || !map) return invalid("fmc_eval_report_map: null pointer");
    const std::optional<double>* value = nullptr;
    switch (zone) {
        case FMC_EVAL_FULL: value = &report->report.map_full; break;
        case FMC_EVAL_CENTRAL: value = &report->report.map_central; break;
        case FMC_EVAL_PERIPHERAL: value = &report->report.map_peripheral; break;
    }
    if (!value) return invalid("fmc_eval_report_map: unknown zone");
    if (!value->has_value()) {
        set_error("mAP undefined: no ground truth in this zone");
        return FMC_ERR_NO_RESULT;
    }
    *map = **value;
    return FMC_OK;
}

int fmc_eval_report_gt_count(const fmc_eval_report* report, fmc_eval_zone zone) {
    if (!report) return 0;
    switch (zone) {
        case FMC_EVAL_FULL: return report->report.count_total;
        case FMC_EVAL_CENTRAL: return report->report.count_central;
        case FMC_EVAL_PERIPHERAL: return report->report.count_peripheral;
    }
    return 0;
}

int fmc_eval_report_class_gt_count(const fmc_eval_report* report, int index, fmc_eval_zone zone) {
    if (!report || index < 0 || index >= fmc_eval_report_class_count(report)) return 0;
    const auto& cr = report->report.per_class[static_cast<size_t>(index)];
    switch (zone) {
        case FMC_EVAL_FULL: return cr.gt_total;
        case FMC_EVAL_CENTRAL: return cr.gt_central;
        case FMC_EVAL_PERIPHERAL: return cr.gt_peripheral;
    }
    return 0;
}

void fmc_eval_report_destroy(fmc_eval_report* report) { delete report; }

/* ---- synthetic scenes -------------------------------------------------- */

void fmc_synth_params_default(fmc_synth_params* params) {
    if (!params) return;
    params->seed = 1;
    params->plane_depth_m = 10.0;
    params->texture = 0;
    params->texture_scale_m = 0.5;
}

fmc_status fmc_render_synthetic_pair(const fmc_camera* cam, const fmc_pose* relpose,
                                     const fmc_synth_params* params, fmc_image** ref,
                                     fmc_image** target) {
    if (!cam || !relpose || !ref || !target) {
        return invalid("fmc_render_synthetic_pair: null pointer");
    }
    return guarded([&] {
        fmc_synth_params defaults;
        fmc_synth_params_default(&defaults);
        const fmc_synth_params* p = params ? params : &defaults;
        fmc::SyntheticScene scene;
        scene.seed = p->seed;
        scene.plane_depth_m = p->plane_depth_m;
        scene.texture = p->texture == 1 ? fmc::SyntheticScene::Texture::Checker
                                        : fmc::SyntheticScene::Texture::Noise;
        scene.texture_scale_m = p->texture_scale_m;
        const fmc::SyntheticPair pair =
            fmc::render_synthetic_pair(cam->intr, to_pose(*relpose), scene);
        *ref = image_from_frame(pair.reference);
        *target = image_from_frame(pair.target);
    });
}

} /* extern "C" */
