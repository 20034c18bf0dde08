/*
 * fisheyemc - motion-compensated temporal prediction for fisheye video and
 * zonal detection metrics.
 *
 * C API of the shared library. All objects returned through fmc_* handles are
 * owned by the caller and released with the matching *_destroy function.
 * Functions return FMC_OK on success; on failure fmc_last_error() gives a
 * thread-local diagnostic message.
 */
#ifndef FISHEYEMC_H
#define FISHEYEMC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FMC_API __declspec(dllexport)
#else
#define FMC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fmc_status {
    FMC_OK = 0,
    FMC_ERR_INVALID_ARGUMENT = 1, /* precondition violated */
    FMC_ERR_DOMAIN = 2,           /* value outside a mathematical domain */
    FMC_ERR_PARSE = 3,            /* malformed or schema-violating input */
    FMC_ERR_IO = 4,               /* filesystem / format failure */
    FMC_ERR_NO_RESULT = 5,        /* requested quantity is undefined here */
    FMC_ERR_INTERNAL = 6
} fmc_status;

FMC_API const char* fmc_version(void);
FMC_API const char* fmc_status_name(fmc_status status);
/* Message of the most recent failure on this thread ("" when none). */
FMC_API const char* fmc_last_error(void);

/* ---- fisheye camera model -------------------------------------------- */

typedef struct fmc_camera fmc_camera;

/* 4th-degree radial polynomial model rho(theta) = k1 t + k2 t^2 + k3 t^3 +
 * k4 t^4; rejects models that are not strictly increasing on [0, theta_max]. */
FMC_API fmc_status fmc_camera_create(const double k[4], double cx, double cy, int width,
                                     int height, double theta_max_rad, fmc_camera** out);
/* Calibration JSON: {"k":[4], "cx", "cy", "width", "height", "theta_max_deg"} */
FMC_API fmc_status fmc_camera_from_json(const char* json_text, fmc_camera** out);
FMC_API fmc_status fmc_camera_from_json_file(const char* path, fmc_camera** out);
FMC_API fmc_status fmc_camera_to_json(const fmc_camera* cam, char* buffer, size_t buffer_size,
                                      size_t* needed);
FMC_API void fmc_camera_destroy(fmc_camera* cam);

FMC_API int fmc_camera_width(const fmc_camera* cam);
FMC_API int fmc_camera_height(const fmc_camera* cam);
FMC_API double fmc_camera_theta_max(const fmc_camera* cam);
FMC_API double fmc_camera_rho_max(const fmc_camera* cam);

FMC_API fmc_status fmc_camera_theta_to_rho(const fmc_camera* cam, double theta, double* rho);
FMC_API fmc_status fmc_camera_rho_to_theta(const fmc_camera* cam, double rho, double* theta);
/* dir is a unit direction (x right, y down, z along the optical axis);
 * *valid is 0 when the field angle exceeds theta_max. */
FMC_API fmc_status fmc_camera_project(const fmc_camera* cam, const double dir[3], double uv[2],
                                      int* valid);
FMC_API fmc_status fmc_camera_unproject(const fmc_camera* cam, double u, double v, double dir[3]);

/* ---- poses and ego-motion -------------------------------------------- */

/* Rigid transform p_dst = R p_src + t; r is row-major. */
typedef struct fmc_pose {
    double r[9];
    double t[3];
} fmc_pose;

FMC_API void fmc_pose_identity(fmc_pose* out);
FMC_API fmc_status fmc_pose_compose(const fmc_pose* a, const fmc_pose* b, fmc_pose* out);
FMC_API fmc_status fmc_pose_invert(const fmc_pose* a, fmc_pose* out);

/* Planar arc model; yaw rate is in degrees/second, counter-clockwise
 * positive. Returns the vehicle frame at time t expressed in the frame at
 * t - dt. */
FMC_API fmc_status fmc_vehicle_motion_pose(double speed_mps, double yaw_rate_dps, double dt_s,
                                           fmc_pose* out);
/* cam_to_vehicle conjugation: maps camera points at time t into the camera
 * frame at t - dt. */
FMC_API fmc_status fmc_relative_camera_pose(const fmc_pose* vehicle_motion,
                                            const fmc_pose* cam_to_vehicle, fmc_pose* out);
/* Motion JSON: {"speed_mps", "yaw_rate_dps", "dt_s", "extrinsics":{"R","t"}} */
FMC_API fmc_status fmc_relative_pose_from_json_file(const char* path, int invert_extrinsics,
                                                    fmc_pose* out);

/* ---- images ----------------------------------------------------------- */

/* 8-bit image, interleaved, 1 (gray) or 3 (RGB) channels. */
typedef struct fmc_image fmc_image;

FMC_API fmc_status fmc_image_create(int width, int height, int channels, fmc_image** out);
/* PGM/PPM/PNG detected from magic bytes. */
FMC_API fmc_status fmc_image_read(const char* path, fmc_image** out);
/* Format chosen by extension: .pgm / .ppm / .png */
FMC_API fmc_status fmc_image_write(const fmc_image* img, const char* path);
FMC_API int fmc_image_width(const fmc_image* img);
FMC_API int fmc_image_height(const fmc_image* img);
FMC_API int fmc_image_channels(const fmc_image* img);
FMC_API uint8_t* fmc_image_data(fmc_image* img);
FMC_API const uint8_t* fmc_image_data_const(const fmc_image* img);
/* Rec.601 luma for RGB input; copies gray input. */
FMC_API fmc_status fmc_image_to_gray(const fmc_image* img, fmc_image** out);
FMC_API void fmc_image_destroy(fmc_image* img);

/* Mean squared error between two same-size single-channel images. */
FMC_API fmc_status fmc_mse(const fmc_image* a, const fmc_image* b, double* out);

/* ---- YUV 4:2:0 -------------------------------------------------------- */

typedef struct fmc_yuv420 fmc_yuv420;

/* BT.601 limited range, 2x2 box-averaged chroma; even dimensions required. */
FMC_API fmc_status fmc_rgb_to_yuv420(const fmc_image* rgb, fmc_yuv420** out);
/* Nearest-neighbor chroma upsampling; out-of-gamut pixels are clipped along
 * the chroma axis so the luma of a round trip is preserved within one code
 * level. */
FMC_API fmc_status fmc_yuv420_to_rgb(const fmc_yuv420* yuv, fmc_image** out);
/* plane: 0 = Y, 1 = U, 2 = V. */
FMC_API const uint8_t* fmc_yuv420_plane(const fmc_yuv420* yuv, int plane, int* width,
                                        int* height);
FMC_API size_t fmc_yuv420_byte_count(const fmc_yuv420* yuv);
FMC_API void fmc_yuv420_destroy(fmc_yuv420* yuv);

/* ---- compression accounting ------------------------------------------ */

/* cr = raw_bytes / compressed_bytes; both must be positive. */
FMC_API fmc_status fmc_compression_ratio(uint64_t raw_bytes, uint64_t compressed_bytes,
                                         double* cr);

/* ---- epipolar geometry ------------------------------------------------ */

/* Fills depths[count] (plus depths[count] = +inf when include_infinity) with
 * values uniformly spaced in inverse depth between min_depth and max_depth.
 * The buffer must hold count + (include_infinity ? 1 : 0) doubles. */
FMC_API fmc_status fmc_depths_inverse_uniform(int count, double min_depth, double max_depth,
                                              int include_infinity, double* depths);

/* Reference-frame correspondences of the target pixel (u, v) at each depth.
 * out_uv holds n_depths (u, v) pairs; out_valid may be NULL. */
FMC_API fmc_status fmc_epipole_curve(const fmc_camera* cam, const fmc_pose* relpose, double u,
                                     double v, const double* depths, int n_depths,
                                     double* out_uv, int32_t* out_valid);

typedef struct fmc_epipole_table fmc_epipole_table;

/* Candidate MV table on the block-corner grid:
 * (ceil(H/B)+1) x (ceil(W/B)+1) x n_depths. */
FMC_API fmc_status fmc_epipole_table_build(const fmc_camera* cam, const fmc_pose* relpose,
                                           int block_size, const double* depths, int n_depths,
                                           fmc_epipole_table** out);
FMC_API int fmc_epipole_table_rows(const fmc_epipole_table* table);
FMC_API int fmc_epipole_table_cols(const fmc_epipole_table* table);
FMC_API int fmc_epipole_table_depth_count(const fmc_epipole_table* table);
FMC_API fmc_status fmc_epipole_table_mv(const fmc_epipole_table* table, int row, int col,
                                        int depth_index, double mv[2], int* valid);
/* Control points of Eq-style affine candidates: mv0 = (row, col),
 * mv1 = (row, col+1), mv2 = (row+1, col). FMC_ERR_NO_RESULT when any corner
 * is invalid at this depth. */
FMC_API fmc_status fmc_epipole_table_candidate_mvs(const fmc_epipole_table* table, int row,
                                                   int col, int depth_index, double mv0[2],
                                                   double mv1[2], double mv2[2]);
FMC_API void fmc_epipole_table_destroy(fmc_epipole_table* table);

/* ---- epipole-guided prediction ---------------------------------------- */

typedef struct fmc_predict_opts {
    int block_size;      /* default 16 */
    int subblock_size;   /* default 4 */
    int include_zero_mv; /* default 1: add a zero-MV candidate per block */
    int four_param;      /* default 0: derive mv2 from mv0/mv1 */
    int num_threads;     /* default 0: hardware concurrency */
} fmc_predict_opts;

FMC_API void fmc_predict_opts_default(fmc_predict_opts* opts);

typedef struct fmc_prediction fmc_prediction;

/* ref/target must be single-channel images matching the calibration size. */
FMC_API fmc_status fmc_predict_frame(const fmc_image* ref, const fmc_image* target,
                                     const fmc_camera* cam, const fmc_pose* relpose,
                                     const double* depths, int n_depths,
                                     const fmc_predict_opts* opts, fmc_prediction** out);
FMC_API double fmc_prediction_frame_mse(const fmc_prediction* pred);
FMC_API int fmc_prediction_block_rows(const fmc_prediction* pred);
FMC_API int fmc_prediction_block_cols(const fmc_prediction* pred);
/* Row-major per-block arrays, block_rows x block_cols; depth -1 = zero-MV. */
FMC_API const int32_t* fmc_prediction_depth_map(const fmc_prediction* pred);
FMC_API const double* fmc_prediction_block_mse(const fmc_prediction* pred);
/* Quantized copies (rounded and clamped to 8 bit). */
FMC_API fmc_status fmc_prediction_predicted_image(const fmc_prediction* pred, fmc_image** out);
FMC_API fmc_status fmc_prediction_error_image(const fmc_prediction* pred, fmc_image** out);
FMC_API void fmc_prediction_destroy(fmc_prediction* pred);

/* ---- zonal detection metric ------------------------------------------- */

typedef struct fmc_box_set fmc_box_set;

FMC_API fmc_status fmc_box_set_create(fmc_box_set** out);
/* score < 0 marks a ground-truth box (no score). */
FMC_API fmc_status fmc_box_set_add(fmc_box_set* set, const char* image, int class_id, double x1,
                                   double y1, double x2, double y2, double score);
/* JSON-lines: {"image":"n", "class":1, "box":[x1,y1,x2,y2], "score":0.9}
 * with_scores selects detection (1) vs ground-truth (0) schema. */
FMC_API fmc_status fmc_box_set_load_jsonl(const char* path, int with_scores, fmc_box_set** out);
FMC_API size_t fmc_box_set_size(const fmc_box_set* set);
FMC_API void fmc_box_set_destroy(fmc_box_set* set);

typedef enum fmc_zone_variant {
    FMC_ZONE_CIRCLE = 0,
    FMC_ZONE_ELLIPSE_UNION = 1,
    FMC_ZONE_ANNULUS = 2
} fmc_zone_variant;

/* Circle / annulus sizes are fractions of the distance from the frame center
 * to the nearest image edge. Ellipses are {cx, cy, ax, ay} in pixels. */
typedef struct fmc_zone_spec {
    int variant; /* fmc_zone_variant */
    int frame_width;
    int frame_height;
    double fraction;      /* circle */
    double inner, outer;  /* annulus: center-distance fraction in [inner, outer) */
    double e1[4], e2[4];  /* ellipse union */
} fmc_zone_spec;

FMC_API fmc_status fmc_zone_circle(int frame_width, int frame_height, double fraction,
                                   fmc_zone_spec* out);
FMC_API fmc_status fmc_zone_annulus(int frame_width, int frame_height, double inner, double outer,
                                    fmc_zone_spec* out);
FMC_API fmc_status fmc_zone_ellipse_union(int frame_width, int frame_height, const double e1[4],
                                          const double e2[4], fmc_zone_spec* out);
/* *central = 1 when the box center lies in the central region. */
FMC_API fmc_status fmc_zone_of(const fmc_zone_spec* zone, double x1, double y1, double x2,
                               double y2, int* central);

FMC_API fmc_status fmc_iou(const double a[4], const double b[4], double* out);

typedef struct fmc_eval_report fmc_eval_report;
typedef enum fmc_eval_zone { FMC_EVAL_FULL = 0, FMC_EVAL_CENTRAL = 1, FMC_EVAL_PERIPHERAL = 2 } fmc_eval_zone;

/* Full / central / peripheral AP per class and their means. Ground truth must
 * be non-empty. */
FMC_API fmc_status fmc_zonal_map(const fmc_box_set* ground_truth, const fmc_box_set* detections,
                                 const fmc_zone_spec* zone, double iou_threshold,
                                 fmc_eval_report** out);
FMC_API int fmc_eval_report_class_count(const fmc_eval_report* report);
FMC_API int fmc_eval_report_class_id(const fmc_eval_report* report, int index);
/* FMC_ERR_NO_RESULT when the AP/mAP is undefined (no ground truth there). */
FMC_API fmc_status fmc_eval_report_class_ap(const fmc_eval_report* report, int index,
                                            fmc_eval_zone zone, double* ap);
FMC_API fmc_status fmc_eval_report_map(const fmc_eval_report* report, fmc_eval_zone zone,
                                       double* map);
/* Ground-truth boxes counted per zone; FULL gives the total. */
FMC_API int fmc_eval_report_gt_count(const fmc_eval_report* report, fmc_eval_zone zone);
FMC_API int fmc_eval_report_class_gt_count(const fmc_eval_report* report, int index,
                                           fmc_eval_zone zone);
FMC_API void fmc_eval_report_destroy(fmc_eval_report* report);

/* ---- synthetic scenes -------------------------------------------------- */

typedef struct fmc_synth_params {
    uint64_t seed;
    double plane_depth_m;
    int texture; /* 0 = smooth value noise, 1 = soft checkerboard */
    double texture_scale_m;
} fmc_synth_params;

FMC_API void fmc_synth_params_default(fmc_synth_params* params);

/* Renders a textured plane (z = plane_depth_m in the reference frame) from
 * the reference camera and from the camera displaced by relpose; relpose is
 * exactly the pose to hand to fmc_predict_frame. */
FMC_API fmc_status fmc_render_synthetic_pair(const fmc_camera* cam, const fmc_pose* relpose,
                                             const fmc_synth_params* params, fmc_image** ref,
                                             fmc_image** target);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FISHEYEMC_H */
