#pragma once

#include <vector>

#include "fisheyemc/epipolar.hpp"
#include "fisheyemc/frame.hpp"

namespace fmc {

struct BlockSpec {
    int r = 0;     // block row index
    int c = 0;     // block column index
    int x0 = 0;    // top-left pixel
    int y0 = 0;
    int size = 16;
};

struct PredictOptions {
    int block_size = 16;
    int subblock_size = 4;
    bool include_zero_mv = true;
    bool four_param = false;  // derive mv2 from mv0/mv1 by the 90-degree relation
    int num_threads = 0;      // <= 0: hardware concurrency
};

struct PredictionResult {
    GrayFrame predicted;
    GrayFrame error_image;          // per-pixel absolute error
    int block_rows = 0;
    int block_cols = 0;
    std::vector<int> depth_map;     // chosen depth index per block; -1 = zero-MV
    std::vector<double> block_mse;  // over the block's in-image pixels
    std::vector<int> block_pixels;  // in-image pixel count per block
    double frame_mse = 0.0;
};

/// Per-sub-block translation vectors of the 6-parameter locally affine model:
/// mv(x, y) = mv0 + (mv1 - mv0) x/S + (mv2 - mv0) y/S evaluated at sub-block
/// centers ((j+0.5) sb, (i+0.5) sb). Row-major, (S/sb)^2 entries.
std::vector<Vec2> affine_subblock_mvs(const Vec2& mv0, const Vec2& mv1, const Vec2& mv2,
                                      int block_size, int subblock_size = 4);

/// For the 4-parameter model: mv2 implied by mv0/mv1 through the rotation of
/// the corner offset (VVC-style), for square blocks.
Vec2 derive_four_param_mv2(const Vec2& mv0, const Vec2& mv1);

/// Fills dest's block region by copying each sub-block from ref at its
/// translated position with bilinear interpolation; reads are edge-clamped.
void predict_block(const GrayFrame& ref, const BlockSpec& block,
                   const std::vector<Vec2>& subblock_mvs, GrayFrame& dest);

/// The zero-motion baseline: the reference frame itself.
GrayFrame zero_motion_predict(const GrayFrame& ref);

struct BlockSearchResult {
    int depth_index = -1;  // -1 = zero-MV
    double ssd = 0.0;      // over the block's in-image pixels
};

/// Evaluates every available depth candidate (plus the zero-MV candidate when
/// enabled) and keeps the SSD argmin; ties go to the larger depth, with
/// zero-MV treated as largest. Writes the winning prediction into dest.
/// When no candidate is available, falls back to zero-MV.
BlockSearchResult best_depth_for_block(const GrayFrame& ref, const GrayFrame& target,
                                       const BlockSpec& block, const EpipoleTable& table,
                                       const PredictOptions& opts, GrayFrame& dest);

/// Full-frame epipole-guided prediction: builds the corner MV table, searches
/// the best depth per block in parallel, and assembles the predicted frame,
/// error image, depth map and MSE statistics. Frames are padded to a block
/// multiple by edge replication; SSD/MSE only counts in-image pixels.
PredictionResult predict_frame(const GrayFrame& ref, const GrayFrame& target,
                               const FisheyeIntrinsics& intr, const Pose& relpose,
                               const DepthCandidates& depths, const PredictOptions& opts = {});

}  // namespace fmc
