#include "fisheyemc/predictor.hpp"

#include <algorithm>
#include <cmath>

#include "fisheyemc/parallel.hpp"

namespace fmc {

namespace {

GrayFrame pad_to_multiple(const GrayFrame& f, int block_size) {
    const int wp = (f.width() + block_size - 1) / block_size * block_size;
    const int hp = (f.height() + block_size - 1) / block_size * block_size;
    if (wp == f.width() && hp == f.height()) return f;
    GrayFrame out(wp, hp);
    for (int y = 0; y < hp; ++y) {
        const int sy = std::min(y, f.height() - 1);
        for (int x = 0; x < wp; ++x) {
            out.at(x, y) = f.at(std::min(x, f.width() - 1), sy);
        }
    }
    return out;
}

// SSD of a candidate block buffer against the target, restricted to pixels
// that exist in the (unpadded) target frame.
double block_ssd(const std::vector<double>& candidate, const BlockSpec& block,
                 const GrayFrame& target) {
    double acc = 0.0;
    const int y_end = std::min(block.y0 + block.size, target.height());
    const int x_end = std::min(block.x0 + block.size, target.width());
    for (int y = block.y0; y < y_end; ++y) {
        for (int x = block.x0; x < x_end; ++x) {
            const double d =
                candidate[static_cast<size_t>(y - block.y0) * block.size + (x - block.x0)] -
                target.at(x, y);
            acc += d * d;
        }
    }
    return acc;
}

void fill_block_from_mvs(const GrayFrame& ref, const BlockSpec& block,
                         const std::vector<Vec2>& subblock_mvs, int subblock_size,
                         std::vector<double>& out) {
    const int nsb = block.size / subblock_size;
    out.resize(static_cast<size_t>(block.size) * block.size);
    for (int i = 0; i < nsb; ++i) {
        for (int j = 0; j < nsb; ++j) {
            const Vec2& mv = subblock_mvs[static_cast<size_t>(i) * nsb + j];
            for (int dy = 0; dy < subblock_size; ++dy) {
                const int y = block.y0 + i * subblock_size + dy;
                for (int dx = 0; dx < subblock_size; ++dx) {
                    const int x = block.x0 + j * subblock_size + dx;
                    out[static_cast<size_t>(y - block.y0) * block.size + (x - block.x0)] =
                        ref.sample_bilinear_clamped(x + mv.x, y + mv.y);
                }
            }
        }
    }
}

void copy_block_colocated(const GrayFrame& ref, const BlockSpec& block,
                          std::vector<double>& out) {
    out.resize(static_cast<size_t>(block.size) * block.size);
    for (int dy = 0; dy < block.size; ++dy) {
        const int y = std::min(block.y0 + dy, ref.height() - 1);
        for (int dx = 0; dx < block.size; ++dx) {
            const int x = std::min(block.x0 + dx, ref.width() - 1);
            out[static_cast<size_t>(dy) * block.size + dx] = ref.at(x, y);
        }
    }
}

}  // namespace

std::vector<Vec2> affine_subblock_mvs(const Vec2& mv0, const Vec2& mv1, const Vec2& mv2,
                                      int block_size, int subblock_size) {
    if (subblock_size < 1 || block_size < 1 || block_size % subblock_size != 0) {
        throw InvalidArgument("affine_subblock_mvs: subblock size must divide block size");
    }
    const int nsb = block_size / subblock_size;
    const double s = static_cast<double>(block_size);
    std::vector<Vec2> out(static_cast<size_t>(nsb) * nsb);
    for (int i = 0; i < nsb; ++i) {
        const double y = (i + 0.5) * subblock_size;
        for (int j = 0; j < nsb; ++j) {
            const double x = (j + 0.5) * subblock_size;
            out[static_cast<size_t>(i) * nsb + j] = {
                mv0.x + (mv1.x - mv0.x) * x / s + (mv2.x - mv0.x) * y / s,
                mv0.y + (mv1.y - mv0.y) * x / s + (mv2.y - mv0.y) * y / s};
        }
    }
    return out;
}

Vec2 derive_four_param_mv2(const Vec2& mv0, const Vec2& mv1) {
    const Vec2 d{mv1.x - mv0.x, mv1.y - mv0.y};
    return {mv0.x - d.y, mv0.y + d.x};
}

void predict_block(const GrayFrame& ref, const BlockSpec& block,
                   const std::vector<Vec2>& subblock_mvs, GrayFrame& dest) {
    const int nsb2 = static_cast<int>(subblock_mvs.size());
    int nsb = 1;
    while (nsb * nsb < nsb2) ++nsb;
    if (nsb * nsb != nsb2 || block.size % nsb != 0) {
        throw InvalidArgument("predict_block: sub-block MV grid does not match block size");
    }
    const int subblock_size = block.size / nsb;
    std::vector<double> buf;
    fill_block_from_mvs(ref, block, subblock_mvs, subblock_size, buf);
    const int y_end = std::min(block.y0 + block.size, dest.height());
    const int x_end = std::min(block.x0 + block.size, dest.width());
    for (int y = block.y0; y < y_end; ++y) {
        for (int x = block.x0; x < x_end; ++x) {
            dest.at(x, y) = buf[static_cast<size_t>(y - block.y0) * block.size + (x - block.x0)];
        }
    }
}

GrayFrame zero_motion_predict(const GrayFrame& ref) { return ref; }

BlockSearchResult best_depth_for_block(const GrayFrame& ref, const GrayFrame& target,
                                       const BlockSpec& block, const EpipoleTable& table,
                                       const PredictOptions& opts, GrayFrame& dest) {
    std::vector<double> candidate;
    std::vector<double> best_buf;
    double best_ssd = 0.0;
    int best_index = -1;
    bool have_best = false;

    for (int i = 0; i < table.depth_count(); ++i) {
        const auto mvs = candidate_mvs(table, block.r, block.c, i);
        if (!mvs) continue;
        Vec2 mv2 = (*mvs)[2];
        if (opts.four_param) mv2 = derive_four_param_mv2((*mvs)[0], (*mvs)[1]);
        const auto sub = affine_subblock_mvs((*mvs)[0], (*mvs)[1], mv2, block.size,
                                             opts.subblock_size);
        fill_block_from_mvs(ref, block, sub, opts.subblock_size, candidate);
        const double ssd = block_ssd(candidate, block, target);
        // Ascending depth order with <= keeps the largest depth on ties.
        if (!have_best || ssd <= best_ssd) {
            best_ssd = ssd;
            best_index = i;
            best_buf = candidate;
            have_best = true;
        }
    }

    if (opts.include_zero_mv || !have_best) {
        copy_block_colocated(ref, block, candidate);
        const double ssd = block_ssd(candidate, block, target);
        if (!have_best || ssd <= best_ssd) {
            best_ssd = ssd;
            best_index = -1;
            best_buf = candidate;
            have_best = true;
        }
    }

    const int y_end = std::min(block.y0 + block.size, dest.height());
    const int x_end = std::min(block.x0 + block.size, dest.width());
    for (int y = block.y0; y < y_end; ++y) {
        for (int x = block.x0; x < x_end; ++x) {
            dest.at(x, y) = best_buf[static_cast<size_t>(y - block.y0) * block.size + (x - block.x0)];
        }
    }
    return {best_index, best_ssd};
}

PredictionResult predict_frame(const GrayFrame& ref, const GrayFrame& target,
                               const FisheyeIntrinsics& intr, const Pose& relpose,
                               const DepthCandidates& depths, const PredictOptions& opts) {
    if (ref.width() != target.width() || ref.height() != target.height()) {
        throw InvalidArgument("predict_frame: reference and target dimensions differ");
    }
    if (intr.width() != ref.width() || intr.height() != ref.height()) {
        throw InvalidArgument("predict_frame: calibration does not match the frame dimensions");
    }
    if (opts.block_size < 1 || opts.subblock_size < 1 ||
        opts.block_size % opts.subblock_size != 0) {
        throw InvalidArgument("predict_frame: sub-block size must divide block size");
    }

    const int w = ref.width();
    const int h = ref.height();
    const int b = opts.block_size;
    const GrayFrame ref_padded = pad_to_multiple(ref, b);
    const int block_cols = ref_padded.width() / b;
    const int block_rows = ref_padded.height() / b;
    const int n_blocks = block_rows * block_cols;

    const EpipoleTable table = build_epipole_table(intr, relpose, b, depths);

    GrayFrame predicted_padded(ref_padded.width(), ref_padded.height());
    PredictionResult result;
    result.block_rows = block_rows;
    result.block_cols = block_cols;
    result.depth_map.assign(static_cast<size_t>(n_blocks), -1);
    result.block_mse.assign(static_cast<size_t>(n_blocks), 0.0);
    result.block_pixels.assign(static_cast<size_t>(n_blocks), 0);
    std::vector<double> block_ssds(static_cast<size_t>(n_blocks), 0.0);

    parallel_for(
        n_blocks,
        [&](int idx) {
            const int r = idx / block_cols;
            const int c = idx % block_cols;
            const BlockSpec block{r, c, c * b, r * b, b};
            const auto res = best_depth_for_block(ref_padded, target, block, table, opts,
                                                  predicted_padded);
            const int px = (std::min(block.x0 + b, w) - block.x0) *
                           (std::min(block.y0 + b, h) - block.y0);
            result.depth_map[static_cast<size_t>(idx)] = res.depth_index;
            block_ssds[static_cast<size_t>(idx)] = res.ssd;
            result.block_pixels[static_cast<size_t>(idx)] = px;
            result.block_mse[static_cast<size_t>(idx)] = res.ssd / px;
        },
        opts.num_threads);

    double total_ssd = 0.0;
    for (double s : block_ssds) total_ssd += s;
    result.frame_mse = total_ssd / (static_cast<double>(w) * h);

    result.predicted = GrayFrame(w, h);
    result.error_image = GrayFrame(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double p = predicted_padded.at(x, y);
            result.predicted.at(x, y) = p;
            result.error_image.at(x, y) = std::abs(p - target.at(x, y));
        }
    }
    return result;
}

}  // namespace fmc
