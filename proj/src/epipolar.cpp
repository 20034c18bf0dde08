#include "fisheyemc/epipolar.hpp"

#include <cmath>
#include <limits>

namespace fmc {

DepthCandidates::DepthCandidates(std::vector<double> depths) : depths_(std::move(depths)) {
    if (depths_.empty()) throw InvalidArgument("depth candidates: list must be non-empty");
    double prev = 0.0;
    for (double d : depths_) {
        if (std::isnan(d) || d <= 0.0) {
            throw InvalidArgument("depth candidates: depths must be positive");
        }
        if (!(d > prev)) {
            throw InvalidArgument("depth candidates: depths must be strictly increasing");
        }
        prev = d;
    }
}

DepthCandidates DepthCandidates::inverse_uniform(int count, double min_depth, double max_depth,
                                                 bool include_infinity) {
    if (count < 1) throw InvalidArgument("depth candidates: count must be >= 1");
    if (!(min_depth > 0.0) || !(max_depth > min_depth) || !std::isfinite(max_depth)) {
        throw InvalidArgument("depth candidates: need 0 < min_depth < max_depth < inf");
    }
    std::vector<double> d;
    d.reserve(static_cast<size_t>(count) + (include_infinity ? 1 : 0));
    if (count == 1) {
        d.push_back(min_depth);
    } else {
        const double inv_min = 1.0 / max_depth;
        const double inv_max = 1.0 / min_depth;
        for (int i = 0; i < count; ++i) {
            // Descending inverse depth gives ascending depth.
            const double inv = inv_max + (inv_min - inv_max) * i / (count - 1);
            d.push_back(1.0 / inv);
        }
        d.front() = min_depth;
        d.back() = max_depth;
    }
    if (include_infinity) d.push_back(std::numeric_limits<double>::infinity());
    return DepthCandidates(std::move(d));
}

EpipoleTable::EpipoleTable(int grid_rows, int grid_cols, int block_size,
                           std::vector<double> depths)
    : grid_rows_(grid_rows),
      grid_cols_(grid_cols),
      block_size_(block_size),
      depths_(std::move(depths)) {
    if (grid_rows_ < 2 || grid_cols_ < 2) throw InvalidArgument("epipole table: grid too small");
    if (block_size_ < 1) throw InvalidArgument("epipole table: block size must be >= 1");
    if (depths_.empty()) throw InvalidArgument("epipole table: no depths");
    const size_t n = static_cast<size_t>(grid_rows_) * grid_cols_ * depths_.size();
    mv_.assign(n, Vec2{});
    valid_.assign(n, 0);
}

size_t EpipoleTable::index(int row, int col, int depth_index) const {
    if (row < 0 || row >= grid_rows_ || col < 0 || col >= grid_cols_ || depth_index < 0 ||
        depth_index >= depth_count()) {
        throw InvalidArgument("epipole table: index out of range");
    }
    return (static_cast<size_t>(row) * grid_cols_ + col) * depths_.size() + depth_index;
}

void EpipoleTable::set(int row, int col, int depth_index, const Vec2& mv, bool valid) {
    const size_t i = index(row, col, depth_index);
    mv_[i] = mv;
    valid_[i] = valid ? 1 : 0;
}

std::vector<std::pair<PixelCoord, bool>> epipole_curve(const FisheyeIntrinsics& intr,
                                                       const Pose& relpose,
                                                       const PixelCoord& px_target,
                                                       const DepthCandidates& depths) {
    const Vec3 ray = intr.unproject(px_target);
    std::vector<std::pair<PixelCoord, bool>> out;
    out.reserve(depths.size());
    for (double d : depths.values()) {
        Vec3 p_ref;
        if (std::isinf(d)) {
            // Infinite depth: translation has no effect on the direction.
            p_ref = relpose.apply_direction(ray);
        } else {
            p_ref = relpose.apply(ray * d);
        }
        const double n = p_ref.norm();
        if (!(n > 1e-12)) {
            out.emplace_back(PixelCoord{intr.cx(), intr.cy()}, false);
            continue;
        }
        bool valid = false;
        const PixelCoord px = intr.project(p_ref.normalized(), &valid);
        out.emplace_back(px, valid);
    }
    return out;
}

EpipoleTable build_epipole_table(const FisheyeIntrinsics& intr, const Pose& relpose,
                                 int block_size, const DepthCandidates& depths) {
    if (block_size < 1) throw InvalidArgument("build_epipole_table: block size must be >= 1");
    const int rows = (intr.height() + block_size - 1) / block_size + 1;
    const int cols = (intr.width() + block_size - 1) / block_size + 1;
    EpipoleTable table(rows, cols, block_size, depths.values());
    const int n = table.depth_count();
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const PixelCoord corner{static_cast<double>(c) * block_size,
                                    static_cast<double>(r) * block_size};
            if (!intr.in_image_circle(corner)) {
                for (int i = 0; i < n; ++i) table.set(r, c, i, Vec2{}, false);
                continue;
            }
            const auto curve = epipole_curve(intr, relpose, corner, depths);
            for (int i = 0; i < n; ++i) {
                const Vec2 mv{curve[i].first.u - corner.u, curve[i].first.v - corner.v};
                table.set(r, c, i, mv, curve[i].second);
            }
        }
    }
    return table;
}

std::optional<std::array<Vec2, 3>> candidate_mvs(const EpipoleTable& table, int row, int col,
                                                 int depth_index) {
    if (row < 0 || row + 1 >= table.grid_rows() || col < 0 || col + 1 >= table.grid_cols() ||
        depth_index < 0 || depth_index >= table.depth_count()) {
        throw InvalidArgument("candidate_mvs: block or depth index out of range");
    }
    if (!table.valid(row, col, depth_index) || !table.valid(row, col + 1, depth_index) ||
        !table.valid(row + 1, col, depth_index)) {
        return std::nullopt;
    }
    return std::array<Vec2, 3>{table.mv(row, col, depth_index), table.mv(row, col + 1, depth_index),
                               table.mv(row + 1, col, depth_index)};
}

}  // namespace fmc
