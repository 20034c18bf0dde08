#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fisheyemc/camera.hpp"
#include "fisheyemc/geometry.hpp"

namespace fmc {

/// Strictly increasing list of candidate scene depths in meters along the
/// target-pixel ray. +infinity is allowed as the last entry and means
/// "translation ignored" (rotation-only correspondence).
class DepthCandidates {
  public:
    explicit DepthCandidates(std::vector<double> depths);

    /// count finite values spaced uniformly in inverse depth between
    /// min_depth and max_depth, optionally followed by +infinity.
    static DepthCandidates inverse_uniform(int count, double min_depth, double max_depth,
                                           bool include_infinity = true);

    const std::vector<double>& values() const { return depths_; }
    size_t size() const { return depths_.size(); }
    double operator[](size_t i) const { return depths_[i]; }

  private:
    std::vector<double> depths_;
};

/// Candidate motion vectors MV[row][column][depth] on the block-corner grid:
/// pixel displacement from the target-frame corner to its reference-frame
/// correspondence at that depth. Grid covers block top-left corners plus one
/// extra row and column, so (ceil(H/B)+1) x (ceil(W/B)+1) for block size B.
class EpipoleTable {
  public:
    EpipoleTable(int grid_rows, int grid_cols, int block_size, std::vector<double> depths);

    int grid_rows() const { return grid_rows_; }
    int grid_cols() const { return grid_cols_; }
    int block_size() const { return block_size_; }
    const std::vector<double>& depths() const { return depths_; }
    int depth_count() const { return static_cast<int>(depths_.size()); }

    const Vec2& mv(int row, int col, int depth_index) const { return mv_[index(row, col, depth_index)]; }
    bool valid(int row, int col, int depth_index) const { return valid_[index(row, col, depth_index)] != 0; }

    void set(int row, int col, int depth_index, const Vec2& mv, bool valid);

  private:
    size_t index(int row, int col, int depth_index) const;

    int grid_rows_, grid_cols_, block_size_;
    std::vector<double> depths_;
    std::vector<Vec2> mv_;
    std::vector<uint8_t> valid_;
};

/// Reference-frame correspondences of a target-frame pixel at each candidate
/// depth: P = d * unproject(px), P' = relpose(P), project(P'). An entry is
/// invalid when P' degenerates to the origin or its field angle exceeds
/// theta_max. Throws DomainError when px lies outside the lens domain.
std::vector<std::pair<PixelCoord, bool>> epipole_curve(const FisheyeIntrinsics& intr,
                                                       const Pose& relpose,
                                                       const PixelCoord& px_target,
                                                       const DepthCandidates& depths);

/// Precomputes the corner-grid displacement table for an image of the
/// calibration's size. Corners outside the lens image circle are flagged
/// invalid at every depth.
EpipoleTable build_epipole_table(const FisheyeIntrinsics& intr, const Pose& relpose,
                                 int block_size, const DepthCandidates& depths);

/// Control-point MVs for block (row, col) at one depth:
/// mv0 = top-left, mv1 = top-right, mv2 = bottom-left corner of the block.
/// nullopt when any of the three corners is invalid at that depth.
std::optional<std::array<Vec2, 3>> candidate_mvs(const EpipoleTable& table, int row, int col,
                                                 int depth_index);

}  // namespace fmc
