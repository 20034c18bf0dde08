#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fisheyemc/errors.hpp"

namespace fmc {

/// Axis-aligned box in pixels. score < 0 means "no score" (ground truth).
struct Box {
    int class_id = 0;
    double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;
    double score = -1.0;

    bool has_score() const { return score >= 0.0; }
    double center_x() const { return 0.5 * (x1 + x2); }
    double center_y() const { return 0.5 * (y1 + y2); }
    void validate() const;
};

/// One box record tied to an image name; names scope detection-to-ground-truth
/// matching in zonal_map.
struct BoxRecord {
    std::string image;
    Box box;
};

/// Boxes keyed by image name. Insertion order is preserved so evaluation is
/// deterministic.
class BoxSet {
  public:
    void add(const std::string& image, const Box& box);
    const std::vector<BoxRecord>& records() const { return records_; }
    size_t size() const { return records_.size(); }

  private:
    std::vector<BoxRecord> records_;
};

struct EllipseSpec {
    double cx = 0.0, cy = 0.0;  // center, pixels
    double ax = 0.0, ay = 0.0;  // semi-axes, pixels
};

/// Central-region geometry for the zonal split. Circle and annulus radii are
/// fractions of the distance from the zone center to the nearest image edge
/// (min(cx, cy, W-cx, H-cy)).
struct ZoneSpec {
    enum class Variant { Circle, EllipseUnion, Annulus };

    static ZoneSpec circle(int frame_width, int frame_height, double fraction);
    static ZoneSpec annulus(int frame_width, int frame_height, double inner, double outer);
    static ZoneSpec ellipse_union(int frame_width, int frame_height, const EllipseSpec& e1,
                                  const EllipseSpec& e2);

    Variant variant = Variant::Circle;
    int frame_width = 0, frame_height = 0;
    double cx = 0.0, cy = 0.0;    // circle/annulus center
    double fraction = 0.5;        // circle
    double inner = 0.0, outer = 0.0;  // annulus
    EllipseSpec e1, e2;           // ellipse union

    /// Distance from the zone center to the nearest image edge.
    double max_perpendicular_distance() const;
};

/// Central/peripheral membership of a box, decided by its center point.
/// Circle/ellipse boundaries are inclusive; the annulus selects center
/// distance fractions in [inner, outer).
bool zone_of_is_central(const Box& box, const ZoneSpec& zone);

/// Intersection-over-union of two boxes.
double iou(const Box& a, const Box& b);

struct ApInput {
    int image_id = 0;
    double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;
    double score = 0.0;  // detections only
};

/// Single-class average precision: detections sorted by descending score
/// (stable), greedily matched one-to-one per image to the unmatched ground
/// truth of highest IoU >= threshold; AP is the area under the
/// monotonized precision-recall curve (all-point interpolation).
/// nullopt when there is no ground truth.
std::optional<double> average_precision(const std::vector<ApInput>& detections,
                                        const std::vector<ApInput>& ground_truth,
                                        double iou_threshold);

struct ClassReport {
    int class_id = 0;
    std::optional<double> ap_full, ap_central, ap_peripheral;
    int gt_total = 0, gt_central = 0, gt_peripheral = 0;
};

struct EvalReport {
    std::vector<ClassReport> per_class;  // sorted by class id
    std::optional<double> map_full, map_central, map_peripheral;
    int count_total = 0, count_central = 0, count_peripheral = 0;  // ground-truth boxes
    double iou_threshold = 0.5;
};

/// Three evaluations (full / central / peripheral) of per-class AP and their
/// means. Boxes enter a zone evaluation only when their center lies in that
/// zone, for detections and ground truth alike. Classes without ground truth
/// in a zone are excluded from that zone's mean. Throws DomainError when the
/// ground truth is empty.
EvalReport zonal_map(const BoxSet& ground_truth, const BoxSet& detections, const ZoneSpec& zone,
                     double iou_threshold = 0.5);

}  // namespace fmc
