#include "fisheyemc/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fmc {

void Box::validate() const {
    if (!std::isfinite(x1) || !std::isfinite(y1) || !std::isfinite(x2) || !std::isfinite(y2)) {
        throw InvalidArgument("box: coordinates must be finite");
    }
    if (!(x2 > x1) || !(y2 > y1)) {
        throw InvalidArgument("box: requires x2 > x1 and y2 > y1");
    }
    if (has_score() && score > 1.0) {
        throw InvalidArgument("box: score must be in [0, 1]");
    }
}

void BoxSet::add(const std::string& image, const Box& box) {
    box.validate();
    records_.push_back({image, box});
}

ZoneSpec ZoneSpec::circle(int w, int h, double fraction) {
    if (w <= 0 || h <= 0) throw InvalidArgument("zone: frame size must be positive");
    if (!(fraction > 0.0)) throw InvalidArgument("zone: circle fraction must be > 0");
    ZoneSpec z;
    z.variant = Variant::Circle;
    z.frame_width = w;
    z.frame_height = h;
    z.cx = 0.5 * w;
    z.cy = 0.5 * h;
    z.fraction = fraction;
    return z;
}

ZoneSpec ZoneSpec::annulus(int w, int h, double inner, double outer) {
    if (w <= 0 || h <= 0) throw InvalidArgument("zone: frame size must be positive");
    if (!(inner >= 0.0) || !(outer > inner)) {
        throw InvalidArgument("zone: annulus requires 0 <= inner < outer");
    }
    ZoneSpec z;
    z.variant = Variant::Annulus;
    z.frame_width = w;
    z.frame_height = h;
    z.cx = 0.5 * w;
    z.cy = 0.5 * h;
    z.inner = inner;
    z.outer = outer;
    return z;
}

ZoneSpec ZoneSpec::ellipse_union(int w, int h, const EllipseSpec& e1, const EllipseSpec& e2) {
    if (w <= 0 || h <= 0) throw InvalidArgument("zone: frame size must be positive");
    if (!(e1.ax > 0.0) || !(e1.ay > 0.0) || !(e2.ax > 0.0) || !(e2.ay > 0.0)) {
        throw InvalidArgument("zone: ellipse semi-axes must be positive");
    }
    ZoneSpec z;
    z.variant = Variant::EllipseUnion;
    z.frame_width = w;
    z.frame_height = h;
    z.e1 = e1;
    z.e2 = e2;
    return z;
}

double ZoneSpec::max_perpendicular_distance() const {
    return std::min(std::min(cx, cy),
                    std::min(frame_width - cx, frame_height - cy));
}

namespace {

bool inside_ellipse(double x, double y, const EllipseSpec& e) {
    const double dx = (x - e.cx) / e.ax;
    const double dy = (y - e.cy) / e.ay;
    return dx * dx + dy * dy <= 1.0;
}

}  // namespace

bool zone_of_is_central(const Box& box, const ZoneSpec& zone) {
    const double x = box.center_x();
    const double y = box.center_y();
    switch (zone.variant) {
        case ZoneSpec::Variant::Circle: {
            const double radius = zone.fraction * zone.max_perpendicular_distance();
            return std::hypot(x - zone.cx, y - zone.cy) <= radius;
        }
        case ZoneSpec::Variant::Annulus: {
            const double f =
                std::hypot(x - zone.cx, y - zone.cy) / zone.max_perpendicular_distance();
            return f >= zone.inner && f < zone.outer;
        }
        case ZoneSpec::Variant::EllipseUnion:
            return inside_ellipse(x, y, zone.e1) || inside_ellipse(x, y, zone.e2);
    }
    throw InvalidArgument("zone: unknown variant");
}

double iou(const Box& a, const Box& b) {
    const double ix = std::max(0.0, std::min(a.x2, b.x2) - std::max(a.x1, b.x1));
    const double iy = std::max(0.0, std::min(a.y2, b.y2) - std::max(a.y1, b.y1));
    const double inter = ix * iy;
    const double uni = (a.x2 - a.x1) * (a.y2 - a.y1) + (b.x2 - b.x1) * (b.y2 - b.y1) - inter;
    return uni > 0.0 ? inter / uni : 0.0;
}

std::optional<double> average_precision(const std::vector<ApInput>& detections,
                                        const std::vector<ApInput>& ground_truth,
                                        double iou_threshold) {
    const size_t n_gt = ground_truth.size();
    if (n_gt == 0) return std::nullopt;
    if (detections.empty()) return 0.0;

    std::vector<size_t> order(detections.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return detections[a].score > detections[b].score;
    });

    auto box_of = [](const ApInput& r) {
        Box b;
        b.x1 = r.x1;
        b.y1 = r.y1;
        b.x2 = r.x2;
        b.y2 = r.y2;
        return b;
    };

    std::vector<bool> gt_matched(n_gt, false);
    std::vector<bool> tp(order.size(), false);
    for (size_t oi = 0; oi < order.size(); ++oi) {
        const ApInput& det = detections[order[oi]];
        double best_iou = 0.0;
        size_t best_gt = n_gt;
        for (size_t gi = 0; gi < n_gt; ++gi) {
            if (gt_matched[gi]) continue;
            if (ground_truth[gi].image_id != det.image_id) continue;
            const double v = iou(box_of(det), box_of(ground_truth[gi]));
            if (v >= iou_threshold && v > best_iou) {
                best_iou = v;
                best_gt = gi;
            }
        }
        if (best_gt < n_gt) {
            gt_matched[best_gt] = true;
            tp[oi] = true;
        }
    }

    // Precision-recall curve, then all-point interpolation.
    const size_t n = order.size();
    std::vector<double> precision(n), recall(n);
    int tp_cum = 0;
    for (size_t i = 0; i < n; ++i) {
        if (tp[i]) ++tp_cum;
        precision[i] = static_cast<double>(tp_cum) / static_cast<double>(i + 1);
        recall[i] = static_cast<double>(tp_cum) / static_cast<double>(n_gt);
    }
    for (size_t i = n - 1; i-- > 0;) {
        precision[i] = std::max(precision[i], precision[i + 1]);
    }
    double ap = 0.0;
    double prev_recall = 0.0;
    for (size_t i = 0; i < n; ++i) {
        if (recall[i] > prev_recall) {
            ap += (recall[i] - prev_recall) * precision[i];
            prev_recall = recall[i];
        }
    }
    return ap;
}

namespace {

struct ClassBuckets {
    std::vector<ApInput> gt, det;
    int gt_central = 0, gt_peripheral = 0;
};

ApInput to_ap_input(const Box& b, int image_id) {
    ApInput r;
    r.image_id = image_id;
    r.x1 = b.x1;
    r.y1 = b.y1;
    r.x2 = b.x2;
    r.y2 = b.y2;
    r.score = b.score;
    return r;
}

std::optional<double> mean_ap(const std::vector<std::optional<double>>& aps) {
    double sum = 0.0;
    int n = 0;
    for (const auto& ap : aps) {
        if (ap) {
            sum += *ap;
            ++n;
        }
    }
    if (n == 0) return std::nullopt;
    return sum / n;
}

}  // namespace

EvalReport zonal_map(const BoxSet& ground_truth, const BoxSet& detections, const ZoneSpec& zone,
                     double iou_threshold) {
    if (ground_truth.size() == 0) {
        throw DomainError("zonal_map: ground truth is empty");
    }
    if (!(iou_threshold > 0.0) || iou_threshold > 1.0) {
        throw InvalidArgument("zonal_map: IoU threshold must be in (0, 1]");
    }
    for (const auto& rec : detections.records()) {
        if (!rec.box.has_score()) {
            throw InvalidArgument("zonal_map: detections must carry scores");
        }
    }

    // Shared image-name -> id map across both sets.
    std::map<std::string, int> image_ids;
    auto id_of = [&](const std::string& name) {
        auto [it, inserted] = image_ids.emplace(name, static_cast<int>(image_ids.size()));
        return it->second;
    };

    std::set<int> class_ids;
    for (const auto& r : ground_truth.records()) class_ids.insert(r.box.class_id);
    for (const auto& r : detections.records()) class_ids.insert(r.box.class_id);

    std::map<int, ClassBuckets> full, central, peripheral;
    for (int c : class_ids) {
        full[c];
        central[c];
        peripheral[c];
    }
    for (const auto& r : ground_truth.records()) {
        const int img = id_of(r.image);
        const ApInput in = to_ap_input(r.box, img);
        full[r.box.class_id].gt.push_back(in);
        if (zone_of_is_central(r.box, zone)) {
            central[r.box.class_id].gt.push_back(in);
        } else {
            peripheral[r.box.class_id].gt.push_back(in);
        }
    }
    for (const auto& r : detections.records()) {
        const int img = id_of(r.image);
        const ApInput in = to_ap_input(r.box, img);
        full[r.box.class_id].det.push_back(in);
        if (zone_of_is_central(r.box, zone)) {
            central[r.box.class_id].det.push_back(in);
        } else {
            peripheral[r.box.class_id].det.push_back(in);
        }
    }

    EvalReport report;
    report.iou_threshold = iou_threshold;
    std::vector<std::optional<double>> aps_full, aps_central, aps_peripheral;
    for (int c : class_ids) {
        ClassReport cr;
        cr.class_id = c;
        cr.ap_full = average_precision(full[c].det, full[c].gt, iou_threshold);
        cr.ap_central = average_precision(central[c].det, central[c].gt, iou_threshold);
        cr.ap_peripheral = average_precision(peripheral[c].det, peripheral[c].gt, iou_threshold);
        cr.gt_total = static_cast<int>(full[c].gt.size());
        cr.gt_central = static_cast<int>(central[c].gt.size());
        cr.gt_peripheral = static_cast<int>(peripheral[c].gt.size());
        report.count_total += cr.gt_total;
        report.count_central += cr.gt_central;
        report.count_peripheral += cr.gt_peripheral;
        aps_full.push_back(cr.ap_full);
        aps_central.push_back(cr.ap_central);
        aps_peripheral.push_back(cr.ap_peripheral);
        report.per_class.push_back(cr);
    }
    report.map_full = mean_ap(aps_full);
    report.map_central = mean_ap(aps_central);
    report.map_peripheral = mean_ap(aps_peripheral);
    return report;
}

}  // namespace fmc
