#include "steach/perception/features.hpp"

#include <algorithm>
#include <cmath>

namespace steach::perception {

GazeFeature gaze_feature(const KeypointSet& kp) {
    const auto& names = face_keypoint_names();

    double cx = 0.0, cy = 0.0;
    std::size_t present = 0;
    for (const auto& name : names)
        if (auto p = kp.get(name)) {
            cx += p->x;
            cy += p->y;
            ++present;
        }
    if (present < kMinFaceKeypoints)
        throw InsufficientKeypoints("gaze_feature: " + std::to_string(present) +
                                    "/19 face keypoints present");
    cx /= static_cast<double>(present);
    cy /= static_cast<double>(present);

    double max_dist = 0.0;
    for (const auto& name : names)
        if (auto p = kp.get(name))
            max_dist = std::max(max_dist, std::hypot(p->x - cx, p->y - cy));
    if (max_dist <= 0.0)
        throw DegenerateFeature("gaze_feature: all keypoints at the centroid");

    GazeFeature f;
    f.values = Eigen::VectorXd::Zero(kGazeFeatureDim);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (auto p = kp.get(names[i])) {
            f.values[3 * i] = (p->x - cx) / max_dist;
            f.values[3 * i + 1] = (p->y - cy) / max_dist;
            f.values[3 * i + 2] = p->k;
        }
    }
    return f;
}

core::BoundingBox face_crop_box(const KeypointSet& kp, double margin,
                                int frame_w, int frame_h) {
    double x0 = 1e30, y0 = 1e30, x1 = -1e30, y1 = -1e30;
    std::size_t present = 0;
    for (const auto& name : face_keypoint_names())
        if (auto p = kp.get(name)) {
            x0 = std::min(x0, p->x);
            y0 = std::min(y0, p->y);
            x1 = std::max(x1, p->x);
            y1 = std::max(y1, p->y);
            ++present;
        }
    if (present < 3)
        throw InsufficientKeypoints("face_crop_box: fewer than 3 face keypoints");

    const double mx = margin * (x1 - x0);
    const double my = margin * (y1 - y0);
    core::BoundingBox box{x0 - mx, y0 - my, x1 + mx, y1 + my};
    auto clipped = core::clip_box(box, frame_w, frame_h);
    if (!clipped)
        throw InsufficientKeypoints("face_crop_box: face outside the frame");
    return *clipped;
}

KeypointSet mirror_keypoints(const KeypointSet& kp, int frame_w) {
    const auto mirror_name = [](std::string name) {
        // eye ring points are indexed by angle; reflection maps angle t to
        // pi - t, i.e. index i to (4 - i) mod 8
        const auto eye = name.find("_eye_");
        if (eye != std::string::npos) {
            const int i = name.back() - '0';
            name.back() = static_cast<char>('0' + ((4 - i) % 8 + 8) % 8);
        }
        if (name.rfind("left_", 0) == 0) return "right_" + name.substr(5);
        if (name.rfind("right_", 0) == 0) return "left_" + name.substr(6);
        return name;
    };
    KeypointSet out;
    out.person_ref = kp.person_ref;
    for (const auto& [name, p] : kp.points)
        out.points[mirror_name(name)] = {frame_w - p.x, p.y, p.k};
    return out;
}

}  // namespace steach::perception
