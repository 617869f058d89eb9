#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace steach::perception {

// 2D keypoint with confidence k in [0, 1]. "left"/"right" in keypoint names
// refer to the image side as seen from the camera, not the person's anatomy.
struct Keypoint {
    double x = 0.0;
    double y = 0.0;
    double k = 0.0;
};

// Per-person keypoints for one frame. Missing keypoints are absent entries,
// never zero triplets.
struct KeypointSet {
    int person_ref = 0;
    std::map<std::string, Keypoint> points;

    bool has(const std::string& name) const { return points.count(name) > 0; }

    std::optional<Keypoint> get(const std::string& name) const {
        auto it = points.find(name);
        if (it == points.end()) return std::nullopt;
        return it->second;
    }
};

// The 19 face keypoints in canonical feature order: nose, two ears, then
// 8 points per eye.
const std::vector<std::string>& face_keypoint_names();

// All keypoint names the simulator can emit (face + head centroid + arms + hips).
const std::vector<std::string>& all_keypoint_names();

std::size_t count_face_keypoints(const KeypointSet& kp);

}  // namespace steach::perception
