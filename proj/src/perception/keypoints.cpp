#include "steach/perception/keypoints.hpp"

namespace steach::perception {

const std::vector<std::string>& face_keypoint_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v{"nose", "left_ear", "right_ear"};
        for (const char* side : {"left", "right"})
            for (int i = 0; i < 8; ++i)
                v.push_back(std::string(side) + "_eye_" + std::to_string(i));
        return v;
    }();
    return names;
}

const std::vector<std::string>& all_keypoint_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v = face_keypoint_names();
        v.insert(v.end(), {"head", "left_elbow", "right_elbow", "left_wrist",
                           "right_wrist", "left_hip", "right_hip"});
        return v;
    }();
    return names;
}

std::size_t count_face_keypoints(const KeypointSet& kp) {
    std::size_t n = 0;
    for (const auto& name : face_keypoint_names())
        if (kp.has(name)) ++n;
    return n;
}

}  // namespace steach::perception
