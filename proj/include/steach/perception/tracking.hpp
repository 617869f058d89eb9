#pragma once

#include <optional>
#include <vector>

#include "steach/perception/keypoints.hpp"

namespace steach::perception {

// Teacher track across frames: face-classifier confirmations anchor the track,
// the hip keypoint carries it while the face is hidden.
struct TeacherTrack {
    std::optional<int> teacher_ref;  // person_ref this frame, nullopt when lost
    std::optional<std::pair<double, double>> last_hip;
    int frames_since_face_seen = 0;
    bool active = false;
};

struct TrackingConfig {
    double accept_threshold = 0.0;  // face decision value acceptance (sign rule)
    double max_hip_jump = 50.0;     // px per frame at 320x240
    int max_frames_without_face = 35;  // ~5 s at 7 fps
};

// One update step. teacher_scores[i] is the face-classifier decision value for
// people[i] (NaN when no face was scored). At most one person is assigned.
TeacherTrack associate_teacher(const TeacherTrack& prev,
                               const std::vector<KeypointSet>& people,
                               const std::vector<double>& teacher_scores,
                               const TrackingConfig& cfg = {});

// hip position used for tracking: midpoint of the available hip keypoints
std::optional<std::pair<double, double>> hip_position(const KeypointSet& kp);

}  // namespace steach::perception
