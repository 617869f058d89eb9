#include "steach/perception/tracking.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace steach::perception {

std::optional<std::pair<double, double>> hip_position(const KeypointSet& kp) {
    const auto l = kp.get("left_hip");
    const auto r = kp.get("right_hip");
    if (l && r) return std::make_pair((l->x + r->x) / 2.0, (l->y + r->y) / 2.0);
    if (l) return std::make_pair(l->x, l->y);
    if (r) return std::make_pair(r->x, r->y);
    return std::nullopt;
}

TeacherTrack associate_teacher(const TeacherTrack& prev,
                               const std::vector<KeypointSet>& people,
                               const std::vector<double>& teacher_scores,
                               const TrackingConfig& cfg) {
    if (people.size() != teacher_scores.size())
        throw std::invalid_argument("associate_teacher: score/person mismatch");

    // face confirmation wins: highest accepted score, ties to the lowest index
    int best = -1;
    double best_score = cfg.accept_threshold;
    for (std::size_t i = 0; i < people.size(); ++i) {
        const double s = teacher_scores[i];
        if (std::isnan(s)) continue;
        if (s > best_score) {
            best_score = s;
            best = static_cast<int>(i);
        }
    }
    TeacherTrack next;
    if (best >= 0) {
        next.active = true;
        next.teacher_ref = people[best].person_ref;
        next.frames_since_face_seen = 0;
        next.last_hip = hip_position(people[best]);
        if (!next.last_hip) next.last_hip = prev.last_hip;
        return next;
    }

    // no face: continue on the nearest hip within the jump bound
    if (prev.active && prev.last_hip &&
        prev.frames_since_face_seen < cfg.max_frames_without_face) {
        double best_d = cfg.max_hip_jump;
        int nearest = -1;
        std::pair<double, double> nearest_hip{};
        for (std::size_t i = 0; i < people.size(); ++i) {
            const auto hip = hip_position(people[i]);
            if (!hip) continue;
            const double d = std::hypot(hip->first - prev.last_hip->first,
                                        hip->second - prev.last_hip->second);
            if (d <= best_d) {
                best_d = d;
                nearest = static_cast<int>(i);
                nearest_hip = *hip;
            }
        }
        if (nearest >= 0) {
            next.active = true;
            next.teacher_ref = people[nearest].person_ref;
            next.last_hip = nearest_hip;
            next.frames_since_face_seen = prev.frames_since_face_seen + 1;
            return next;
        }
    }

    next.active = false;
    next.teacher_ref = std::nullopt;
    next.last_hip = prev.last_hip;
    next.frames_since_face_seen = prev.frames_since_face_seen + 1;
    return next;
}

}  // namespace steach::perception
