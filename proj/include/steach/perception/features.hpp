#pragma once

#include <optional>
#include <stdexcept>

#include <Eigen/Core>

#include "steach/core/box.hpp"
#include "steach/perception/keypoints.hpp"

namespace steach::perception {

// 57-element gaze feature: (x, y, k) per face keypoint in canonical order,
// centered on the face centroid and scaled so the farthest present point has
// unit norm. Absent keypoints contribute zero triplets.
struct GazeFeature {
    Eigen::VectorXd values;  // 57
};

struct InsufficientKeypoints : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateFeature : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kGazeFeatureDim = 57;
inline constexpr std::size_t kMinFaceKeypoints = 12;

// Throws InsufficientKeypoints below the 12/19 quorum and DegenerateFeature
// when every present point coincides with the centroid.
GazeFeature gaze_feature(const KeypointSet& kp);

// Tight box around the present face keypoints expanded by margin per side and
// clipped to the frame. Needs at least 3 face keypoints.
core::BoundingBox face_crop_box(const KeypointSet& kp, double margin,
                                int frame_w, int frame_h);

// Mirror of a keypoint set about the vertical image axis; left/right names
// swap so the result is a geometrically valid observation.
KeypointSet mirror_keypoints(const KeypointSet& kp, int frame_w);

}  // namespace steach::perception
