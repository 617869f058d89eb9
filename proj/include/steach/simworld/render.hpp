#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "steach/core/annotation.hpp"
#include "steach/core/frame.hpp"
#include "steach/perception/keypoints.hpp"
#include "steach/simworld/person.hpp"
#include "steach/simworld/script.hpp"

namespace steach::simworld {

// Oracle record paired with every rendered frame. The keypoint sets are the
// simulated pose-estimator output (noise applied); the object box and gaze
// label are noise-free truth.
struct GroundTruthRecord {
    std::uint32_t frame_index = 0;
    bool object_visible = false;
    std::optional<core::BoundingBox> true_object_box;
    std::uint32_t object_pixels = 0;
    std::vector<perception::KeypointSet> keypoints;
    std::optional<int> teacher_ref;
    GazeTarget teacher_gaze = GazeTarget::Away;
};

struct FrameRecord {
    core::RgbdFrame frame;
    GroundTruthRecord gt;
};

// Streaming renderer. Frames are a pure function of (script, index), so the
// stream can be restarted or random-accessed; identical scripts give
// bit-identical buffers.
class SequenceRenderer {
public:
    explicit SequenceRenderer(ScenarioScript script);

    std::optional<FrameRecord> next();
    FrameRecord render_frame(std::uint32_t index) const;

    const ScenarioScript& script() const { return script_; }

private:
    ScenarioScript script_;
    std::uint32_t next_index_ = 0;
};

std::vector<FrameRecord> render_sequence(const ScenarioScript& script);

// Keypoint-only sample for training the gaze classifiers.
struct GazeSample {
    perception::KeypointSet keypoints;
    GazeTarget target = GazeTarget::Away;
    int person_id = 0;
};

// Per-class sample counts for make_gaze_dataset.
struct GazeDatasetCounts {
    int at_robot = 0;
    int at_left_hand = 0;
    int at_right_hand = 0;
    int away = 0;
};

// Sampled keypoint sets for n_persons synthetic people with per-person body
// proportions, random distance/position, and mild keypoint noise.
std::vector<GazeSample> make_gaze_dataset(int n_persons,
                                          const GazeDatasetCounts& counts,
                                          std::uint64_t seed);

}  // namespace steach::simworld
