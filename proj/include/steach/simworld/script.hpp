#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "steach/core/frame.hpp"
#include "steach/simworld/objects.hpp"

namespace steach::simworld {

enum class ScenarioKind { Constrained, FromAfar, WithDistractors };
enum class GazeTarget { AtRobot, AtLeftHand, AtRightHand, Away };
enum class Hand { Left, Right };

const char* to_string(ScenarioKind k);
const char* to_string(GazeTarget g);
const char* to_string(Hand h);
ScenarioKind scenario_kind_from_string(const std::string& s);
Hand hand_from_string(const std::string& s);

// Sensor/keypoint noise model. All values non-negative, probabilities <= 1.
struct NoiseParams {
    double depth_sigma = 0.01;           // meters
    double keypoint_jitter_sigma = 1.5;  // pixels
    double keypoint_dropout_prob = 0.05;
    double invalid_depth_prob = 0.02;

    bool valid() const {
        return depth_sigma >= 0 && keypoint_jitter_sigma >= 0 &&
               keypoint_dropout_prob >= 0 && keypoint_dropout_prob <= 1 &&
               invalid_depth_prob >= 0 && invalid_depth_prob <= 1;
    }
    static NoiseParams none() { return {0.0, 0.0, 0.0, 0.0}; }
};

// Body proportions of a rendered stick figure, meters relative to the torso
// center (camera frame: x right, y down, z forward).
struct PersonShape {
    double head_radius = 0.080;
    double interocular = 0.064;
    double eye_dy = -0.345;      // eye line
    double ear_dx = 0.076;
    double nose_dy = -0.315;
    double head_dy = -0.33;
    double eye_ellipse_a = 0.012;  // eye keypoint ring, horizontal semi-axis
    double eye_ellipse_b = 0.006;
    double torso_half_w = 0.17;
    double torso_half_h = 0.22;
    double hip_dx = 0.08;
    double hip_dy = 0.20;
    double arm_half_width = 0.0075;
    std::array<std::uint8_t, 3> shirt_color{70, 110, 70};
    std::array<std::uint8_t, 3> skin_color{200, 170, 150};
};

struct Waypoint {
    double t = 0.0;
    Eigen::Vector3d pos = Eigen::Vector3d::Zero();
};

// piecewise-linear position, clamped at both ends
Eigen::Vector3d interpolate(const std::vector<Waypoint>& wps, double t);

// Scripted teacher: torso-center trajectory plus gaze/speech timelines.
// Head/hand/hip positions derive from the trajectory and body shape.
struct TeacherScript {
    std::vector<Waypoint> waypoints;  // torso center path
    std::vector<std::pair<double, GazeTarget>> gaze_timeline;  // step function
    std::vector<std::pair<double, std::string>> speech_events;
    Hand held_hand = Hand::Right;
    PersonShape shape;
    std::uint32_t identity = 0;
    double sway_amp = 0.015;  // lateral sway, meters
    double sway_hz = 0.10;
    double bob_amp = 0.008;  // vertical hand bob, meters
    double bob_hz = 0.23;

    GazeTarget gaze_at(double t) const;
};

struct DistractorPerson {
    std::vector<Waypoint> waypoints;
    PersonShape shape;
    std::uint32_t identity = 1;
    GazeTarget gaze = GazeTarget::Away;
};

struct DistractorObject {
    std::vector<Waypoint> waypoints;  // center path
    double width_m = 0.25;
    double height_m = 0.30;
    std::array<std::uint8_t, 3> color{90, 90, 90};
};

using Distractor = std::variant<DistractorPerson, DistractorObject>;

// One seeded acquisition session: teacher, held object, distractors, noise.
struct ScenarioScript {
    ScenarioKind kind = ScenarioKind::Constrained;
    TeacherScript teacher;
    ObjectSpec object;
    std::vector<Distractor> distractors;
    std::uint64_t seed = 0;
    double fps = 7.0;
    std::uint32_t n_frames = 300;
    NoiseParams noise;
    int width = 320;
    int height = 240;
    core::CameraIntrinsics intrinsics{277.0, 160.0, 120.0};

    double duration() const { return n_frames / fps; }
    double frame_time(std::uint32_t i) const { return i / fps; }
};

// Distance the teacher holds the object in front of the torso, and the gap
// between the grasping hand surface and the object surface. The annotation
// hand-radius contract (hand within reach of every object point, torso out of
// reach) depends on these staying in sync with PersonShape.
inline constexpr double kHoldForward = 0.35;
inline constexpr double kHandBehindSurface = 0.03;

// Throws std::invalid_argument when a script violates its scenario contract
// (distance band, distractor requirements, noise ranges, timeline coverage).
void validate_script(const ScenarioScript& script);

// Default script for a scenario kind: Constrained at 0.65 m, the other two at
// 2.0 m, WithDistractors with a near box distractor plus a background person.
ScenarioScript make_scenario(ScenarioKind kind, const std::string& object_label,
                             std::uint64_t seed, std::uint32_t n_frames = 300,
                             double fps = 7.0,
                             std::optional<NoiseParams> noise = std::nullopt);

// Scenario whose timeline also carries the engagement/speech lead-in needed to
// drive the full interaction (gaze at robot, "learn <label>", gaze at hand).
ScenarioScript make_session_scenario(ScenarioKind kind,
                                     const std::string& object_label,
                                     std::uint64_t seed,
                                     std::uint32_t acquire_frames = 300,
                                     double fps = 7.0);

// JSON (de)serialization of scenario scripts; schema documented in README.
std::string scenario_to_json(const ScenarioScript& script);
ScenarioScript scenario_from_json(const std::string& json_text);

}  // namespace steach::simworld
