#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "steach/simworld/objects.hpp"
#include "steach/simworld/script.hpp"

namespace steach::simworld {

// Camera-facing render primitive. Rect supports a linear depth ramp along x
// so Big objects can be tilted front-to-back.
struct Surface {
    enum class Kind { Rect, Disc, Segment };
    Kind kind = Kind::Rect;
    Eigen::Vector3d center = Eigen::Vector3d::Zero();  // rect/disc
    double half_w = 0.0;
    double half_h = 0.0;
    double z_slope = 0.0;  // dz/dx across a rect
    double radius = 0.0;   // disc
    Eigen::Vector3d a = Eigen::Vector3d::Zero();  // segment endpoints
    Eigen::Vector3d b = Eigen::Vector3d::Zero();
    double half_width = 0.0;  // segment thickness, meters
    std::array<std::uint8_t, 3> color{};
    std::uint16_t id = 0;

    static Surface rect(const Eigen::Vector3d& c, double hw, double hh,
                        std::array<std::uint8_t, 3> col, std::uint16_t id,
                        double z_slope = 0.0);
    static Surface disc(const Eigen::Vector3d& c, double r,
                        std::array<std::uint8_t, 3> col, std::uint16_t id);
    static Surface segment(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                           double hw, std::array<std::uint8_t, 3> col,
                           std::uint16_t id);

    double depth_at(double x_m) const {  // rect only
        return center.z() + z_slope * (x_m - center.x());
    }
};

struct HeldArm {
    Hand hand = Hand::Right;
    Eigen::Vector3d hand_pos = Eigen::Vector3d::Zero();
};

struct PersonPose {
    Eigen::Vector3d torso = Eigen::Vector3d::Zero();  // torso center
    PersonShape shape;
    GazeTarget gaze = GazeTarget::Away;
    std::optional<HeldArm> held;
};

inline int hand_sign(Hand h) { return h == Hand::Right ? 1 : -1; }

// Grasp pose: hand position under the near-bottom quarter of the object, and
// the object placement implied by a hand position. The two are inverses.
Eigen::Vector3d held_hand_position(const Eigen::Vector3d& torso,
                                   const ObjectSpec& object, Hand hand,
                                   double bob_dy = 0.0);
Eigen::Vector3d object_center_from_hand(const Eigen::Vector3d& hand_pos,
                                        const ObjectSpec& object, Hand hand);

// Torso position that puts the held object's center at a given world point.
Eigen::Vector3d torso_for_object_at(const Eigen::Vector3d& object_center,
                                    const ObjectSpec& object, Hand hand,
                                    double distance);

// Camera-facing rect for the held object; z ramps away from the grasp side.
Surface held_object_surface(const ObjectSpec& object,
                            const Eigen::Vector3d& hand_pos, Hand hand,
                            std::uint16_t id);

std::vector<Surface> person_surfaces(const PersonPose& pose, std::uint16_t id);

// Analytic 3D keypoints: 19 face points (gaze-dependent eye layout), head
// centroid, wrists, elbows, hips. Names use image-side left/right.
std::vector<std::pair<std::string, Eigen::Vector3d>> person_keypoints3d(
    const PersonPose& pose);

}  // namespace steach::simworld
