#include "steach/simworld/person.hpp"

#include <cmath>
#include <numbers>

namespace steach::simworld {

namespace {

// arm joint offsets relative to the torso center, meters
constexpr double kShoulderDx = 0.16, kShoulderDy = -0.21;
constexpr double kIdleElbowDx = 0.21, kIdleElbowDy = -0.07;
constexpr double kIdleWristDx = 0.20, kIdleWristDy = 0.10, kIdleWristDz = -0.02;
constexpr double kHoldElbowDx = 0.21, kHoldElbowDy = 0.02, kHoldElbowDz = -0.10;
// hand relative to torso while holding (z depends on the object tilt)
constexpr double kHoldHandDx = 0.22, kHoldHandDy = -0.12;
// grasp relative to the object: under the near-bottom quarter
constexpr double kGraspUnderGap = 0.012;
constexpr double kHandRadius = 0.015;
constexpr double kLegsHalfW = 0.10, kLegsHalfH = 0.125;

Eigen::Vector2d gaze_eye_offset(GazeTarget g, double iod) {
    switch (g) {
        case GazeTarget::AtRobot: return {0.0, 0.0};
        case GazeTarget::AtLeftHand: return {-0.20 * iod, 0.06 * iod};
        case GazeTarget::AtRightHand: return {0.20 * iod, 0.06 * iod};
        case GazeTarget::Away: return {0.0, -0.25 * iod};
    }
    return {0.0, 0.0};
}

}  // namespace

Surface Surface::rect(const Eigen::Vector3d& c, double hw, double hh,
                      std::array<std::uint8_t, 3> col, std::uint16_t id,
                      double z_slope) {
    Surface s;
    s.kind = Kind::Rect;
    s.center = c;
    s.half_w = hw;
    s.half_h = hh;
    s.z_slope = z_slope;
    s.color = col;
    s.id = id;
    return s;
}

Surface Surface::disc(const Eigen::Vector3d& c, double r,
                      std::array<std::uint8_t, 3> col, std::uint16_t id) {
    Surface s;
    s.kind = Kind::Disc;
    s.center = c;
    s.radius = r;
    s.color = col;
    s.id = id;
    return s;
}

Surface Surface::segment(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                         double hw, std::array<std::uint8_t, 3> col,
                         std::uint16_t id) {
    Surface s;
    s.kind = Kind::Segment;
    s.a = a;
    s.b = b;
    s.half_width = hw;
    s.color = col;
    s.id = id;
    return s;
}

Eigen::Vector3d held_hand_position(const Eigen::Vector3d& torso,
                                   const ObjectSpec& object, Hand hand,
                                   double bob_dy) {
    const int s = hand_sign(hand);
    const double dz =
        kHoldForward - object.depth_spread_m / 4.0 - kHandBehindSurface;
    return torso +
           Eigen::Vector3d(s * kHoldHandDx, kHoldHandDy + bob_dy, -dz);
}

Eigen::Vector3d object_center_from_hand(const Eigen::Vector3d& hand_pos,
                                        const ObjectSpec& object, Hand hand) {
    const int s = hand_sign(hand);
    // hand sits kHandBehindSurface behind the surface at the grasp point,
    // which is the near-side quarter of a tilted object
    const double z_near =
        hand_pos.z() - object.depth_spread_m / 4.0 - kHandBehindSurface;
    const double z_center = z_near + object.depth_spread_m / 2.0;
    return {hand_pos.x() + s * object.width_m / 4.0,
            hand_pos.y() - object.height_m / 2.0 - kGraspUnderGap, z_center};
}

Eigen::Vector3d torso_for_object_at(const Eigen::Vector3d& object_center,
                                    const ObjectSpec& object, Hand hand,
                                    double distance) {
    const int s = hand_sign(hand);
    return {object_center.x() - s * (object.width_m / 4.0 + kHoldHandDx),
            object_center.y() + object.height_m / 2.0 + kGraspUnderGap -
                kHoldHandDy,
            distance};
}

Surface held_object_surface(const ObjectSpec& object,
                            const Eigen::Vector3d& hand_pos, Hand hand,
                            std::uint16_t id) {
    const int s = hand_sign(hand);
    const Eigen::Vector3d c = object_center_from_hand(hand_pos, object, hand);
    const double slope =
        object.width_m > 0 ? s * object.depth_spread_m / object.width_m : 0.0;
    return Surface::rect(c, object.width_m / 2.0, object.height_m / 2.0,
                         object.color, id, slope);
}

std::vector<Surface> person_surfaces(const PersonPose& pose, std::uint16_t id) {
    const auto& sh = pose.shape;
    const Eigen::Vector3d& T = pose.torso;
    std::array<std::uint8_t, 3> pants{55, 55, 70};

    std::vector<Surface> out;
    out.push_back(Surface::rect(T, sh.torso_half_w, sh.torso_half_h,
                                sh.shirt_color, id));
    out.push_back(Surface::rect(
        T + Eigen::Vector3d(0, sh.torso_half_h + kLegsHalfH, 0), kLegsHalfW,
        kLegsHalfH, pants, id));
    out.push_back(Surface::disc(T + Eigen::Vector3d(0, sh.head_dy, 0),
                                sh.head_radius, sh.skin_color, id));

    for (int s : {-1, +1}) {
        const Eigen::Vector3d shoulder =
            T + Eigen::Vector3d(s * kShoulderDx, kShoulderDy, 0);
        const bool holding =
            pose.held && hand_sign(pose.held->hand) == s;
        Eigen::Vector3d elbow, wrist;
        if (holding) {
            elbow = T + Eigen::Vector3d(s * kHoldElbowDx, kHoldElbowDy,
                                        kHoldElbowDz);
            wrist = pose.held->hand_pos;
        } else {
            elbow = T + Eigen::Vector3d(s * kIdleElbowDx, kIdleElbowDy, 0);
            wrist = T + Eigen::Vector3d(s * kIdleWristDx, kIdleWristDy,
                                        kIdleWristDz);
        }
        out.push_back(
            Surface::segment(shoulder, elbow, sh.arm_half_width, sh.shirt_color, id));
        out.push_back(
            Surface::segment(elbow, wrist, sh.arm_half_width, sh.shirt_color, id));
        out.push_back(Surface::disc(wrist, kHandRadius, sh.skin_color, id));
    }
    return out;
}

std::vector<std::pair<std::string, Eigen::Vector3d>> person_keypoints3d(
    const PersonPose& pose) {
    const auto& sh = pose.shape;
    const Eigen::Vector3d& T = pose.torso;
    const double face_z = T.z() - 0.04;

    std::vector<std::pair<std::string, Eigen::Vector3d>> out;
    out.reserve(26);
    out.emplace_back("nose", Eigen::Vector3d(T.x(), T.y() + sh.nose_dy, face_z));
    out.emplace_back("left_ear", Eigen::Vector3d(T.x() - sh.ear_dx,
                                                 T.y() + sh.head_dy, face_z));
    out.emplace_back("right_ear", Eigen::Vector3d(T.x() + sh.ear_dx,
                                                  T.y() + sh.head_dy, face_z));

    const Eigen::Vector2d shift = gaze_eye_offset(pose.gaze, sh.interocular);
    for (int s : {-1, +1}) {
        const double ecx = T.x() + s * sh.interocular / 2.0 + shift.x();
        const double ecy = T.y() + sh.eye_dy + shift.y();
        const char* side = s < 0 ? "left" : "right";
        for (int i = 0; i < 8; ++i) {
            const double th = 2.0 * std::numbers::pi * i / 8.0;
            out.emplace_back(
                std::string(side) + "_eye_" + std::to_string(i),
                Eigen::Vector3d(ecx + sh.eye_ellipse_a * std::cos(th),
                                ecy + sh.eye_ellipse_b * std::sin(th), face_z));
        }
    }

    out.emplace_back("head", Eigen::Vector3d(T.x(), T.y() + sh.head_dy, face_z));

    for (int s : {-1, +1}) {
        const char* side = s < 0 ? "left" : "right";
        const bool holding = pose.held && hand_sign(pose.held->hand) == s;
        Eigen::Vector3d elbow, wrist;
        if (holding) {
            elbow = T + Eigen::Vector3d(s * kHoldElbowDx, kHoldElbowDy,
                                        kHoldElbowDz);
            wrist = pose.held->hand_pos;
        } else {
            elbow = T + Eigen::Vector3d(s * kIdleElbowDx, kIdleElbowDy, 0);
            wrist = T + Eigen::Vector3d(s * kIdleWristDx, kIdleWristDy,
                                        kIdleWristDz);
        }
        out.emplace_back(std::string(side) + "_elbow", elbow);
        out.emplace_back(std::string(side) + "_wrist", wrist);
        out.emplace_back(std::string(side) + "_hip",
                         T + Eigen::Vector3d(s * sh.hip_dx, sh.hip_dy, 0));
    }
    return out;
}

}  // namespace steach::simworld
