#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace steach::simworld {

enum class SizeClass { Small, Medium, Big };

const char* to_string(SizeClass s);
SizeClass size_class_from_string(const std::string& s);

// Physical object shown by the teacher. Extent is the camera-facing face in
// meters; Big objects additionally get a front-to-back depth spread when
// rendered (they are tilted away from the grasping hand).
struct ObjectSpec {
    std::string label;
    SizeClass size_class = SizeClass::Small;
    std::array<std::uint8_t, 3> color{};  // flat-shaded base color
    double width_m = 0.0;
    double height_m = 0.0;
    double depth_spread_m = 0.0;

    double max_dim() const { return width_m > height_m ? width_m : height_m; }
};

// size_class must be consistent with the extent thresholds:
// Small < 0.10 m, Medium < 0.20 m, Big >= 0.20 m (max dimension).
bool size_class_consistent(const ObjectSpec& spec);

// The nine desk objects used across all scenarios.
const std::vector<ObjectSpec>& object_catalog();

const ObjectSpec& object_by_label(const std::string& label);

std::vector<std::string> labels_for_size(SizeClass s);

}  // namespace steach::simworld
