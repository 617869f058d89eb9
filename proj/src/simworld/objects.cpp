#include "steach/simworld/objects.hpp"

#include <stdexcept>

namespace steach::simworld {

const char* to_string(SizeClass s) {
    switch (s) {
        case SizeClass::Small: return "small";
        case SizeClass::Medium: return "medium";
        case SizeClass::Big: return "big";
    }
    return "?";
}

SizeClass size_class_from_string(const std::string& s) {
    if (s == "small") return SizeClass::Small;
    if (s == "medium") return SizeClass::Medium;
    if (s == "big") return SizeClass::Big;
    throw std::invalid_argument("unknown size class: " + s);
}

bool size_class_consistent(const ObjectSpec& spec) {
    const double d = spec.max_dim();
    switch (spec.size_class) {
        case SizeClass::Small: return d < 0.10;
        case SizeClass::Medium: return d >= 0.10 && d < 0.20;
        case SizeClass::Big: return d >= 0.20;
    }
    return false;
}

const std::vector<ObjectSpec>& object_catalog() {
    static const std::vector<ObjectSpec> catalog = {
        {"025_mug", SizeClass::Small, {32, 64, 224}, 0.090, 0.080, 0.0},
        {"011_banana", SizeClass::Small, {224, 224, 32}, 0.095, 0.040, 0.0},
        {"010_potted_meat_can", SizeClass::Small, {128, 64, 160}, 0.095, 0.075, 0.0},
        {"004_sugar_box", SizeClass::Medium, {255, 255, 128}, 0.090, 0.175, 0.0},
        {"006_mustard_bottle", SizeClass::Medium, {160, 128, 0}, 0.080, 0.190, 0.0},
        {"037_scissors", SizeClass::Medium, {224, 96, 32}, 0.185, 0.080, 0.0},
        {"003_cracker_box", SizeClass::Big, {192, 32, 32}, 0.158, 0.210, 0.25},
        {"021_bleach_cleanser", SizeClass::Big, {240, 240, 240}, 0.100, 0.250, 0.15},
        {"035_power_drill", SizeClass::Big, {32, 160, 160}, 0.230, 0.180, 0.20},
    };
    return catalog;
}

const ObjectSpec& object_by_label(const std::string& label) {
    for (const auto& o : object_catalog())
        if (o.label == label) return o;
    throw std::invalid_argument("unknown object label: " + label);
}

std::vector<std::string> labels_for_size(SizeClass s) {
    std::vector<std::string> out;
    for (const auto& o : object_catalog())
        if (o.size_class == s) out.push_back(o.label);
    return out;
}

}  // namespace steach::simworld
