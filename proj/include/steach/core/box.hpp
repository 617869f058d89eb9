#pragma once

#include <optional>
#include <span>
#include <stdexcept>

namespace steach::core {

// Integer pixel coordinate. A pixel (x, y) covers [x, x+1) x [y, y+1).
struct Pixel {
    int x = 0;
    int y = 0;
    friend bool operator==(const Pixel&, const Pixel&) = default;
};

// Axis-aligned box in pixel coordinates, half-open convention:
// area = (x_max - x_min) * (y_max - y_min). Coordinates may be sub-pixel.
struct BoundingBox {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
    double center_x() const { return 0.5 * (x_min + x_max); }
    double center_y() const { return 0.5 * (y_min + y_max); }
    bool valid() const { return x_min < x_max && y_min < y_max; }

    bool contains(double x, double y) const {
        return x >= x_min && x < x_max && y >= y_min && y < y_max;
    }

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

double intersection_area(const BoundingBox& a, const BoundingBox& b);

// Intersection over union in [0, 1]; 0 for disjoint boxes.
double iou(const BoundingBox& a, const BoundingBox& b);

// Box intersected with [0, w] x [0, h]; nullopt when the intersection has no area.
std::optional<BoundingBox> clip_box(const BoundingBox& b, double w, double h);

// Minimal box containing every pixel's full extent (x_max = max x + 1).
// Throws std::invalid_argument on an empty set.
BoundingBox box_from_pixel_set(std::span<const Pixel> pixels);

}  // namespace steach::core
