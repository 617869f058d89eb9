#include "steach/core/box.hpp"

#include <algorithm>

namespace steach::core {

double intersection_area(const BoundingBox& a, const BoundingBox& b) {
    const double w = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
    const double h = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
    if (w <= 0.0 || h <= 0.0) return 0.0;
    return w * h;
}

double iou(const BoundingBox& a, const BoundingBox& b) {
    const double inter = intersection_area(a, b);
    if (inter <= 0.0) return 0.0;
    const double uni = a.area() + b.area() - inter;
    return inter / uni;
}

std::optional<BoundingBox> clip_box(const BoundingBox& b, double w, double h) {
    BoundingBox c{std::max(b.x_min, 0.0), std::max(b.y_min, 0.0),
                  std::min(b.x_max, w), std::min(b.y_max, h)};
    if (!c.valid()) return std::nullopt;
    return c;
}

BoundingBox box_from_pixel_set(std::span<const Pixel> pixels) {
    if (pixels.empty())
        throw std::invalid_argument("box_from_pixel_set: empty pixel set");
    int x0 = pixels[0].x, x1 = pixels[0].x;
    int y0 = pixels[0].y, y1 = pixels[0].y;
    for (const auto& p : pixels) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return BoundingBox{static_cast<double>(x0), static_cast<double>(y0),
                       static_cast<double>(x1 + 1), static_cast<double>(y1 + 1)};
}

}  // namespace steach::core
