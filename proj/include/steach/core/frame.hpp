#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace steach::core {

// Pinhole camera. Pixel (ix, iy) is sampled at its center (ix + 0.5, iy + 0.5).
struct CameraIntrinsics {
    double focal = 277.0;
    double cx = 160.0;
    double cy = 120.0;

    // continuous image coordinates of a 3D point (camera frame: x right,
    // y down, z forward)
    Eigen::Vector2d project(const Eigen::Vector3d& p) const {
        return {cx + focal * p.x() / p.z(), cy + focal * p.y() / p.z()};
    }

    // 3D point of pixel (ix, iy) at the given depth, sampled at pixel center
    Eigen::Vector3d back_project(int ix, int iy, double depth) const {
        return {(ix + 0.5 - cx) * depth / focal, (iy + 0.5 - cy) * depth / focal,
                depth};
    }
};

// Synchronized color + depth image. Depth is meters; 0.0 marks an invalid
// reading. Buffers are immutable after construction and safe to share.
struct RgbdFrame {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;  // width*height*3, row-major
    std::vector<float> depth;       // width*height, row-major
    double timestamp = 0.0;         // seconds, simulated clock
    std::uint32_t index = 0;        // sequence ordinal

    static constexpr float kDepthMin = 0.1f;   // exclusive
    static constexpr float kDepthMax = 10.0f;  // inclusive

    static bool depth_valid(float d) { return d > kDepthMin && d <= kDepthMax; }

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }
    float depth_at(int x, int y) const {
        return depth[static_cast<std::size_t>(y) * width + x];
    }
    std::array<std::uint8_t, 3> rgb_at(int x, int y) const {
        const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
        return {rgb[i], rgb[i + 1], rgb[i + 2]};
    }
};

}  // namespace steach::core
