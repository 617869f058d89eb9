#include "steach/simworld/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steach/common/rng.hpp"

namespace steach::simworld {

namespace {

constexpr double kBackgroundDepth = 3.8;
constexpr std::uint16_t kObjectId = 1;

struct RasterBuffers {
    int w = 0, h = 0;
    std::vector<float> depth;
    std::vector<std::uint8_t> rgb;
    std::vector<std::uint16_t> id;

    RasterBuffers(int width, int height) : w(width), h(height) {
        const std::size_t n = static_cast<std::size_t>(w) * h;
        depth.assign(n, static_cast<float>(kBackgroundDepth));
        rgb.assign(n * 3, 0);
        id.assign(n, 0);
    }

    void put(int x, int y, double z, const std::array<std::uint8_t, 3>& c,
             std::uint16_t sid) {
        const std::size_t i = static_cast<std::size_t>(y) * w + x;
        if (z >= depth[i]) return;
        depth[i] = static_cast<float>(z);
        rgb[i * 3] = c[0];
        rgb[i * 3 + 1] = c[1];
        rgb[i * 3 + 2] = c[2];
        id[i] = sid;
    }
};

void fill_background(RasterBuffers& buf) {
    for (int y = 0; y < buf.h; ++y) {
        const auto g = static_cast<std::uint8_t>(112 + (y * 14) / buf.h);
        for (int x = 0; x < buf.w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * buf.w + x;
            buf.rgb[i * 3] = g;
            buf.rgb[i * 3 + 1] = g;
            buf.rgb[i * 3 + 2] = static_cast<std::uint8_t>(g + 4);
        }
    }
}

struct PixelSpan {
    int x0, x1, y0, y1;  // inclusive
    bool empty() const { return x0 > x1 || y0 > y1; }
};

PixelSpan clip_span(double u0, double u1, double v0, double v1, int w, int h) {
    PixelSpan s;
    s.x0 = std::max(0, static_cast<int>(std::floor(u0)));
    s.x1 = std::min(w - 1, static_cast<int>(std::ceil(u1)));
    s.y0 = std::max(0, static_cast<int>(std::floor(v0)));
    s.y1 = std::min(h - 1, static_cast<int>(std::ceil(v1)));
    return s;
}

void raster_rect(RasterBuffers& buf, const core::CameraIntrinsics& cam,
                 const Surface& s) {
    // project the four x-extremes at their own depth to bound the pixel span
    const double xl = s.center.x() - s.half_w, xr = s.center.x() + s.half_w;
    const double zl = s.depth_at(xl), zr = s.depth_at(xr);
    if (zl <= 0.05 || zr <= 0.05) return;
    const double u0 = std::min(cam.cx + cam.focal * xl / zl,
                               cam.cx + cam.focal * xr / zr);
    const double u1 = std::max(cam.cx + cam.focal * xl / zl,
                               cam.cx + cam.focal * xr / zr);
    const double zmin = std::min(zl, zr), zmax = std::max(zl, zr);
    const double ya = s.center.y() - s.half_h, yb = s.center.y() + s.half_h;
    const double v_cand[4] = {cam.cy + cam.focal * ya / zmin,
                              cam.cy + cam.focal * ya / zmax,
                              cam.cy + cam.focal * yb / zmin,
                              cam.cy + cam.focal * yb / zmax};
    const double v0 = *std::min_element(v_cand, v_cand + 4);
    const double v1 = *std::max_element(v_cand, v_cand + 4);
    const PixelSpan span = clip_span(u0, u1, v0, v1, buf.w, buf.h);
    if (span.empty()) return;

    for (int px = span.x0; px <= span.x1; ++px) {
        // invert u = cx + f*x/z(x) with z linear in x
        const double du = px + 0.5 - cam.cx;
        const double denom = cam.focal - du * s.z_slope;
        if (std::abs(denom) < 1e-9) continue;
        const double x =
            du * (s.center.z() - s.z_slope * s.center.x()) / denom;
        if (std::abs(x - s.center.x()) > s.half_w) continue;
        const double z = s.depth_at(x);
        if (z <= 0.05) continue;
        for (int py = span.y0; py <= span.y1; ++py) {
            const double y = (py + 0.5 - cam.cy) * z / cam.focal;
            if (std::abs(y - s.center.y()) > s.half_h) continue;
            buf.put(px, py, z, s.color, s.id);
        }
    }
}

void raster_disc(RasterBuffers& buf, const core::CameraIntrinsics& cam,
                 const Surface& s) {
    const double z = s.center.z();
    if (z <= 0.05) return;
    const double r_px = cam.focal * s.radius / z;
    const Eigen::Vector2d c = cam.project(s.center);
    const PixelSpan span = clip_span(c.x() - r_px, c.x() + r_px, c.y() - r_px,
                                     c.y() + r_px, buf.w, buf.h);
    if (span.empty()) return;
    for (int py = span.y0; py <= span.y1; ++py)
        for (int px = span.x0; px <= span.x1; ++px) {
            const double x = (px + 0.5 - cam.cx) * z / cam.focal;
            const double y = (py + 0.5 - cam.cy) * z / cam.focal;
            const double dx = x - s.center.x(), dy = y - s.center.y();
            if (dx * dx + dy * dy <= s.radius * s.radius)
                buf.put(px, py, z, s.color, s.id);
        }
}

void raster_segment(RasterBuffers& buf, const core::CameraIntrinsics& cam,
                    const Surface& s) {
    if (s.a.z() <= 0.05 || s.b.z() <= 0.05) return;
    const Eigen::Vector2d pa = cam.project(s.a), pb = cam.project(s.b);
    const double max_hw_px =
        cam.focal * s.half_width / std::min(s.a.z(), s.b.z()) + 1.0;
    const PixelSpan span = clip_span(
        std::min(pa.x(), pb.x()) - max_hw_px, std::max(pa.x(), pb.x()) + max_hw_px,
        std::min(pa.y(), pb.y()) - max_hw_px, std::max(pa.y(), pb.y()) + max_hw_px,
        buf.w, buf.h);
    if (span.empty()) return;
    const Eigen::Vector2d d = pb - pa;
    const double len2 = d.squaredNorm();
    for (int py = span.y0; py <= span.y1; ++py)
        for (int px = span.x0; px <= span.x1; ++px) {
            const Eigen::Vector2d p(px + 0.5, py + 0.5);
            double t = len2 > 0 ? (p - pa).dot(d) / len2 : 0.0;
            t = std::clamp(t, 0.0, 1.0);
            const Eigen::Vector2d q = pa + t * d;
            const double z = s.a.z() + t * (s.b.z() - s.a.z());
            const double hw_px = cam.focal * s.half_width / z;
            if ((p - q).norm() <= hw_px) buf.put(px, py, z, s.color, s.id);
        }
}

void raster(RasterBuffers& buf, const core::CameraIntrinsics& cam,
            const Surface& s) {
    switch (s.kind) {
        case Surface::Kind::Rect: raster_rect(buf, cam, s); break;
        case Surface::Kind::Disc: raster_disc(buf, cam, s); break;
        case Surface::Kind::Segment: raster_segment(buf, cam, s); break;
    }
}

// Projects analytic keypoints, applies jitter/dropout, and drops off-frame
// points. Noise draws are consumed at a fixed rate so zero-noise scripts keep
// the same stream layout.
perception::KeypointSet observe_keypoints(const PersonPose& pose, int ref,
                                          const core::CameraIntrinsics& cam,
                                          const NoiseParams& noise, int w, int h,
                                          RandomEngine& rng) {
    perception::KeypointSet kp;
    kp.person_ref = ref;
    for (const auto& [name, p3] : person_keypoints3d(pose)) {
        const double n1 = rng.normal();
        const double n2 = rng.normal();
        const double u_drop = rng.uniform01();
        if (u_drop < noise.keypoint_dropout_prob) continue;
        const Eigen::Vector2d uv = cam.project(p3);
        const double x = uv.x() + noise.keypoint_jitter_sigma * n1;
        const double y = uv.y() + noise.keypoint_jitter_sigma * n2;
        if (x < 0 || x >= w || y < 0 || y >= h) continue;
        const double k = std::clamp(
            0.95 - 0.02 * noise.keypoint_jitter_sigma * (std::abs(n1) + std::abs(n2)),
            0.3, 1.0);
        kp.points[name] = {x, y, k};
    }
    return kp;
}

}  // namespace

SequenceRenderer::SequenceRenderer(ScenarioScript script)
    : script_(std::move(script)) {
    validate_script(script_);
}

std::optional<FrameRecord> SequenceRenderer::next() {
    if (next_index_ >= script_.n_frames) return std::nullopt;
    return render_frame(next_index_++);
}

FrameRecord SequenceRenderer::render_frame(std::uint32_t index) const {
    const auto& sc = script_;
    const double t = sc.frame_time(index);
    const auto& cam = sc.intrinsics;

    // teacher pose: scripted trajectory plus deterministic sway/bob
    Eigen::Vector3d torso = interpolate(sc.teacher.waypoints, t);
    torso.x() += sc.teacher.sway_amp *
                 std::sin(2.0 * std::numbers::pi * sc.teacher.sway_hz * t + 0.7);
    const double bob =
        sc.teacher.bob_amp *
        std::sin(2.0 * std::numbers::pi * sc.teacher.bob_hz * t + 1.9);

    PersonPose teacher;
    teacher.torso = torso;
    teacher.shape = sc.teacher.shape;
    teacher.gaze = sc.teacher.gaze_at(t);
    teacher.held = HeldArm{
        sc.teacher.held_hand,
        held_hand_position(torso, sc.object, sc.teacher.held_hand, bob)};

    RasterBuffers buf(sc.width, sc.height);
    fill_background(buf);

    for (const auto& s : person_surfaces(teacher, 200)) raster(buf, cam, s);
    raster(buf, cam,
           held_object_surface(sc.object, teacher.held->hand_pos,
                               sc.teacher.held_hand, kObjectId));

    std::vector<PersonPose> distractor_people;
    std::uint16_t next_id = 100;
    for (const auto& d : sc.distractors) {
        if (const auto* p = std::get_if<DistractorPerson>(&d)) {
            PersonPose pose;
            pose.torso = interpolate(p->waypoints, t);
            pose.shape = p->shape;
            pose.gaze = p->gaze;
            distractor_people.push_back(pose);
            for (const auto& s : person_surfaces(pose, static_cast<std::uint16_t>(
                                                           201 + distractor_people.size())))
                raster(buf, cam, s);
        } else {
            const auto& o = std::get<DistractorObject>(d);
            raster(buf, cam,
                   Surface::rect(interpolate(o.waypoints, t), o.width_m / 2.0,
                                 o.height_m / 2.0, o.color, next_id++));
        }
    }

    // truth before sensor noise
    GroundTruthRecord gt;
    gt.frame_index = index;
    gt.teacher_gaze = teacher.gaze;
    {
        std::vector<core::Pixel> obj_px;
        for (int y = 0; y < buf.h; ++y)
            for (int x = 0; x < buf.w; ++x)
                if (buf.id[static_cast<std::size_t>(y) * buf.w + x] == kObjectId)
                    obj_px.push_back({x, y});
        gt.object_pixels = static_cast<std::uint32_t>(obj_px.size());
        gt.object_visible = obj_px.size() >= 8;
        if (gt.object_visible) gt.true_object_box = core::box_from_pixel_set(obj_px);
    }

    core::RgbdFrame frame;
    frame.width = sc.width;
    frame.height = sc.height;
    frame.index = index;
    frame.timestamp = t;
    frame.rgb = std::move(buf.rgb);
    frame.depth = std::move(buf.depth);

    // depth sensor noise; separate stream per frame so keypoint noise is
    // unaffected by whether depth noise is enabled
    if (sc.noise.depth_sigma > 0 || sc.noise.invalid_depth_prob > 0) {
        RandomEngine rng = make_rng(sc.seed, 4ull * index);
        for (auto& d : frame.depth) {
            const double n = rng.normal();
            const double u = rng.uniform01();
            double z = d + sc.noise.depth_sigma * n;
            if (u < sc.noise.invalid_depth_prob) {
                d = 0.0f;
                continue;
            }
            z = std::clamp(z, core::RgbdFrame::kDepthMin + 1e-3,
                           static_cast<double>(core::RgbdFrame::kDepthMax));
            d = static_cast<float>(z);
        }
    }

    RandomEngine kp_rng = make_rng(sc.seed, 4ull * index + 1);
    gt.keypoints.push_back(observe_keypoints(teacher, 0, cam, sc.noise, sc.width,
                                             sc.height, kp_rng));
    gt.teacher_ref = 0;
    int ref = 1;
    for (const auto& pose : distractor_people)
        gt.keypoints.push_back(observe_keypoints(pose, ref++, cam, sc.noise,
                                                 sc.width, sc.height, kp_rng));

    return FrameRecord{std::move(frame), std::move(gt)};
}

std::vector<FrameRecord> render_sequence(const ScenarioScript& script) {
    SequenceRenderer r(script);
    std::vector<FrameRecord> out;
    out.reserve(script.n_frames);
    while (auto rec = r.next()) out.push_back(std::move(*rec));
    return out;
}

std::vector<GazeSample> make_gaze_dataset(int n_persons,
                                          const GazeDatasetCounts& counts,
                                          std::uint64_t seed) {
    std::vector<GazeSample> out;
    core::CameraIntrinsics cam;
    NoiseParams noise;
    noise.depth_sigma = 0.0;
    noise.keypoint_jitter_sigma = 1.0;
    noise.keypoint_dropout_prob = 0.02;
    noise.invalid_depth_prob = 0.0;

    for (int pid = 0; pid < n_persons; ++pid) {
        RandomEngine rng = make_rng(seed, 1000 + pid);
        PersonShape shape;
        shape.head_radius *= rng.uniform(0.85, 1.15);
        shape.interocular *= rng.uniform(0.85, 1.15);
        shape.eye_ellipse_a *= rng.uniform(0.8, 1.2);
        shape.eye_ellipse_b *= rng.uniform(0.8, 1.2);
        shape.eye_dy += rng.uniform(-0.02, 0.02);
        shape.ear_dx *= rng.uniform(0.9, 1.1);

        const auto emit = [&](GazeTarget g, int n) {
            for (int i = 0; i < n; ++i) {
                PersonPose pose;
                pose.shape = shape;
                pose.gaze = g;
                pose.torso = {rng.uniform(-0.25, 0.25), rng.uniform(0.0, 0.3),
                              rng.uniform(0.6, 2.2)};
                GazeSample s;
                s.keypoints =
                    observe_keypoints(pose, pid, cam, noise, 320, 240, rng);
                s.target = g;
                s.person_id = pid;
                out.push_back(std::move(s));
            }
        };
        emit(GazeTarget::AtRobot, counts.at_robot);
        emit(GazeTarget::AtLeftHand, counts.at_left_hand);
        emit(GazeTarget::AtRightHand, counts.at_right_hand);
        emit(GazeTarget::Away, counts.away);
    }
    return out;
}

}  // namespace steach::simworld
