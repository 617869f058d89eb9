#include "steach/simworld/script.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "steach/simworld/person.hpp"

namespace steach::simworld {

using nlohmann::json;

const char* to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::Constrained: return "constrained";
        case ScenarioKind::FromAfar: return "from-afar";
        case ScenarioKind::WithDistractors: return "with-distractors";
    }
    return "?";
}

const char* to_string(GazeTarget g) {
    switch (g) {
        case GazeTarget::AtRobot: return "at_robot";
        case GazeTarget::AtLeftHand: return "at_left_hand";
        case GazeTarget::AtRightHand: return "at_right_hand";
        case GazeTarget::Away: return "away";
    }
    return "?";
}

const char* to_string(Hand h) { return h == Hand::Left ? "left" : "right"; }

ScenarioKind scenario_kind_from_string(const std::string& s) {
    if (s == "constrained") return ScenarioKind::Constrained;
    if (s == "from-afar") return ScenarioKind::FromAfar;
    if (s == "with-distractors") return ScenarioKind::WithDistractors;
    throw std::invalid_argument("unknown scenario kind: " + s);
}

Hand hand_from_string(const std::string& s) {
    if (s == "left") return Hand::Left;
    if (s == "right") return Hand::Right;
    throw std::invalid_argument("unknown hand: " + s);
}

static GazeTarget gaze_from_string(const std::string& s) {
    if (s == "at_robot") return GazeTarget::AtRobot;
    if (s == "at_left_hand") return GazeTarget::AtLeftHand;
    if (s == "at_right_hand") return GazeTarget::AtRightHand;
    if (s == "away") return GazeTarget::Away;
    throw std::invalid_argument("unknown gaze target: " + s);
}

Eigen::Vector3d interpolate(const std::vector<Waypoint>& wps, double t) {
    if (wps.empty()) throw std::invalid_argument("empty waypoint list");
    if (t <= wps.front().t) return wps.front().pos;
    if (t >= wps.back().t) return wps.back().pos;
    for (std::size_t i = 1; i < wps.size(); ++i) {
        if (t <= wps[i].t) {
            const double span = wps[i].t - wps[i - 1].t;
            const double a = span > 0 ? (t - wps[i - 1].t) / span : 1.0;
            return wps[i - 1].pos + a * (wps[i].pos - wps[i - 1].pos);
        }
    }
    return wps.back().pos;
}

GazeTarget TeacherScript::gaze_at(double t) const {
    GazeTarget g = gaze_timeline.front().second;
    for (const auto& [tt, target] : gaze_timeline) {
        if (tt <= t) g = target;
        else break;
    }
    return g;
}

namespace {

double distractor_depth(const Distractor& d, double t) {
    if (const auto* p = std::get_if<DistractorPerson>(&d))
        return interpolate(p->waypoints, t).z();
    const auto& o = std::get<DistractorObject>(d);
    return interpolate(o.waypoints, t).z();
}

void check(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("scenario script: " + what);
}

}  // namespace

void validate_script(const ScenarioScript& script) {
    check(script.n_frames > 0, "n_frames must be positive");
    check(script.fps > 0, "fps must be positive");
    check(script.width > 0 && script.height > 0, "bad resolution");
    check(script.noise.valid(), "invalid noise parameters");
    check(!script.teacher.waypoints.empty(), "teacher has no waypoints");
    check(!script.teacher.gaze_timeline.empty(), "teacher has no gaze timeline");
    check(script.teacher.gaze_timeline.front().first <= 0.0,
          "gaze timeline must cover t=0");
    check(std::is_sorted(script.teacher.gaze_timeline.begin(),
                         script.teacher.gaze_timeline.end(),
                         [](auto& a, auto& b) { return a.first < b.first; }),
          "gaze timeline not sorted");
    check(size_class_consistent(script.object),
          "object size class inconsistent with extent");

    double dist_lo = 0.5, dist_hi = 0.8;
    if (script.kind != ScenarioKind::Constrained) {
        dist_lo = 1.7;
        dist_hi = 2.3;
    }
    bool distractor_ever_closer = false;
    for (std::uint32_t i = 0; i < script.n_frames; ++i) {
        const double t = script.frame_time(i);
        const double d = interpolate(script.teacher.waypoints, t).z();
        check(d >= dist_lo && d <= dist_hi, "teacher distance out of range for " +
                                                std::string(to_string(script.kind)));
        const double object_z = d - kHoldForward;
        check(object_z > core::RgbdFrame::kDepthMin + 0.02,
              "held object too close to the camera");
        for (const auto& dis : script.distractors)
            if (distractor_depth(dis, t) < object_z) distractor_ever_closer = true;
    }

    if (script.kind == ScenarioKind::WithDistractors) {
        check(!script.distractors.empty(), "with-distractors needs a distractor");
        check(distractor_ever_closer,
              "no distractor is ever closer than the held object");
    } else {
        check(script.distractors.empty(),
              "distractors only allowed in with-distractors");
    }
}

ScenarioScript make_scenario(ScenarioKind kind, const std::string& object_label,
                             std::uint64_t seed, std::uint32_t n_frames,
                             double fps, std::optional<NoiseParams> noise) {
    ScenarioScript s;
    s.kind = kind;
    s.object = object_by_label(object_label);
    s.seed = seed;
    s.fps = fps;
    s.n_frames = n_frames;
    if (noise) s.noise = *noise;

    const double distance = kind == ScenarioKind::Constrained ? 0.65 : 2.0;
    s.teacher.held_hand = Hand::Right;
    s.teacher.identity = 0;
    const Eigen::Vector3d torso = torso_for_object_at(
        Eigen::Vector3d(0, 0, 0), s.object, s.teacher.held_hand, distance);
    s.teacher.waypoints = {{0.0, torso}};
    s.teacher.gaze_timeline = {
        {0.0, GazeTarget::AtRobot},
        {2.6, s.teacher.held_hand == Hand::Right ? GazeTarget::AtRightHand
                                                 : GazeTarget::AtLeftHand}};
    s.teacher.speech_events = {{1.9, "learn " + object_label}};

    if (kind == ScenarioKind::WithDistractors) {
        DistractorObject box;
        box.waypoints = {{0.0, {-0.45, 0.05, 1.15}},
                         {s.duration(), {-0.42, 0.05, 1.05}}};
        box.width_m = 0.25;
        box.height_m = 0.30;
        box.color = {90, 90, 90};
        s.distractors.emplace_back(box);

        DistractorPerson bystander;
        bystander.waypoints = {{0.0, {0.5, 0.25, 2.4}}};
        bystander.identity = 1;
        bystander.gaze = GazeTarget::Away;
        s.distractors.emplace_back(bystander);
    }
    validate_script(s);
    return s;
}

ScenarioScript make_session_scenario(ScenarioKind kind,
                                     const std::string& object_label,
                                     std::uint64_t seed,
                                     std::uint32_t acquire_frames, double fps) {
    ScenarioScript s = make_scenario(kind, object_label, seed,
                                     acquire_frames + 40, fps);
    s.teacher.speech_events = {{1.9, "learn " + object_label},
                               {3.4, "learn " + object_label},
                               {4.9, "learn " + object_label}};
    return s;
}

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::invalid_argument("unknown key '" + it.key() + "' in " +
                                        where);
}

json waypoints_to_json(const std::vector<Waypoint>& wps) {
    json arr = json::array();
    for (const auto& w : wps)
        arr.push_back({{"t", w.t}, {"pos", {w.pos.x(), w.pos.y(), w.pos.z()}}});
    return arr;
}

std::vector<Waypoint> waypoints_from_json(const json& arr) {
    std::vector<Waypoint> out;
    for (const auto& j : arr) {
        reject_unknown_keys(j, {"t", "pos"}, "waypoint");
        Waypoint w;
        w.t = j.at("t").get<double>();
        const auto& p = j.at("pos");
        w.pos = {p.at(0).get<double>(), p.at(1).get<double>(),
                 p.at(2).get<double>()};
        out.push_back(w);
    }
    return out;
}

}  // namespace

std::string scenario_to_json(const ScenarioScript& s) {
    json j;
    j["kind"] = to_string(s.kind);
    j["seed"] = s.seed;
    j["fps"] = s.fps;
    j["n_frames"] = s.n_frames;
    j["width"] = s.width;
    j["height"] = s.height;
    j["focal"] = s.intrinsics.focal;
    j["object"] = s.object.label;
    j["noise"] = {{"depth_sigma", s.noise.depth_sigma},
                  {"keypoint_jitter_sigma", s.noise.keypoint_jitter_sigma},
                  {"keypoint_dropout_prob", s.noise.keypoint_dropout_prob},
                  {"invalid_depth_prob", s.noise.invalid_depth_prob}};

    json teacher;
    teacher["held_hand"] = to_string(s.teacher.held_hand);
    teacher["identity"] = s.teacher.identity;
    teacher["waypoints"] = waypoints_to_json(s.teacher.waypoints);
    json gaze = json::array();
    for (const auto& [t, g] : s.teacher.gaze_timeline)
        gaze.push_back({{"t", t}, {"target", to_string(g)}});
    teacher["gaze"] = gaze;
    json speech = json::array();
    for (const auto& [t, u] : s.teacher.speech_events)
        speech.push_back({{"t", t}, {"utterance", u}});
    teacher["speech"] = speech;
    teacher["sway_amp"] = s.teacher.sway_amp;
    teacher["sway_hz"] = s.teacher.sway_hz;
    teacher["bob_amp"] = s.teacher.bob_amp;
    teacher["bob_hz"] = s.teacher.bob_hz;
    j["teacher"] = teacher;

    json distractors = json::array();
    for (const auto& d : s.distractors) {
        if (const auto* p = std::get_if<DistractorPerson>(&d)) {
            distractors.push_back({{"type", "person"},
                                   {"waypoints", waypoints_to_json(p->waypoints)},
                                   {"identity", p->identity},
                                   {"gaze", to_string(p->gaze)}});
        } else {
            const auto& o = std::get<DistractorObject>(d);
            distractors.push_back(
                {{"type", "object"},
                 {"waypoints", waypoints_to_json(o.waypoints)},
                 {"width_m", o.width_m},
                 {"height_m", o.height_m},
                 {"color", {o.color[0], o.color[1], o.color[2]}}});
        }
    }
    j["distractors"] = distractors;
    return j.dump(2) + "\n";
}

ScenarioScript scenario_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    reject_unknown_keys(j,
                        {"kind", "seed", "fps", "n_frames", "width", "height",
                         "focal", "object", "noise", "teacher", "distractors"},
                        "scenario");
    ScenarioScript s;
    s.kind = scenario_kind_from_string(j.at("kind").get<std::string>());
    s.seed = j.at("seed").get<std::uint64_t>();
    if (j.count("fps")) s.fps = j.at("fps").get<double>();
    if (j.count("n_frames")) s.n_frames = j.at("n_frames").get<std::uint32_t>();
    if (j.count("width")) s.width = j.at("width").get<int>();
    if (j.count("height")) s.height = j.at("height").get<int>();
    if (j.count("focal")) s.intrinsics.focal = j.at("focal").get<double>();
    s.intrinsics.cx = s.width / 2.0;
    s.intrinsics.cy = s.height / 2.0;
    s.object = object_by_label(j.at("object").get<std::string>());

    if (j.count("noise")) {
        const auto& n = j.at("noise");
        reject_unknown_keys(n,
                            {"depth_sigma", "keypoint_jitter_sigma",
                             "keypoint_dropout_prob", "invalid_depth_prob"},
                            "noise");
        if (n.count("depth_sigma"))
            s.noise.depth_sigma = n.at("depth_sigma").get<double>();
        if (n.count("keypoint_jitter_sigma"))
            s.noise.keypoint_jitter_sigma =
                n.at("keypoint_jitter_sigma").get<double>();
        if (n.count("keypoint_dropout_prob"))
            s.noise.keypoint_dropout_prob =
                n.at("keypoint_dropout_prob").get<double>();
        if (n.count("invalid_depth_prob"))
            s.noise.invalid_depth_prob = n.at("invalid_depth_prob").get<double>();
    }

    const auto& t = j.at("teacher");
    reject_unknown_keys(t,
                        {"held_hand", "identity", "waypoints", "gaze", "speech",
                         "sway_amp", "sway_hz", "bob_amp", "bob_hz"},
                        "teacher");
    s.teacher.held_hand = hand_from_string(t.at("held_hand").get<std::string>());
    if (t.count("identity"))
        s.teacher.identity = t.at("identity").get<std::uint32_t>();
    s.teacher.waypoints = waypoints_from_json(t.at("waypoints"));
    for (const auto& g : t.at("gaze")) {
        reject_unknown_keys(g, {"t", "target"}, "gaze entry");
        s.teacher.gaze_timeline.emplace_back(
            g.at("t").get<double>(),
            gaze_from_string(g.at("target").get<std::string>()));
    }
    if (t.count("speech"))
        for (const auto& sp : t.at("speech")) {
            reject_unknown_keys(sp, {"t", "utterance"}, "speech entry");
            s.teacher.speech_events.emplace_back(
                sp.at("t").get<double>(), sp.at("utterance").get<std::string>());
        }
    if (t.count("sway_amp")) s.teacher.sway_amp = t.at("sway_amp").get<double>();
    if (t.count("sway_hz")) s.teacher.sway_hz = t.at("sway_hz").get<double>();
    if (t.count("bob_amp")) s.teacher.bob_amp = t.at("bob_amp").get<double>();
    if (t.count("bob_hz")) s.teacher.bob_hz = t.at("bob_hz").get<double>();

    if (j.count("distractors"))
        for (const auto& d : j.at("distractors")) {
            const std::string type = d.at("type").get<std::string>();
            if (type == "person") {
                reject_unknown_keys(d, {"type", "waypoints", "identity", "gaze"},
                                    "distractor");
                DistractorPerson p;
                p.waypoints = waypoints_from_json(d.at("waypoints"));
                if (d.count("identity"))
                    p.identity = d.at("identity").get<std::uint32_t>();
                if (d.count("gaze"))
                    p.gaze = gaze_from_string(d.at("gaze").get<std::string>());
                s.distractors.emplace_back(p);
            } else if (type == "object") {
                reject_unknown_keys(
                    d, {"type", "waypoints", "width_m", "height_m", "color"},
                    "distractor");
                DistractorObject o;
                o.waypoints = waypoints_from_json(d.at("waypoints"));
                o.width_m = d.at("width_m").get<double>();
                o.height_m = d.at("height_m").get<double>();
                if (d.count("color")) {
                    const auto& c = d.at("color");
                    o.color = {c.at(0).get<std::uint8_t>(),
                               c.at(1).get<std::uint8_t>(),
                               c.at(2).get<std::uint8_t>()};
                }
                s.distractors.emplace_back(o);
            } else {
                throw std::invalid_argument("unknown distractor type: " + type);
            }
        }

    validate_script(s);
    return s;
}

}  // namespace steach::simworld
