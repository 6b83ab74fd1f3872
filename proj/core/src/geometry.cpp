#include "handeye/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "handeye/errors.hpp"

namespace handeye {

const char* action_name(Action a) {
    switch (a) {
        case Action::ShiftLeft: return "shift_left";
        case Action::ShiftRight: return "shift_right";
        case Action::ShiftUp: return "shift_up";
        case Action::ShiftDown: return "shift_down";
        case Action::ZoomIn: return "zoom_in";
        case Action::ZoomOut: return "zoom_out";
        case Action::NoOp: return "noop";
    }
    return "?";
}

Action action_from_name(const std::string& name) {
    for (Action a : all_actions()) {
        if (name == action_name(a)) return a;
    }
    throw ConfigError("unknown action name: " + name);
}

double jaccard(const BoundingBox& a, const BoundingBox& b) {
    if (a.w <= 0.0 || b.w <= 0.0) {
        throw RuntimeFault("jaccard: boxes must have positive width");
    }
    const double ix = std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
    const double iy = std::min(a.y + a.w, b.y + b.w) - std::max(a.y, b.y);
    if (ix <= 0.0 || iy <= 0.0) return 0.0;
    const double inter = ix * iy;
    const double uni = a.w * a.w + b.w * b.w - inter;
    return inter / uni;
}

bool box_legal(const BoundingBox& b, const TransitionConfig& cfg) {
    const double s = static_cast<double>(cfg.image_size);
    return b.w >= cfg.w_min && b.w <= cfg.w_max && b.x >= 0.0 && b.y >= 0.0 && b.x + b.w <= s &&
           b.y + b.w <= s;
}

BoundingBox transition(const BoundingBox& box, Action action, double sigma,
                       const TransitionConfig& cfg) {
    if (sigma < cfg.sigma_min || sigma > cfg.sigma_max) {
        throw RuntimeFault("transition: sigma outside [sigma_min, sigma_max]");
    }
    const double d = sigma * box.w;
    BoundingBox cand = box;
    switch (action) {
        case Action::ShiftLeft: cand.x -= d; break;
        case Action::ShiftRight: cand.x += d; break;
        case Action::ShiftUp: cand.y -= d; break;
        case Action::ShiftDown: cand.y += d; break;
        case Action::ZoomIn:
            cand.w -= d;
            cand.x += d / 2.0;
            cand.y += d / 2.0;
            break;
        case Action::ZoomOut:
            cand.w += d;
            cand.x -= d / 2.0;
            cand.y -= d / 2.0;
            break;
        case Action::NoOp: return box;
    }
    return box_legal(cand, cfg) ? cand : box;
}

double sample_sigma(const TransitionConfig& cfg, Rng& rng) {
    return rng.uniform(cfg.sigma_min, cfg.sigma_max);
}

}  // namespace handeye
