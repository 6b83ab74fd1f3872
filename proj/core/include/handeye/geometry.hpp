#pragma once

#include <array>
#include <string>

#include "handeye/rng.hpp"

namespace handeye {

// Square region of interest in continuous image coordinates.
// (x, y) is the top-left corner, w the side length in pixels.
struct BoundingBox {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;

    double center_x() const { return x + w / 2.0; }
    double center_y() const { return y + w / 2.0; }
};

// The seven discrete actions shared by the RoI environment and the
// workspace camera (shift <-> translate, zoom <-> move along the axis).
enum class Action {
    ShiftLeft = 0,
    ShiftRight = 1,
    ShiftUp = 2,
    ShiftDown = 3,
    ZoomIn = 4,
    ZoomOut = 5,
    NoOp = 6,
};

inline constexpr int kNumActions = 7;

const char* action_name(Action a);
Action action_from_name(const std::string& name);  // throws ConfigError on unknown name

inline constexpr std::array<Action, kNumActions> all_actions() {
    return {Action::ShiftLeft, Action::ShiftRight, Action::ShiftUp, Action::ShiftDown,
            Action::ZoomIn,    Action::ZoomOut,    Action::NoOp};
}

struct TransitionConfig {
    double sigma_min = 0.05;
    double sigma_max = 0.15;
    int image_size = 360;
    double w_min = 20.0;
    double w_max = 360.0;
};

// Intersection area over union area, continuous coordinates.
// Throws RuntimeFault when either width is not positive.
double jaccard(const BoundingBox& a, const BoundingBox& b);

// A box is legal when it lies fully inside the image and its width is
// within [w_min, w_max] (bounds inclusive on both sides).
bool box_legal(const BoundingBox& b, const TransitionConfig& cfg);

// Applies one action with displacement sigma * w. Shifts move the box,
// zooms shrink/grow it about its center. When the candidate box would be
// illegal the move is voided and the input box is returned unchanged.
BoundingBox transition(const BoundingBox& box, Action action, double sigma,
                       const TransitionConfig& cfg);

// Uniform sample of the per-step displacement ratio.
double sample_sigma(const TransitionConfig& cfg, Rng& rng);

}  // namespace handeye
