#pragma once

#include <string>

#include "handeye/frame.hpp"

namespace handeye {

// Binary PPM (P6, maxval 255) reader. Throws IoError on unreadable files,
// non-P6 magics, and truncated payloads ("corrupt image").
Frame load_frame(const std::string& path);

// Writes binary PPM. Values are quantized with round(v * 255) after
// clamping to [0, 1].
void save_frame(const Frame& frame, const std::string& path);

inline unsigned char quantize_u8(float v) {
    const float c = v < 0.0f ? 0.0f : (v > 1.0f ? 1.0f : v);
    return static_cast<unsigned char>(c * 255.0f + 0.5f);
}

}  // namespace handeye
