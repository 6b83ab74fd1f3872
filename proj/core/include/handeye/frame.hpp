#pragma once

#include <cstddef>
#include <vector>

namespace handeye {

// H x W x 3 raster image, row-major with interleaved RGB channels.
// Values live in [0, 1]; disk representation is 8-bit (see image_io).
struct Frame {
    int height = 0;
    int width = 0;
    std::vector<float> data;  // height * width * 3

    Frame() = default;
    Frame(int h, int w, float fill = 0.0f)
        : height(h), width(w), data(static_cast<std::size_t>(h) * w * 3, fill) {}

    float& at(int y, int x, int c) { return data[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
    float at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }

    std::size_t value_count() const { return data.size(); }
    bool same_shape(const Frame& o) const { return height == o.height && width == o.width; }
};

}  // namespace handeye
