#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace corrpm {

/// Per-pixel part category map, values in {0..q-1}, row-major.
struct LabelMask {
    std::size_t h = 0, w = 0;
    std::vector<std::uint8_t> labels;

    LabelMask() = default;
    LabelMask(std::size_t h_, std::size_t w_, std::uint8_t fill = 0)
        : h(h_), w(w_), labels(h_ * w_, fill) {}

    std::uint8_t& at(std::size_t r, std::size_t c) { return labels[r * w + c]; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return labels[r * w + c]; }
    std::size_t pixels() const { return labels.size(); }

    bool operator==(const LabelMask& o) const {
        return h == o.h && w == o.w && labels == o.labels;
    }
};

/// Binary boundary map, 1 on pixels that border a different part.
struct EdgeMask {
    std::size_t h = 0, w = 0;
    std::vector<std::uint8_t> edges;

    EdgeMask() = default;
    EdgeMask(std::size_t h_, std::size_t w_) : h(h_), w(w_), edges(h_ * w_, 0) {}

    std::uint8_t& at(std::size_t r, std::size_t c) { return edges[r * w + c]; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return edges[r * w + c]; }

    bool operator==(const EdgeMask& o) const { return h == o.h && w == o.w && edges == o.edges; }
};

struct Keypoint {
    double x = 0.0;
    double y = 0.0;
    bool visible = false;
};

/// Ordered list of J body keypoints in pixel coordinates (x right, y down).
struct KeypointSet {
    std::vector<Keypoint> points;

    std::size_t size() const { return points.size(); }
    Keypoint& operator[](std::size_t i) { return points[i]; }
    const Keypoint& operator[](std::size_t i) const { return points[i]; }

    bool operator==(const KeypointSet& o) const {
        if (points.size() != o.points.size()) return false;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i].x != o.points[i].x || points[i].y != o.points[i].y ||
                points[i].visible != o.points[i].visible)
                return false;
        }
        return true;
    }
};

} // namespace corrpm
