#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bridgeland/rational.hpp"
#include "bridgeland/walls.hpp"

namespace bridgeland {

/// Rectangle [s_min, s_max] x [0, t_max] of the (s, t) half-plane.
struct RenderWindow {
    Rational s_min;
    Rational s_max;
    Rational t_max;
    std::int64_t pixels_per_unit = 100;
    bool axes = true;
    bool tick_labels = true;
    std::vector<Rational> guides;  // vertical guide lines at these s

    /// Throws std::invalid_argument unless s_min < s_max, t_max > 0 and
    /// pixels_per_unit >= 1.
    void validate() const;
};

/// SVG 1.1 document with one <path class="wall"> per wall meeting the
/// window, in input order, followed by axes, ticks and guides. The vertical
/// axis is t = sqrt(u); this is the only place exact values become floats.
/// Output is byte-for-byte deterministic.
[[nodiscard]] std::string render_walls_svg(const std::vector<Wall>& walls, const RenderWindow& window);

/// Fixed 6-decimal formatting used for every coordinate.
[[nodiscard]] std::string format_coordinate(double value);

}  // namespace bridgeland
