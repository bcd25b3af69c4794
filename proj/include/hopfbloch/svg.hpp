#pragma once

#include <string>

#include "hopfbloch/hopf.hpp"
#include "hopfbloch/output.hpp"

namespace hopfbloch {

/// Oblique orthographic camera used for every sphere (degrees).
struct Camera {
    double azimuth_deg;
    double elevation_deg;
};

inline constexpr Camera kSphereCamera{30.0, 20.0};

inline constexpr double kCanvasWidth = 900.0;
inline constexpr double kRowHeight = 340.0;

/// Three spheres in a row (base, entanglement, fiber) per selected assignment.
/// Byte-identical for identical input.
std::string render_svg(const TwoQubitState& s, AssignmentSelection sel, const std::string& title = "");

}  // namespace hopfbloch
