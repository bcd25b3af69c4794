#pragma once

#include <cmath>
#include <numbers>

#include "hopfbloch/state.hpp"

namespace fixtures {

inline constexpr double kDeg = std::numbers::pi / 180.0;

// rx A 60 then cry A B 70 applied to |00>.
inline hopfbloch::TwoQubitState partial_state() {
    using hopfbloch::ComplexK;
    const double c30 = std::cos(30 * kDeg), s30 = std::sin(30 * kDeg);
    const double c35 = std::cos(35 * kDeg), s35 = std::sin(35 * kDeg);
    return hopfbloch::TwoQubitState::from_amplitudes(ComplexK{c30, 0}, ComplexK{0, 0}, ComplexK{0, -s30 * c35},
                                                     ComplexK{0, -s30 * s35}, hopfbloch::NormPolicy::strict);
}

inline const double kPartialConcurrence = std::sin(60 * kDeg) * std::sin(35 * kDeg);
inline const double kPartialAbsX4 = std::sin(60 * kDeg) * std::cos(35 * kDeg);

}  // namespace fixtures
