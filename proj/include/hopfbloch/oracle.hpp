#pragma once

// Brute-force reference quantities computed straight from the amplitude
// vector. Nothing here may depend on the Hopf machinery.

#include "hopfbloch/state.hpp"

namespace hopfbloch::oracle {

/// Partial trace of the explicit 4x4 outer product |psi><psi|.
DensityMatrix reduced_density(const TwoQubitState& s, Qubit keep);

/// 2 |alpha delta - beta gamma|.
double concurrence(const TwoQubitState& s);

}  // namespace hopfbloch::oracle
