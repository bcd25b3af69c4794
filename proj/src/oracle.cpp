#include "hopfbloch/oracle.hpp"

#include <cmath>

namespace hopfbloch::oracle {

DensityMatrix reduced_density(const TwoQubitState& s, Qubit keep) {
    const auto& psi = s.amplitudes();
    ComplexK outer[4][4];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) outer[r][c] = psi[r] * std::conj(psi[c]);

    // Basis index is 2 a + b with a the qubit-A bit.
    DensityMatrix rho;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            ComplexK sum{};
            for (int j = 0; j < 2; ++j)
                sum += keep == Qubit::A ? outer[2 * i + j][2 * k + j] : outer[2 * j + i][2 * j + k];
            rho(i, k) = sum;
        }
    }
    return rho;
}

double concurrence(const TwoQubitState& s) {
    const auto& psi = s.amplitudes();
    return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

}  // namespace hopfbloch::oracle
