#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "hopfbloch/quaternion.hpp"

namespace hopfbloch {

enum class Qubit { A, B };

constexpr Qubit other(Qubit q) { return q == Qubit::A ? Qubit::B : Qubit::A; }
constexpr char label(Qubit q) { return q == Qubit::A ? 'A' : 'B'; }

enum class NormPolicy {
    renormalize,  // rescale any nonzero vector onto the unit sphere
    strict,       // keep the amplitudes as given; |psi| must be 1 within kNormTolerance
};

inline constexpr double kNormTolerance = 1e-9;

/// Pure state alpha|00> + beta|01> + gamma|10> + delta|11>; qubit A is the
/// left (most significant) factor. Always unit norm. Global phase is kept.
class TwoQubitState {
public:
    /// |00>.
    TwoQubitState() = default;

    /// Throws NotNormalizable when |psi| < 1e-12, and NormOutOfTolerance under
    /// the strict policy when |psi| is off from one by more than kNormTolerance.
    static TwoQubitState from_amplitudes(ComplexK alpha, ComplexK beta, ComplexK gamma, ComplexK delta,
                                         NormPolicy policy = NormPolicy::renormalize);
    static TwoQubitState from_amplitudes(const std::array<ComplexK, 4>& amps,
                                         NormPolicy policy = NormPolicy::renormalize);

    /// "00", "01", "10" or "11".
    static TwoQubitState basis(std::string_view bits);
    /// "phi+", "phi-", "psi+" or "psi-".
    static TwoQubitState bell(std::string_view name);
    /// psi_A (x) psi_B; the factors may be unnormalized.
    static TwoQubitState product(const std::array<ComplexK, 2>& qubit_a, const std::array<ComplexK, 2>& qubit_b);

    const ComplexK& alpha() const { return amps_[0]; }
    const ComplexK& beta() const { return amps_[1]; }
    const ComplexK& gamma() const { return amps_[2]; }
    const ComplexK& delta() const { return amps_[3]; }
    const std::array<ComplexK, 4>& amplitudes() const { return amps_; }

    /// Amplitude of |ab>.
    const ComplexK& amplitude(int a, int b) const { return amps_[2 * a + b]; }

    friend bool operator==(const TwoQubitState&, const TwoQubitState&) = default;

private:
    explicit TwoQubitState(const std::array<ComplexK, 4>& amps) : amps_(amps) {}

    std::array<ComplexK, 4> amps_{ComplexK{1.0, 0.0}, {}, {}, {}};
};

double max_amplitude_error(const TwoQubitState& a, const TwoQubitState& b);

/// 2x2 single-qubit density matrix, row-major: rho[r][c] = <r|rho|c>.
struct DensityMatrix {
    std::array<std::array<ComplexK, 2>, 2> m{};

    const ComplexK& operator()(int r, int c) const { return m[r][c]; }
    ComplexK& operator()(int r, int c) { return m[r][c]; }

    ComplexK trace() const { return m[0][0] + m[1][1]; }
    /// Tr(rho^2), real for Hermitian rho.
    double purity() const;
};

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b);

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

/// Partial trace over the other qubit by direct summation.
DensityMatrix reduced_density(const TwoQubitState& s, Qubit keep);

/// 2|alpha delta - beta gamma|.
double concurrence_det(const TwoQubitState& s);

/// sqrt(2 (1 - Tr rho^2)); small negative radicands (>= -1e-12) clamp to zero,
/// anything below throws NegativeRadicand.
double concurrence_from_rho(const DensityMatrix& rho);

/// sqrt(2 Tr rho^2 - 1). Complementary to the concurrence: d^2 + c^2 = 1.
double coherence_d(const DensityMatrix& rho);

/// (2 Re rho10, 2 Im rho10, rho00 - rho11).
BlochVector bloch_vector(const DensityMatrix& rho);

/// Haar-uniform on S^7: eight standard normals, normalized. Deterministic per seed.
TwoQubitState random_state(std::uint64_t seed);

}  // namespace hopfbloch
