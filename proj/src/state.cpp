#include "hopfbloch/state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "hopfbloch/errors.hpp"

namespace hopfbloch {

namespace {

double checked_sqrt(double radicand, const char* what) {
    if (radicand < -1e-12) {
        std::ostringstream msg;
        msg.precision(17);
        msg << what << ": radicand " << radicand << " is negative; not a valid reduced density matrix";
        throw NegativeRadicand(msg.str());
    }
    return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace

TwoQubitState TwoQubitState::from_amplitudes(ComplexK alpha, ComplexK beta, ComplexK gamma, ComplexK delta,
                                             NormPolicy policy) {
    return from_amplitudes(std::array<ComplexK, 4>{alpha, beta, gamma, delta}, policy);
}

TwoQubitState TwoQubitState::from_amplitudes(const std::array<ComplexK, 4>& amps, NormPolicy policy) {
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    const double n = std::sqrt(n2);
    if (!(n >= 1e-12)) throw NotNormalizable("state vector has (near) zero norm");

    if (policy == NormPolicy::strict) {
        if (!(std::abs(n - 1.0) <= kNormTolerance)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "state norm " << n << " differs from 1 by more than " << kNormTolerance;
            throw NormOutOfTolerance(msg.str());
        }
        return TwoQubitState(amps);
    }

    std::array<ComplexK, 4> out = amps;
    for (auto& a : out) a /= n;
    return TwoQubitState(out);
}

TwoQubitState TwoQubitState::basis(std::string_view bits) {
    if (bits.size() != 2 || (bits[0] != '0' && bits[0] != '1') || (bits[1] != '0' && bits[1] != '1'))
        throw Error("basis label must be one of 00, 01, 10, 11; got '" + std::string(bits) + "'");
    std::array<ComplexK, 4> amps{};
    amps[2 * (bits[0] - '0') + (bits[1] - '0')] = 1.0;
    return TwoQubitState(amps);
}

TwoQubitState TwoQubitState::bell(std::string_view name) {
    const double r = 1.0 / std::sqrt(2.0);
    if (name == "phi+") return TwoQubitState({r, 0.0, 0.0, r});
    if (name == "phi-") return TwoQubitState({r, 0.0, 0.0, -r});
    if (name == "psi+") return TwoQubitState({0.0, r, r, 0.0});
    if (name == "psi-") return TwoQubitState({0.0, r, -r, 0.0});
    throw Error("Bell state must be one of phi+, phi-, psi+, psi-; got '" + std::string(name) + "'");
}

TwoQubitState TwoQubitState::product(const std::array<ComplexK, 2>& qubit_a, const std::array<ComplexK, 2>& qubit_b) {
    return from_amplitudes({qubit_a[0] * qubit_b[0], qubit_a[0] * qubit_b[1], qubit_a[1] * qubit_b[0],
                            qubit_a[1] * qubit_b[1]});
}

double max_amplitude_error(const TwoQubitState& a, const TwoQubitState& b) {
    double err = 0.0;
    for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    return err;
}

double DensityMatrix::purity() const {
    return std::norm(m[0][0]) + std::norm(m[1][1]) + std::norm(m[0][1]) + std::norm(m[1][0]);
}

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b) {
    double err = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) err = std::max(err, std::abs(a(r, c) - b(r, c)));
    return err;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

DensityMatrix reduced_density(const TwoQubitState& s, Qubit keep) {
    DensityMatrix rho;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            ComplexK sum{};
            for (int e = 0; e < 2; ++e) {
                sum += keep == Qubit::A ? s.amplitude(r, e) * std::conj(s.amplitude(c, e))
                                        : s.amplitude(e, r) * std::conj(s.amplitude(e, c));
            }
            rho(r, c) = sum;
        }
    }
    return rho;
}

double concurrence_det(const TwoQubitState& s) {
    return 2.0 * std::abs(s.alpha() * s.delta() - s.beta() * s.gamma());
}

double concurrence_from_rho(const DensityMatrix& rho) {
    return checked_sqrt(2.0 * (1.0 - rho.purity()), "concurrence");
}

double coherence_d(const DensityMatrix& rho) { return checked_sqrt(2.0 * rho.purity() - 1.0, "coherence d"); }

BlochVector bloch_vector(const DensityMatrix& rho) {
    return {2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

TwoQubitState random_state(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::array<ComplexK, 4> amps;
    for (auto& a : amps) {
        const double re = normal(rng);
        const double im = normal(rng);
        a = {re, im};
    }
    return TwoQubitState::from_amplitudes(amps);
}

}  // namespace hopfbloch
