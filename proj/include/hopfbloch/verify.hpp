#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hopfbloch {

struct InvariantResult {
    std::string name;
    std::size_t samples = 0;
    double max_error = 0.0;
    double threshold = 0.0;
    bool passed = true;
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<InvariantResult> invariants;

    bool passed() const;
    std::size_t failures() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20200803;
inline constexpr std::size_t kDefaultSamples = 10000;

/// Runs every library invariant against `samples` Haar-random states (and
/// derived random gates). Throws std::invalid_argument when samples == 0.
VerificationReport run_suite(std::uint64_t seed, std::size_t samples);

nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace hopfbloch
