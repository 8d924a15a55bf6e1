#pragma once
#include <cstdint>
#include <optional>
#include <string>

namespace snn {

// Differential run of the cycle-accurate network against the equation-level
// interpreter on seed-controlled random episodes.
struct DifferentialConfig {
    uint64_t episodes = 1000;
    uint32_t seed = 1;
    int cycles = 200;
};

struct Divergence {
    uint64_t episode = 0;
    uint64_t cycle = 0;
    int neuron = 0;  // 0..5, layer 1 first
    std::string detail;
};

// Returns the first divergence, or nullopt when every episode matches
// bit for bit.
std::optional<Divergence> run_differential(const DifferentialConfig& config);

}  // namespace snn
