#pragma once
#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "snn/network.hpp"

namespace snn {

// One cycle of ground truth for all six neurons, layer 1 first.
// Values are computed in wide integer arithmetic with explicit clamps and
// stored post-reset, so membrane is 0 in a spike cycle.
struct OracleRecord {
    std::array<int, kNeuronCount> membrane{};
    std::array<int, kNeuronCount> refractory{};
    std::array<bool, kNeuronCount> spike{};
};

using OracleTrace = std::vector<OracleRecord>;

// Literal interpreter of the neuron update equations, independent of the
// cycle-accurate model: no arithmetic helpers are shared, so a bug has to be
// made twice to go unnoticed in differential runs.
std::vector<std::pair<int, bool>> oracle_neuron_trace(NeuronParams params,
                                                      std::span<const uint8_t> currents);

// Same interpreter applied to the two-layer network, with layer 2 driven by
// the previous cycle's layer-1 spikes.
OracleTrace oracle_network_trace(const WeightMatrix& weights, NeuronParams params,
                                 std::span<const std::array<uint8_t, kLayerSize>> externals);

}  // namespace snn
