#pragma once
#include <array>
#include <cstddef>
#include <cstdint>

#include "snn/lif.hpp"

namespace snn {

inline constexpr int kLayerSize = 3;
inline constexpr int kNeuronCount = 2 * kLayerSize;
inline constexpr int kWeightCount = kLayerSize * kLayerSize;

// Synaptic strengths from layer 1 into layer 2, flattened row-major:
// entry (dst*3 + src) is the weight from layer-1 neuron `src` to
// layer-2 neuron `dst`.
struct WeightMatrix {
    std::array<uint8_t, kWeightCount> flat{};

    uint8_t& at(int dst, int src) { return flat[static_cast<size_t>(dst * kLayerSize + src)]; }
    const uint8_t& at(int dst, int src) const {
        return flat[static_cast<size_t>(dst * kLayerSize + src)];
    }

    bool operator==(const WeightMatrix&) const = default;
};

// layer1_spikes_reg holds layer 1's spike outputs registered at the end of
// the previous cycle; layer 2 integrates those, one cycle behind.
struct NetworkState {
    std::array<NeuronState, kLayerSize> layer1{};
    std::array<NeuronState, kLayerSize> layer2{};
    std::array<bool, kLayerSize> layer1_spikes_reg{};

    bool operator==(const NetworkState&) const = default;
};

struct NetworkOutputs {
    std::array<bool, kLayerSize> layer1_spikes{};
    std::array<bool, kLayerSize> layer2_spikes{};
};

// current[i] = clamp(sum_j w[i][j] * spike[j], 0, 255)
std::array<uint8_t, kLayerSize> compute_layer2_currents(
    const WeightMatrix& weights, const std::array<bool, kLayerSize>& layer1_spikes);

NetworkState network_reset();

// One synchronous cycle for all six neurons. Layer 1 integrates the external
// currents; layer 2 integrates the weighted spikes registered on the previous
// cycle. Both layers share the same parameter set.
NetworkOutputs network_step(NetworkState& state, const WeightMatrix& weights,
                            NeuronParams params,
                            const std::array<uint8_t, kLayerSize>& external_currents);

}  // namespace snn
