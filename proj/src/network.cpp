#include "snn/network.hpp"

namespace snn {

std::array<uint8_t, kLayerSize> compute_layer2_currents(
    const WeightMatrix& weights, const std::array<bool, kLayerSize>& layer1_spikes) {
    std::array<uint8_t, kLayerSize> currents{};
    for (int dst = 0; dst < kLayerSize; ++dst) {
        int sum = 0;
        for (int src = 0; src < kLayerSize; ++src) {
            if (layer1_spikes[static_cast<size_t>(src)]) {
                sum += weights.at(dst, src);
            }
        }
        currents[static_cast<size_t>(dst)] = static_cast<uint8_t>(sum > 255 ? 255 : sum);
    }
    return currents;
}

NetworkState network_reset() { return NetworkState{}; }

NetworkOutputs network_step(NetworkState& state, const WeightMatrix& weights,
                            NeuronParams params,
                            const std::array<uint8_t, kLayerSize>& external_currents) {
    NetworkOutputs out;

    // Layer-2 currents come from the spikes registered on the previous cycle,
    // read before anything updates.
    const auto layer2_currents = compute_layer2_currents(weights, state.layer1_spikes_reg);

    for (int k = 0; k < kLayerSize; ++k) {
        state.layer1[k] = neuron_step(state.layer1[k], params, external_currents[k]);
        out.layer1_spikes[k] = state.layer1[k].spiked;
    }
    for (int i = 0; i < kLayerSize; ++i) {
        state.layer2[i] = neuron_step(state.layer2[i], params, layer2_currents[i]);
        out.layer2_spikes[i] = state.layer2[i].spiked;
    }
    state.layer1_spikes_reg = out.layer1_spikes;
    return out;
}

}  // namespace snn
