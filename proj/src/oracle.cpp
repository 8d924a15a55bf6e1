// Equation-level interpreter used as differential ground truth. Everything
// here is written out longhand in 64-bit arithmetic on purpose: it must not
// share any helper with the cycle-accurate model it checks.
#include "snn/oracle.hpp"

namespace snn {

namespace {

struct NaiveNeuron {
    int64_t membrane = 0;
    int64_t refractory = 0;
    bool spike = false;
};

// One step of the update equations: hold at zero through the refractory
// window, otherwise membrane' = max(current + membrane - leak, 0) capped at
// 255, with a strict threshold comparison and a same-cycle reset on spike.
NaiveNeuron naive_step(const NaiveNeuron& n, NeuronParams params, int64_t input_current) {
    NaiveNeuron next;
    if (n.refractory > 0) {
        next.membrane = 0;
        next.refractory = n.refractory - 1;
        next.spike = false;
        return next;
    }
    int64_t value = input_current + n.membrane - static_cast<int64_t>(params.leak);
    if (value < 0) {
        value = 0;
    }
    if (value > 255) {
        value = 255;
    }
    if (value > static_cast<int64_t>(params.threshold)) {
        next.membrane = 0;
        next.refractory = static_cast<int64_t>(params.refractory_period);
        next.spike = true;
    } else {
        next.membrane = value;
        next.refractory = 0;
        next.spike = false;
    }
    return next;
}

}  // namespace

std::vector<std::pair<int, bool>> oracle_neuron_trace(NeuronParams params,
                                                      std::span<const uint8_t> currents) {
    std::vector<std::pair<int, bool>> trace;
    trace.reserve(currents.size());
    NaiveNeuron neuron;
    for (uint8_t current : currents) {
        neuron = naive_step(neuron, params, static_cast<int64_t>(current));
        trace.emplace_back(static_cast<int>(neuron.membrane), neuron.spike);
    }
    return trace;
}

OracleTrace oracle_network_trace(const WeightMatrix& weights, NeuronParams params,
                                 std::span<const std::array<uint8_t, kLayerSize>> externals) {
    OracleTrace trace;
    trace.reserve(externals.size());

    std::array<NaiveNeuron, kLayerSize> layer1{};
    std::array<NaiveNeuron, kLayerSize> layer2{};
    std::array<bool, kLayerSize> prev_layer1_spikes{};

    for (const auto& external : externals) {
        // Layer-2 input currents: spikes of the previous cycle, weighted and
        // saturated at the 8-bit current port.
        std::array<int64_t, kLayerSize> layer2_currents{};
        for (int dst = 0; dst < kLayerSize; ++dst) {
            int64_t sum = 0;
            for (int src = 0; src < kLayerSize; ++src) {
                if (prev_layer1_spikes[static_cast<size_t>(src)]) {
                    sum += static_cast<int64_t>(weights.flat[static_cast<size_t>(dst * 3 + src)]);
                }
            }
            if (sum > 255) {
                sum = 255;
            }
            layer2_currents[static_cast<size_t>(dst)] = sum;
        }

        for (int k = 0; k < kLayerSize; ++k) {
            layer1[k] = naive_step(layer1[k], params, static_cast<int64_t>(external[k]));
        }
        for (int i = 0; i < kLayerSize; ++i) {
            layer2[i] = naive_step(layer2[i], params, layer2_currents[i]);
        }
        for (int k = 0; k < kLayerSize; ++k) {
            prev_layer1_spikes[k] = layer1[k].spike;
        }

        OracleRecord rec;
        for (int k = 0; k < kLayerSize; ++k) {
            rec.membrane[k] = static_cast<int>(layer1[k].membrane);
            rec.refractory[k] = static_cast<int>(layer1[k].refractory);
            rec.spike[k] = layer1[k].spike;
            rec.membrane[kLayerSize + k] = static_cast<int>(layer2[k].membrane);
            rec.refractory[kLayerSize + k] = static_cast<int>(layer2[k].refractory);
            rec.spike[kLayerSize + k] = layer2[k].spike;
        }
        trace.push_back(rec);
    }
    return trace;
}

}  // namespace snn
