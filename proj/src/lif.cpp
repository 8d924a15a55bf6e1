#include "snn/lif.hpp"

namespace snn {

NeuronState neuron_reset() { return NeuronState{}; }

uint8_t saturating_integrate(uint8_t membrane, uint8_t input_current, uint8_t leak) {
    int charge = static_cast<int>(membrane) + static_cast<int>(input_current);  // <= 510
    charge -= static_cast<int>(leak);
    if (charge < 0) charge = 0;
    if (charge > 255) charge = 255;
    return static_cast<uint8_t>(charge);
}

NeuronState neuron_step(NeuronState state, NeuronParams params, uint8_t input_current) {
    if (state.refractory_count > 0) {
        // Refractory hold: input is discarded, the counter burns down.
        return NeuronState{0, static_cast<uint8_t>(state.refractory_count - 1), false};
    }
    const uint8_t integrated = saturating_integrate(state.membrane, input_current, params.leak);
    if (integrated > params.threshold) {
        // The spike decision uses the fresh value; the stored membrane
        // resets in the same cycle.
        return NeuronState{0, params.refractory_period, true};
    }
    return NeuronState{integrated, 0, false};
}

}  // namespace snn
