#pragma once
#include <cstdint>

namespace snn {

// Shared programmable neuron parameters. All three are byte-wide registers.
struct NeuronParams {
    uint8_t threshold = 0;          // spike when membrane strictly exceeds this
    uint8_t leak = 0;               // current units drained per cycle
    uint8_t refractory_period = 0;  // cycles the membrane is held at zero after a spike
};

// One neuron's registered state after a clock step.
// Invariants: refractory_count > 0 implies membrane == 0;
//             spiked implies membrane == 0 (reset happens in the spike cycle).
struct NeuronState {
    uint8_t membrane = 0;
    uint8_t refractory_count = 0;
    bool spiked = false;

    bool operator==(const NeuronState&) const = default;
};

NeuronState neuron_reset();

// clamp(membrane + input_current - leak, 0, 255), evaluated wide enough that
// nothing wraps: sum first, subtract the leak with a floor at zero, cap at 255.
uint8_t saturating_integrate(uint8_t membrane, uint8_t input_current, uint8_t leak);

// One synchronous clock step. A neuron in refractory ignores its input, holds
// the membrane at zero and burns one counter cycle. Otherwise it integrates,
// fires on a strict threshold crossing, and re-arms the refractory counter.
NeuronState neuron_step(NeuronState state, NeuronParams params, uint8_t input_current);

}  // namespace snn
