#include "snn/chip.hpp"

#include "snn/io.hpp"

namespace snn {

ChipState chip_reset() { return ChipState{}; }

ChipOutputs chip_step(ChipState& chip, const ChipInputs& inputs) {
    if (inputs.reset) {
        // Synchronous, dominant reset: the whole chip returns to the reset
        // state and no outputs are asserted this cycle.
        chip = chip_reset();
        return ChipOutputs{};
    }

    // Register contents as of the start of the cycle; a write landing this
    // cycle is not visible to the network until the next one.
    const RegisterView view = regfile_view(chip.rf);

    const auto event = spi_sample(chip.spi, inputs.lines);
    if (event) {
        regfile_write(chip.rf, *event);
    }

    const NetworkOutputs net_out =
        network_step(chip.net, view.weights, view.params, inputs.external_currents);

    chip.cycle += 1;
    return ChipOutputs{net_out.layer1_spikes, net_out.layer2_spikes};
}

namespace {

TraceRecord make_record(uint64_t cycle, const NetworkState& net) {
    TraceRecord rec;
    rec.cycle = cycle;
    for (int k = 0; k < kLayerSize; ++k) {
        rec.membrane[k] = net.layer1[k].membrane;
        rec.refractory[k] = net.layer1[k].refractory_count;
        rec.spike[k] = net.layer1[k].spiked;
        rec.membrane[kLayerSize + k] = net.layer2[k].membrane;
        rec.refractory[kLayerSize + k] = net.layer2[k].refractory_count;
        rec.spike[kLayerSize + k] = net.layer2[k].spiked;
    }
    return rec;
}

}  // namespace

Trace run_simulation(std::span<const WriteEvent> program, std::span<const ChipInputs> stimulus,
                     uint64_t cycles, ProgrammingMode mode, int sclk_divisor) {
    ChipState chip = chip_reset();

    std::vector<SpiLineSample> waveform;
    if (mode == ProgrammingMode::spi) {
        waveform = encode_spi_waveform(program, sclk_divisor);
    } else {
        for (const WriteEvent& ev : program) {
            regfile_write(chip.rf, ev);
        }
    }

    Trace trace;
    const uint64_t total = waveform.size() + cycles;
    trace.records.reserve(total);
    trace.reg_updates.push_back(RegisterSnapshot{0, chip.rf.regs});

    for (uint64_t c = 0; c < total; ++c) {
        ChipInputs inputs;
        if (c < waveform.size()) {
            inputs.lines = waveform[c];
        } else {
            const uint64_t s = c - waveform.size();
            if (s < stimulus.size()) {
                inputs = stimulus[s];
            }
            // Past the end of the stimulus the chip just idles.
        }

        const auto regs_before = chip.rf.regs;
        chip_step(chip, inputs);
        if (chip.rf.regs != regs_before) {
            trace.reg_updates.push_back(RegisterSnapshot{c, chip.rf.regs});
        }
        trace.records.push_back(make_record(c, chip.net));
    }
    return trace;
}

}  // namespace snn
