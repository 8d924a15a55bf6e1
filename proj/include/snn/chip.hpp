#pragma once
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "snn/network.hpp"
#include "snn/regfile.hpp"
#include "snn/spi.hpp"

namespace snn {

// Whole-chip state: SPI receiver, register file, network, cycle counter.
struct ChipState {
    SpiSlaveState spi;
    RegisterFile rf;
    NetworkState net;
    uint64_t cycle = 0;
};

struct ChipInputs {
    SpiLineSample lines{};
    std::array<uint8_t, kLayerSize> external_currents{};
    bool reset = false;

    bool operator==(const ChipInputs&) const = default;
};

struct ChipOutputs {
    std::array<bool, kLayerSize> layer1_spikes{};
    std::array<bool, kLayerSize> layer2_spikes{};
};

// Per-cycle record of every neuron register, layer 1 first.
struct TraceRecord {
    uint64_t cycle = 0;
    std::array<uint8_t, kNeuronCount> membrane{};
    std::array<uint8_t, kNeuronCount> refractory{};
    std::array<bool, kNeuronCount> spike{};

    bool operator==(const TraceRecord&) const = default;
};

struct RegisterSnapshot {
    uint64_t cycle = 0;
    std::array<uint8_t, kRegisterCount> regs{};
};

struct Trace {
    std::vector<TraceRecord> records;
    std::vector<RegisterSnapshot> reg_updates;  // initial contents, then one entry per change
};

ChipState chip_reset();

// One system clock cycle. A high reset input overrides everything and drives
// the chip back to the reset state. Otherwise the SPI lines are sampled, a
// completed frame commits to the register file at the end of the cycle, and
// the network steps with the register contents as of the start of the cycle
// (writes become visible one cycle later, as with registered storage).
ChipOutputs chip_step(ChipState& chip, const ChipInputs& inputs);

enum class ProgrammingMode {
    spi,     // render the program as a mode-0 waveform and replay it before the stimulus
    direct,  // write the registers before cycle 0
};

// Programs the chip, then runs `cycles` cycles of the stimulus (idle inputs
// past its end), recording every cycle. In SPI mode the programming waveform
// itself is part of the recorded trace, prepended to the stimulus phase.
Trace run_simulation(std::span<const WriteEvent> program, std::span<const ChipInputs> stimulus,
                     uint64_t cycles, ProgrammingMode mode = ProgrammingMode::spi,
                     int sclk_divisor = 2);

}  // namespace snn
