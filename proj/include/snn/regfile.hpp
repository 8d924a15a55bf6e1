#pragma once
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "snn/network.hpp"

namespace snn {

// Register map (normative, shared with the HDL emitter):
//   0x00-0x08: weights, w[i][j] at address (i*3 + j)
//   0x09: threshold
//   0x0A: leak
//   0x0B: refractory_period
// Writes to any other address are dropped.
inline constexpr uint8_t kWeightBaseAddr = 0x00;
inline constexpr uint8_t kThresholdAddr = 0x09;
inline constexpr uint8_t kLeakAddr = 0x0A;
inline constexpr uint8_t kRefractoryAddr = 0x0B;
inline constexpr size_t kRegisterCount = 12;

struct RegisterFile {
    std::array<uint8_t, kRegisterCount> regs{};

    bool operator==(const RegisterFile&) const = default;
};

struct WriteEvent {
    uint8_t addr = 0;
    uint8_t data = 0;

    bool operator==(const WriteEvent&) const = default;
};

struct RegisterView {
    WeightMatrix weights;
    NeuronParams params;
};

RegisterFile regfile_reset();

// Commits the write if the address is mapped. Returns false for an unmapped
// address; the write is dropped, as in hardware with no error channel.
bool regfile_write(RegisterFile& rf, WriteEvent ev);

// Combinational view of the stored weights and shared parameters.
RegisterView regfile_view(const RegisterFile& rf);

// The normative register map as text, one register range per line.
// The HDL emitter reproduces it token for token in its comment header.
std::string register_map_text();

}  // namespace snn
