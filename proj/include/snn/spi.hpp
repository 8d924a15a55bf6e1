#pragma once
#include <cstdint>
#include <optional>

#include "snn/regfile.hpp"

namespace snn {

// Line levels as sampled once per system clock cycle.
struct SpiLineSample {
    bool sclk = false;
    bool mosi = false;
    bool cs_n = true;  // active-low chip select

    bool operator==(const SpiLineSample&) const = default;
};

// Mode-0 peripheral receiver state. Lines are assumed to pass through a
// synchronizer into the system clock domain, so edges are detected here by
// comparing against the previous sample; SCLK must toggle no faster than
// half the system clock for every level to be seen.
struct SpiSlaveState {
    uint16_t shift_reg = 0;
    int bit_count = 0;  // 0..16; returns to 0 the instant a frame completes
    bool prev_sclk = false;
    bool prev_cs_n = true;
    bool active = false;

    bool operator==(const SpiSlaveState&) const = default;
};

SpiSlaveState spi_reset();

// Consumes one line sample. A falling CS edge arms the receiver; while CS is
// low each rising SCLK edge shifts MOSI in MSB-first; after 16 bits the frame
// is emitted as a WriteEvent (address byte, then data byte) and the receiver
// is ready for the next back-to-back frame. Raising CS discards any partial
// frame silently.
std::optional<WriteEvent> spi_sample(SpiSlaveState& state, SpiLineSample lines);

}  // namespace snn
