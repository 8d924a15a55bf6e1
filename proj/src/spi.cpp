#include "snn/spi.hpp"

namespace snn {

SpiSlaveState spi_reset() { return SpiSlaveState{}; }

std::optional<WriteEvent> spi_sample(SpiSlaveState& state, SpiLineSample lines) {
    std::optional<WriteEvent> event;

    const bool cs_fell = state.prev_cs_n && !lines.cs_n;
    const bool cs_rose = !state.prev_cs_n && lines.cs_n;
    const bool sclk_rose = !state.prev_sclk && lines.sclk;

    if (cs_fell) {
        state.active = true;
        state.bit_count = 0;
        state.shift_reg = 0;
    } else if (cs_rose) {
        // Partial frames die silently, as in hardware.
        state.active = false;
        state.bit_count = 0;
        state.shift_reg = 0;
    }

    if (state.active && !lines.cs_n && sclk_rose) {
        state.shift_reg = static_cast<uint16_t>((state.shift_reg << 1) | (lines.mosi ? 1u : 0u));
        state.bit_count += 1;
        if (state.bit_count == 16) {
            event = WriteEvent{static_cast<uint8_t>(state.shift_reg >> 8),
                               static_cast<uint8_t>(state.shift_reg & 0xFF)};
            // Ready for the next back-to-back frame in the same CS window.
            state.bit_count = 0;
            state.shift_reg = 0;
        }
    }

    state.prev_sclk = lines.sclk;
    state.prev_cs_n = lines.cs_n;
    return event;
}

}  // namespace snn
