#pragma once
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "snn/chip.hpp"
#include "snn/spi.hpp"

namespace snn {

// Parse failure with a 1-based source location.
class ParseError : public std::runtime_error {
public:
    ParseError(size_t line, size_t column, const std::string& message);

    size_t line() const { return line_; }
    size_t column() const { return column_; }

private:
    size_t line_;
    size_t column_;
};

using ProgramFile = std::vector<WriteEvent>;

// Program file format: one `write <addr> <data>` directive per line, values
// as decimal or 0x-prefixed hex literals in [0,255]; `#` starts a comment.
ProgramFile parse_program(std::string_view text);
std::string render_program(std::span<const WriteEvent> program);

// Renders a program as a mode-0 SPI waveform sampled once per system cycle.
// `sclk_divisor` is the number of system cycles per SCLK period (>= 2); each
// SCLK level is held for half of it, odd divisors rounding the low phase up.
// The burst gets one idle sample before CS falls and one after it rises; an
// empty program produces an empty waveform.
std::vector<SpiLineSample> encode_spi_waveform(std::span<const WriteEvent> program,
                                               int sclk_divisor);

// Stimulus CSV: header `cycle,i0,i1,i2,sclk,mosi,cs_n,reset` (trailing
// columns may be omitted, defaulting to idle), rows with strictly increasing
// cycle numbers. Gap cycles hold the previous row; cycles before the first
// row are idle. Returns one record per cycle through the last row.
std::vector<ChipInputs> parse_stimulus(std::string_view text);
std::string render_stimulus(std::span<const ChipInputs> inputs);

// Trace CSV: header `cycle,v1_0,...,s2_2`, one row per cycle.
std::string write_trace_csv(const Trace& trace);
std::vector<TraceRecord> read_trace_csv(std::string_view text);

// Value-change dump of the same 18 signals, one timestamp per cycle with a
// full dump at #0 and only changed values afterwards. 1 cycle = 1 ns.
std::string write_trace_vcd(const Trace& trace);

}  // namespace snn
