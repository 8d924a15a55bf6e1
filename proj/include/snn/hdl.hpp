#pragma once
#include <string>
#include <utility>
#include <vector>

namespace snn {

// (filename, text) pairs in a fixed order; identical on every invocation.
struct HdlBundle {
    std::vector<std::pair<std::string, std::string>> files;
};

// Renders the chip as synthesizable Verilog-2005: the neuron, the network
// with its merged register file, the SPI peripheral, and the top module.
// Flattened 1-D ports throughout, one always block per register, unique
// generate variables, synchronous active-high reset on every state element.
HdlBundle emit_verilog();

}  // namespace snn
