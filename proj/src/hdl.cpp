#include "snn/hdl.hpp"

#include <string_view>

#include "snn/regfile.hpp"

namespace snn {

namespace {

constexpr std::string_view kLifNeuron = R"v(// Digital leaky integrate-and-fire neuron.
//
// Each clock: add the input current to the membrane, drain the leak
// (floored at zero), clamp at 255. When the integrated value exceeds the
// threshold the neuron emits a one-cycle spike, clears its membrane, and
// holds in refractory for refractory_period cycles. All outputs are
// registered; reset is synchronous and active high.

module lif_neuron (
    input wire clk,
    input wire rst,
    input wire [7:0] current,
    input wire [7:0] threshold,
    input wire [7:0] leak,
    input wire [7:0] refractory_period,
    output reg [7:0] membrane,
    output reg [7:0] refractory_count,
    output reg spike
);

    wire [8:0] charge = {1'b0, membrane} + {1'b0, current};
    wire [8:0] drained = (charge > {1'b0, leak}) ? (charge - {1'b0, leak}) : 9'd0;
    wire [7:0] integrated = (drained > 9'd255) ? 8'd255 : drained[7:0];

    always @(posedge clk) begin
        if (rst) begin
            membrane <= 8'd0;
            refractory_count <= 8'd0;
            spike <= 1'b0;
        end else if (refractory_count != 8'd0) begin
            membrane <= 8'd0;
            refractory_count <= refractory_count - 8'd1;
            spike <= 1'b0;
        end else if (integrated > threshold) begin
            membrane <= 8'd0;
            refractory_count <= refractory_period;
            spike <= 1'b1;
        end else begin
            membrane <= integrated;
            refractory_count <= 8'd0;
            spike <= 1'b0;
        end
    end

endmodule
)v";

constexpr std::string_view kNetworkHeader = R"v(// Two-layer spiking network with its configuration register file.
//
// Three layer-1 neurons are driven by the external currents. Their
// registered spike outputs feed a weighted sum (clamped at 255) that
// drives the three layer-2 neurons, so layer 2 reacts one cycle after
// layer 1. Configuration writes land in a flat 12-byte register file and
// take effect on the following cycle.
//
)v";

constexpr std::string_view kNetworkBody = R"v(
module snn_network (
    input wire clk,
    input wire rst,
    input wire [23:0] in_currents,
    input wire write_enable,
    input wire [7:0] write_addr,
    input wire [7:0] write_data,
    output wire [2:0] layer1_spikes,
    output wire [2:0] layer2_spikes
);

    reg [95:0] regs_flat;

    wire [71:0] weights_flat = regs_flat[71:0];
    wire [7:0] threshold = regs_flat[79:72];
    wire [7:0] leak = regs_flat[87:80];
    wire [7:0] refractory_period = regs_flat[95:88];

    always @(posedge clk) begin
        if (rst) begin
            regs_flat <= 96'd0;
        end else if (write_enable && (write_addr < 8'd12)) begin
            regs_flat[write_addr*8 +: 8] <= write_data;
        end
    end

    wire [23:0] layer1_membranes;
    wire [23:0] layer1_refractory;
    wire [23:0] layer2_membranes;
    wire [23:0] layer2_refractory;
    wire [23:0] layer2_currents;

    genvar g1;
    generate
        for (g1 = 0; g1 < 3; g1 = g1 + 1) begin : layer1_gen
            lif_neuron neuron_i (
                .clk(clk),
                .rst(rst),
                .current(in_currents[g1*8 +: 8]),
                .threshold(threshold),
                .leak(leak),
                .refractory_period(refractory_period),
                .membrane(layer1_membranes[g1*8 +: 8]),
                .refractory_count(layer1_refractory[g1*8 +: 8]),
                .spike(layer1_spikes[g1])
            );
        end
    endgenerate

    genvar g2;
    generate
        for (g2 = 0; g2 < 3; g2 = g2 + 1) begin : layer2_current_gen
            wire [9:0] weighted_sum =
                (layer1_spikes[0] ? {2'b00, weights_flat[(g2*3 + 0)*8 +: 8]} : 10'd0) +
                (layer1_spikes[1] ? {2'b00, weights_flat[(g2*3 + 1)*8 +: 8]} : 10'd0) +
                (layer1_spikes[2] ? {2'b00, weights_flat[(g2*3 + 2)*8 +: 8]} : 10'd0);
            assign layer2_currents[g2*8 +: 8] =
                (weighted_sum > 10'd255) ? 8'd255 : weighted_sum[7:0];
        end
    endgenerate

    genvar g3;
    generate
        for (g3 = 0; g3 < 3; g3 = g3 + 1) begin : layer2_gen
            lif_neuron neuron_i (
                .clk(clk),
                .rst(rst),
                .current(layer2_currents[g3*8 +: 8]),
                .threshold(threshold),
                .leak(leak),
                .refractory_period(refractory_period),
                .membrane(layer2_membranes[g3*8 +: 8]),
                .refractory_count(layer2_refractory[g3*8 +: 8]),
                .spike(layer2_spikes[g3])
            );
        end
    endgenerate

endmodule
)v";

constexpr std::string_view kSpiPeripheral = R"v(// SPI mode-0 slave for configuration writes.
//
// Frames are 16 bits, MSB first: address byte then data byte. MOSI is
// sampled on the rising edge of SCLK while CS_n is low; raising CS_n
// discards any partial frame. The external lines pass through two-flop
// synchronizers, so SCLK must stay below half the system clock rate.
// A completed frame pulses write_enable for one cycle.

module spi_peripheral (
    input wire clk,
    input wire rst,
    input wire sclk,
    input wire mosi,
    input wire cs_n,
    output reg write_enable,
    output reg [7:0] write_addr,
    output reg [7:0] write_data
);

    reg sclk_meta, sclk_sync;
    reg mosi_meta, mosi_sync;
    reg cs_n_meta, cs_n_sync;
    reg sclk_prev, cs_n_prev;

    reg [14:0] shift_reg;
    reg [3:0] bit_count;

    wire sclk_rising = sclk_sync & ~sclk_prev;
    wire cs_falling = ~cs_n_sync & cs_n_prev;
    wire [7:0] frame_addr = shift_reg[14:7];
    wire [7:0] frame_data = {shift_reg[6:0], mosi_sync};

    always @(posedge clk) begin
        if (rst) begin
            sclk_meta <= 1'b0;
            sclk_sync <= 1'b0;
            mosi_meta <= 1'b0;
            mosi_sync <= 1'b0;
            cs_n_meta <= 1'b0;
            cs_n_sync <= 1'b0;
            sclk_prev <= 1'b0;
            cs_n_prev <= 1'b0;
            shift_reg <= 15'd0;
            bit_count <= 4'd0;
            write_enable <= 1'b0;
            write_addr <= 8'd0;
            write_data <= 8'd0;
        end else begin
            sclk_meta <= sclk;
            sclk_sync <= sclk_meta;
            mosi_meta <= mosi;
            mosi_sync <= mosi_meta;
            cs_n_meta <= cs_n;
            cs_n_sync <= cs_n_meta;
            sclk_prev <= sclk_sync;
            cs_n_prev <= cs_n_sync;

            write_enable <= 1'b0;
            if (cs_falling || cs_n_sync) begin
                shift_reg <= 15'd0;
                bit_count <= 4'd0;
            end else if (sclk_rising) begin
                if (bit_count == 4'd15) begin
                    write_enable <= 1'b1;
                    write_addr <= frame_addr;
                    write_data <= frame_data;
                    shift_reg <= 15'd0;
                    bit_count <= 4'd0;
                end else begin
                    shift_reg <= {shift_reg[13:0], mosi_sync};
                    bit_count <= bit_count + 4'd1;
                end
            end
        end
    end

endmodule
)v";

constexpr std::string_view kSnnTop = R"v(// Chip top level: SPI peripheral feeding the network's register file.

module snn_top (
    input wire clk,
    input wire rst,
    input wire sclk,
    input wire mosi,
    input wire cs_n,
    input wire [23:0] in_currents,
    output wire [2:0] layer1_spikes,
    output wire [2:0] layer2_spikes
);

    wire write_enable;
    wire [7:0] write_addr;
    wire [7:0] write_data;

    spi_peripheral spi_i (
        .clk(clk),
        .rst(rst),
        .sclk(sclk),
        .mosi(mosi),
        .cs_n(cs_n),
        .write_enable(write_enable),
        .write_addr(write_addr),
        .write_data(write_data)
    );

    snn_network network_i (
        .clk(clk),
        .rst(rst),
        .in_currents(in_currents),
        .write_enable(write_enable),
        .write_addr(write_addr),
        .write_data(write_data),
        .layer1_spikes(layer1_spikes),
        .layer2_spikes(layer2_spikes)
    );

endmodule
)v";

std::string network_text() {
    std::string text(kNetworkHeader);
    text += "// Register map:\n";
    const std::string map = register_map_text();
    size_t pos = 0;
    while (pos < map.size()) {
        const size_t nl = map.find('\n', pos);
        const size_t end = (nl == std::string::npos) ? map.size() : nl;
        text += "//   ";
        text += map.substr(pos, end - pos);
        text += '\n';
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    text += kNetworkBody;
    return text;
}

}  // namespace

HdlBundle emit_verilog() {
    HdlBundle bundle;
    bundle.files.emplace_back("lif_neuron.v", std::string(kLifNeuron));
    bundle.files.emplace_back("snn_network.v", network_text());
    bundle.files.emplace_back("spi_peripheral.v", std::string(kSpiPeripheral));
    bundle.files.emplace_back("snn_top.v", std::string(kSnnTop));
    return bundle;
}

}  // namespace snn
