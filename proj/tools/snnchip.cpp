// snnchip: drive the chip model from program/stimulus files, run the
// differential checker, or emit the Verilog rendering of the design.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "snn/chip.hpp"
#include "snn/hdl.hpp"
#include "snn/io.hpp"
#include "snn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw std::runtime_error("short write to " + path);
    }
}

int cmd_run(const std::string& program_path, const std::string& stimulus_path, uint64_t cycles,
            const std::string& trace_path, const std::string& vcd_path, int spi_divisor,
            bool direct) {
    const snn::ProgramFile program = snn::parse_program(read_file(program_path));
    const std::vector<snn::ChipInputs> stimulus = snn::parse_stimulus(read_file(stimulus_path));
    const snn::ProgrammingMode mode =
        direct ? snn::ProgrammingMode::direct : snn::ProgrammingMode::spi;
    const snn::Trace trace = snn::run_simulation(program, stimulus, cycles, mode, spi_divisor);
    write_file(trace_path, snn::write_trace_csv(trace));
    if (!vcd_path.empty()) {
        write_file(vcd_path, snn::write_trace_vcd(trace));
    }
    std::printf("wrote %s (%zu cycles)\n", trace_path.c_str(), trace.records.size());
    return kExitOk;
}

int cmd_check(int episodes, uint32_t seed) {
    snn::DifferentialConfig config;
    config.episodes = episodes;
    config.seed = seed;
    const auto divergence = snn::run_differential(config);
    if (divergence) {
        std::printf("DIVERGENCE episode %llu cycle %llu neuron %d: %s\n",
                    static_cast<unsigned long long>(divergence->episode),
                    static_cast<unsigned long long>(divergence->cycle), divergence->neuron,
                    divergence->detail.c_str());
        return kExitMismatch;
    }
    std::printf("OK: %d episodes match the oracle\n", episodes);
    return kExitOk;
}

int cmd_emit_verilog(const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const snn::HdlBundle bundle = snn::emit_verilog();
    for (const auto& [name, text] : bundle.files) {
        const std::string path = (std::filesystem::path(out_dir) / name).string();
        write_file(path, text);
        std::printf("wrote %s\n", path.c_str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycle-accurate model of a programmable spiking-neuron-array chip"};
    app.require_subcommand(1);

    std::string program_path;
    std::string stimulus_path;
    std::string trace_path;
    std::string vcd_path;
    uint64_t cycles = 0;
    int spi_divisor = 2;
    bool direct = false;

    CLI::App* run = app.add_subcommand("run", "Simulate a program against a stimulus file");
    run->add_option("--program", program_path, "Program file of register writes")->required();
    run->add_option("--stimulus", stimulus_path, "Stimulus CSV")->required();
    run->add_option("--cycles", cycles, "Cycles to simulate after programming")->required();
    run->add_option("--trace", trace_path, "Output trace CSV")->required();
    run->add_option("--vcd", vcd_path, "Also write a VCD waveform");
    CLI::Option* divisor_opt =
        run->add_option("--spi-divisor", spi_divisor, "System cycles per SCLK period (>= 2)")
            ->check(CLI::Range(2, 1 << 20));
    run->add_flag("--direct", direct, "Write registers directly instead of over SPI")
        ->excludes(divisor_opt);

    int episodes = 1000;
    uint32_t seed = 1;
    CLI::App* check = app.add_subcommand("check", "Differential test of the model vs the oracle");
    check->add_option("--episodes", episodes, "Number of random episodes")
        ->check(CLI::PositiveNumber);
    check->add_option("--seed", seed, "Seed for the episode generator");

    std::string out_dir;
    CLI::App* emit = app.add_subcommand("emit-verilog", "Write the Verilog rendering of the design");
    emit->add_option("--out", out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            return cmd_run(program_path, stimulus_path, cycles, trace_path, vcd_path, spi_divisor,
                           direct);
        }
        if (check->parsed()) {
            return cmd_check(episodes, seed);
        }
        return cmd_emit_verilog(out_dir);
    } catch (const snn::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}
