// Acceptance gate for the chip model. Each criterion prints one line:
//   [n] name PASS|FAIL (seconds)
// The process exits nonzero if any criterion fails.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "snn/chip.hpp"
#include "snn/hdl.hpp"
#include "snn/io.hpp"
#include "snn/oracle.hpp"
#include "snn/verify.hpp"
#include "vcd_check.hpp"
#include "verilog_lint.hpp"

using namespace snn;

namespace {

int g_failures = 0;

void criterion(int index, const char* name, const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%d] %-24s %s (%.2fs)\n", index, name, ok ? "PASS" : "FAIL", secs);
    if (!ok) {
        ++g_failures;
        if (!detail.empty()) {
            std::printf("    %s\n", detail.c_str());
        }
    }
    std::fflush(stdout);
}

uint8_t byte(std::mt19937& rng) { return static_cast<uint8_t>(rng() & 0xFFu); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

// 1. The cycle-accurate network matches the oracle over 1000 seeded episodes
//    of 200 random cycles each, in under 10 seconds.
bool oracle_equivalence(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    DifferentialConfig config;
    config.episodes = 1000;
    config.seed = 1;
    config.cycles = 200;
    const auto divergence = run_differential(config);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (divergence) {
        detail = "episode " + std::to_string(divergence->episode) + " cycle " +
                 std::to_string(divergence->cycle) + " neuron " +
                 std::to_string(divergence->neuron) + ": " + divergence->detail;
        return false;
    }
    if (secs >= 10.0) {
        detail = "took " + std::to_string(secs) + "s, budget is 10s";
        return false;
    }
    return true;
}

// 2. saturating_integrate equals the unbounded-integer clamp on all 2^24
//    triples, in under 60 seconds.
bool saturation_exhaustive(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    for (int m = 0; m <= 255; ++m) {
        for (int c = 0; c <= 255; ++c) {
            for (int l = 0; l <= 255; ++l) {
                int64_t expect = static_cast<int64_t>(m) + c - l;
                if (expect < 0) expect = 0;
                if (expect > 255) expect = 255;
                const uint8_t got =
                    saturating_integrate(static_cast<uint8_t>(m), static_cast<uint8_t>(c),
                                         static_cast<uint8_t>(l));
                if (got != expect) {
                    detail = "mismatch at m=" + std::to_string(m) + " c=" + std::to_string(c) +
                             " l=" + std::to_string(l) + ": got " + std::to_string(got) +
                             ", want " + std::to_string(expect);
                    return false;
                }
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60.0) {
        detail = "took " + std::to_string(secs) + "s, budget is 60s";
        return false;
    }
    return true;
}

// 3. Across 10,000 random cases with refractory period R in [1,255], no
//    neuron ever spikes twice within R cycles.
bool refractory_property(std::string& detail) {
    std::mt19937 rng(1003);
    long observed_pairs = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        NeuronParams params;
        params.threshold = byte(rng);
        params.leak = static_cast<uint8_t>(rng() & 0x0Fu);
        params.refractory_period = static_cast<uint8_t>(1 + (rng() % 255));
        NeuronState state = neuron_reset();
        long last_spike = -1;
        const int cycles = 300;
        for (int t = 0; t < cycles; ++t) {
            state = neuron_step(state, params, byte(rng));
            if (!state.spiked) continue;
            if (last_spike >= 0) {
                ++observed_pairs;
                const long gap = t - last_spike;
                if (gap < params.refractory_period + 1) {
                    detail = "trial " + std::to_string(trial) + ": spikes at " +
                             std::to_string(last_spike) + " and " + std::to_string(t) +
                             " with R=" + std::to_string(params.refractory_period);
                    return false;
                }
            }
            last_spike = t;
        }
    }
    if (observed_pairs == 0) {
        detail = "vacuous: no spike pairs observed";
        return false;
    }
    return true;
}

// 4. 500 random programs of 1..64 writes, pushed through the SPI pins at
//    divisors {2,3,5,16}, leave the register file byte-identical to direct
//    writes.
bool spi_round_trip(std::string& detail) {
    std::mt19937 rng(1004);
    const int divisors[] = {2, 3, 5, 16};
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<WriteEvent> program(1 + (rng() % 64));
        for (auto& ev : program) {
            ev.addr = byte(rng);
            ev.data = byte(rng);
        }
        RegisterFile direct = regfile_reset();
        for (const WriteEvent& ev : program) {
            regfile_write(direct, ev);
        }
        const int divisor = divisors[trial % 4];
        const auto waveform = encode_spi_waveform(program, divisor);
        ChipState chip = chip_reset();
        for (const SpiLineSample& lines : waveform) {
            ChipInputs in;
            in.lines = lines;
            chip_step(chip, in);
        }
        if (chip.rf.regs != direct.regs) {
            detail = "trial " + std::to_string(trial) + " divisor " + std::to_string(divisor) +
                     ": register file differs from direct writes";
            return false;
        }
    }
    return true;
}

// 5. A single-cycle layer-1 burst reaches layer 2 exactly one cycle later.
bool pipeline_latency(std::string& detail) {
    WeightMatrix w;
    w.flat.fill(255);
    const NeuronParams params{0, 0, 0};

    NetworkState state = network_reset();
    const NetworkOutputs first = network_step(state, w, params, {1, 1, 1});
    const NetworkOutputs second = network_step(state, w, params, {0, 0, 0});
    if (first.layer1_spikes != std::array<bool, 3>{true, true, true} ||
        first.layer2_spikes != std::array<bool, 3>{false, false, false} ||
        second.layer2_spikes != std::array<bool, 3>{true, true, true}) {
        detail = "two-cycle example departed from the expected spike pattern";
        return false;
    }

    // The oracle agrees on the same episode.
    const std::vector<std::array<uint8_t, 3>> externals = {{1, 1, 1}, {0, 0, 0}};
    const OracleTrace expected = oracle_network_trace(w, params, externals);
    if (expected[0].spike != std::array<bool, 6>{true, true, true, false, false, false} ||
        expected[1].spike != std::array<bool, 6>{false, false, false, true, true, true}) {
        detail = "oracle disagrees with the two-cycle example";
        return false;
    }

    // Bursts placed at arbitrary cycles land in layer 2 at exactly T+1.
    for (const size_t burst_at : {size_t{0}, size_t{3}, size_t{7}}) {
        NetworkState s = network_reset();
        size_t first_l2 = SIZE_MAX;
        for (size_t t = 0; t < 12; ++t) {
            const std::array<uint8_t, 3> ext =
                (t == burst_at) ? std::array<uint8_t, 3>{255, 255, 255}
                                : std::array<uint8_t, 3>{0, 0, 0};
            const NetworkOutputs out = network_step(s, w, params, ext);
            if (first_l2 == SIZE_MAX &&
                (out.layer2_spikes[0] || out.layer2_spikes[1] || out.layer2_spikes[2])) {
                first_l2 = t;
            }
        }
        if (first_l2 != burst_at + 1) {
            detail = "burst at cycle " + std::to_string(burst_at) + " hit layer 2 at " +
                     std::to_string(first_l2);
            return false;
        }
    }
    return true;
}

// 6. The th=10/leak=1/rp=2 identity-weight scenario matches the oracle's
//    spike train in both programming modes.
bool end_to_end_scenario(std::string& detail) {
    const std::vector<WriteEvent> program = {
        {0x00, 255}, {0x04, 255}, {0x08, 255},
        {kThresholdAddr, 10}, {kLeakAddr, 1}, {kRefractoryAddr, 2},
    };
    std::vector<ChipInputs> stimulus(5);
    for (auto& in : stimulus) in.external_currents = {12, 0, 0};
    const uint64_t cycles = 20;

    RegisterFile rf = regfile_reset();
    for (const WriteEvent& ev : program) regfile_write(rf, ev);
    const RegisterView view = regfile_view(rf);
    std::vector<std::array<uint8_t, 3>> externals(cycles, {0, 0, 0});
    for (size_t c = 0; c < stimulus.size(); ++c) externals[c] = {12, 0, 0};
    const OracleTrace expected = oracle_network_trace(view.weights, view.params, externals);

    // Sanity-pin the spike trains the scenario is about.
    std::vector<size_t> l1, l2;
    for (size_t c = 0; c < expected.size(); ++c) {
        if (expected[c].spike[0]) l1.push_back(c);
        if (expected[c].spike[3]) l2.push_back(c);
    }
    if (l1 != std::vector<size_t>{0, 3} || l2 != std::vector<size_t>{1, 4}) {
        detail = "oracle spike trains moved; scenario is miswired";
        return false;
    }

    const Trace direct = run_simulation(program, stimulus, cycles, ProgrammingMode::direct);
    const Trace spi = run_simulation(program, stimulus, cycles, ProgrammingMode::spi, 2);
    const size_t prefix = spi.records.size() - cycles;
    for (size_t c = 0; c < cycles; ++c) {
        for (int n = 0; n < kNeuronCount; ++n) {
            const bool want = expected[c].spike[n];
            if (direct.records[c].spike[n] != want) {
                detail = "direct mode diverged at cycle " + std::to_string(c) + " neuron " +
                         std::to_string(n);
                return false;
            }
            if (spi.records[prefix + c].spike[n] != want) {
                detail = "SPI mode diverged at cycle " + std::to_string(c) + " neuron " +
                         std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

// 7. Program, stimulus, and trace formats round-trip; VCD passes the
//    structural checker.
bool format_round_trips(std::string& detail) {
    std::mt19937 rng(1007);
    ProgramFile program(32);
    for (auto& ev : program) {
        ev.addr = byte(rng);
        ev.data = byte(rng);
    }
    if (parse_program(render_program(program)) != program) {
        detail = "program render/parse drift";
        return false;
    }

    std::vector<ChipInputs> stimulus(40);
    for (auto& in : stimulus) {
        in.external_currents = {byte(rng), byte(rng), byte(rng)};
        in.lines.sclk = rng() & 1;
        in.lines.mosi = rng() & 1;
        in.lines.cs_n = rng() & 1;
    }
    if (parse_stimulus(render_stimulus(stimulus)) != stimulus) {
        detail = "stimulus render/parse drift";
        return false;
    }

    const std::vector<WriteEvent> scenario = {{kThresholdAddr, 10}, {0x00, 200}};
    std::vector<ChipInputs> drive(8);
    for (auto& in : drive) in.external_currents = {byte(rng), 0, 0};
    const Trace trace = run_simulation(scenario, drive, 30, ProgrammingMode::spi, 3);
    const auto reread = read_trace_csv(write_trace_csv(trace));
    if (reread.size() != trace.records.size()) {
        detail = "trace CSV row count drift";
        return false;
    }
    for (size_t i = 0; i < reread.size(); ++i) {
        if (!(reread[i] == trace.records[i])) {
            detail = "trace CSV drift at record " + std::to_string(i);
            return false;
        }
    }

    if (const auto err = snn_test::vcd_structural_error(write_trace_vcd(trace))) {
        detail = "VCD checker: " + *err;
        return false;
    }
    return true;
}

// 8. Emitted Verilog matches the golden fixtures and passes the lint.
bool hdl_emission(std::string& detail) {
    const HdlBundle bundle = emit_verilog();
    for (const auto& [name, text] : bundle.files) {
        const std::string golden = read_file(std::string(GOLDEN_DIR) + "/" + name);
        if (golden.empty()) {
            detail = "missing golden fixture for " + name;
            return false;
        }
        if (text != golden) {
            detail = "golden drift in " + name;
            return false;
        }
        const auto violations = snn_test::lint_verilog(text);
        if (!violations.empty()) {
            detail = name + ": " + violations.front();
            return false;
        }
    }
    return true;
}

// 9. Two CLI runs over the same inputs produce byte-identical trace files.
bool run_determinism(std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("snnchip_accept_" + std::to_string(getpid()));
    fs::create_directories(dir);

    const std::string program =
        "write 0x00 0xFF\nwrite 0x04 0xFF\nwrite 0x08 0xFF\n"
        "write 0x09 10\nwrite 0x0A 1\nwrite 0x0B 2\n";
    const std::string stimulus =
        "cycle,i0,i1,i2\n0,12,0,0\n4,0,0,0\n";
    write_file((dir / "prog.txt").string(), program);
    write_file((dir / "stim.csv").string(), stimulus);

    const auto invoke = [&](const std::string& tag) {
        const std::string cmd = std::string("\"") + SNNCHIP_BIN + "\" run --program " +
                                (dir / "prog.txt").string() + " --stimulus " +
                                (dir / "stim.csv").string() + " --cycles 50 --trace " +
                                (dir / ("trace_" + tag + ".csv")).string() + " --vcd " +
                                (dir / ("trace_" + tag + ".vcd")).string() +
                                " --spi-divisor 3 > /dev/null";
        return std::system(cmd.c_str());
    };
    if (invoke("a") != 0 || invoke("b") != 0) {
        detail = "CLI run exited nonzero";
        fs::remove_all(dir);
        return false;
    }
    const std::string csv_a = read_file((dir / "trace_a.csv").string());
    const std::string csv_b = read_file((dir / "trace_b.csv").string());
    const std::string vcd_a = read_file((dir / "trace_a.vcd").string());
    const std::string vcd_b = read_file((dir / "trace_b.vcd").string());
    fs::remove_all(dir);
    if (csv_a.empty() || csv_a != csv_b) {
        detail = "trace CSVs differ between runs";
        return false;
    }
    if (vcd_a.empty() || vcd_a != vcd_b) {
        detail = "VCDs differ between runs";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance: spiking-neuron-array chip model\n");
    criterion(1, "oracle-equivalence", oracle_equivalence);
    criterion(2, "saturation-exhaustive", saturation_exhaustive);
    criterion(3, "refractory-property", refractory_property);
    criterion(4, "spi-round-trip", spi_round_trip);
    criterion(5, "pipeline-latency", pipeline_latency);
    criterion(6, "end-to-end-scenario", end_to_end_scenario);
    criterion(7, "format-round-trips", format_round_trips);
    criterion(8, "hdl-emission", hdl_emission);
    criterion(9, "run-determinism", run_determinism);
    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
