#include "snn/verify.hpp"

#include <random>
#include <vector>

#include "snn/oracle.hpp"

namespace snn {

std::optional<Divergence> run_differential(const DifferentialConfig& config) {
    std::mt19937 rng(config.seed);
    // Low byte only, so the stream is stable across platforms.
    const auto draw_byte = [&rng] { return static_cast<uint8_t>(rng() & 0xFFu); };

    for (uint64_t episode = 0; episode < config.episodes; ++episode) {
        WeightMatrix weights;
        for (auto& w : weights.flat) w = draw_byte();
        NeuronParams params;
        params.threshold = draw_byte();
        params.leak = draw_byte();
        params.refractory_period = draw_byte();

        std::vector<std::array<uint8_t, kLayerSize>> currents(config.cycles);
        for (auto& row : currents) {
            for (auto& c : row) c = draw_byte();
        }

        const OracleTrace expected = oracle_network_trace(weights, params, currents);

        NetworkState state = network_reset();
        for (int cycle = 0; cycle < config.cycles; ++cycle) {
            network_step(state, weights, params, currents[cycle]);
            const OracleRecord& want = expected[cycle];
            for (int n = 0; n < kNeuronCount; ++n) {
                const NeuronState& got =
                    (n < kLayerSize) ? state.layer1[n] : state.layer2[n - kLayerSize];
                std::string detail;
                if (got.membrane != want.membrane[n]) {
                    detail = "membrane " + std::to_string(got.membrane) + " != " +
                             std::to_string(want.membrane[n]);
                } else if (got.refractory_count != want.refractory[n]) {
                    detail = "refractory " + std::to_string(got.refractory_count) + " != " +
                             std::to_string(want.refractory[n]);
                } else if (got.spiked != want.spike[n]) {
                    detail = "spike " + std::to_string(got.spiked) + " != " +
                             std::to_string(want.spike[n]);
                }
                if (!detail.empty()) {
                    return Divergence{episode, static_cast<uint64_t>(cycle), n, detail};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace snn
