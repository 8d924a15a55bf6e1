#include "snn/regfile.hpp"

namespace snn {

RegisterFile regfile_reset() { return RegisterFile{}; }

bool regfile_write(RegisterFile& rf, WriteEvent ev) {
    if (ev.addr >= kRegisterCount) {
        return false;
    }
    rf.regs[ev.addr] = ev.data;
    return true;
}

RegisterView regfile_view(const RegisterFile& rf) {
    RegisterView view;
    for (int dst = 0; dst < kLayerSize; ++dst) {
        for (int src = 0; src < kLayerSize; ++src) {
            view.weights.at(dst, src) = rf.regs[static_cast<size_t>(dst * kLayerSize + src)];
        }
    }
    view.params.threshold = rf.regs[kThresholdAddr];
    view.params.leak = rf.regs[kLeakAddr];
    view.params.refractory_period = rf.regs[kRefractoryAddr];
    return view;
}

std::string register_map_text() {
    return
        "0x00-0x08: weights, w[i][j] at address (i*3 + j)\n"
        "0x09: threshold\n"
        "0x0A: leak\n"
        "0x0B: refractory_period\n";
}

}  // namespace snn
