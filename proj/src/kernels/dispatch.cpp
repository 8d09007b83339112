// Copyright 2026 The xstate-geometry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "variants.hpp"

namespace xstate::kernels {
namespace {

std::optional<Isa>& forced() {
    static std::optional<Isa> isa;
    return isa;
}

bool env_requests_scalar() {
    const char* value = std::getenv("XSTATE_ISA");
    return value != nullptr && std::string(value) == "scalar";
}

const KernelTable& table(Isa isa) {
#if defined(XSTATE_HAVE_AVX2)
    if (isa == Isa::Avx2) {
        return kAvx2Kernels;
    }
#endif
    if (isa != Isa::Scalar) {
        throw std::invalid_argument("kernel variant not available in this build");
    }
    return kScalarKernels;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    if (isa == Isa::Scalar) {
        return true;
    }
#if defined(XSTATE_HAVE_AVX2)
    static const bool cpu_avx2 = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") != 0;
    }();
    return cpu_avx2;
#else
    return false;
#endif
}

Isa detected_isa() { return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() {
    if (forced()) {
        return *forced();
    }
    static const Isa chosen = env_requests_scalar() ? Isa::Scalar : detected_isa();
    return chosen;
}

void force_isa(std::optional<Isa> isa) {
    if (isa && !isa_available(*isa)) {
        throw std::invalid_argument("kernel variant " + std::string(isa_name(*isa)) + " is not available");
    }
    forced() = isa;
}

void Group2BatchView::check() const {
    const std::size_t n = beta0.size();
    if (beta1.size() != n || beta2.size() != n || beta3.size() != n || beta4.size() != n || tau1.size() != n ||
        tau2.size() != n || type.size() != n) {
        throw std::invalid_argument("Group 2 batch columns have different lengths");
    }
}

void Group2Batch::reserve(std::size_t n) {
    for (auto* column : {&beta0, &beta1, &beta2, &beta3, &beta4, &tau1, &tau2}) {
        column->reserve(n);
    }
    type.reserve(n);
}

void Group2Batch::push_back(double b0, double b1, double b2, double b3, double b4, double t1, double t2, int t) {
    beta0.push_back(b0);
    beta1.push_back(b1);
    beta2.push_back(b2);
    beta3.push_back(b3);
    beta4.push_back(b4);
    tau1.push_back(t1);
    tau2.push_back(t2);
    type.push_back(t);
}

Group2BatchView Group2Batch::view() const { return {beta0, beta1, beta2, beta3, beta4, tau1, tau2, type}; }

void group2_spectra(const Group2BatchView& batch, std::span<double> rho, std::span<double> gamma, Isa isa) {
    batch.check();
    if (rho.size() < 4 * batch.size() || gamma.size() < 4 * batch.size()) {
        throw std::invalid_argument("group2_spectra output spans too small");
    }
    table(isa).group2_spectra(batch, rho, gamma);
}

void group2_spectra(const Group2BatchView& batch, std::span<double> rho, std::span<double> gamma) {
    group2_spectra(batch, rho, gamma, active_isa());
}

void bell_measure(const Group2BatchView& batch, std::span<double> out, Isa isa) {
    batch.check();
    if (out.size() < batch.size()) {
        throw std::invalid_argument("bell_measure output span too small");
    }
    table(isa).bell_measure(batch, out);
}

void bell_measure(const Group2BatchView& batch, std::span<double> out) { bell_measure(batch, out, active_isa()); }

void region_classify(const Group2BatchView& batch, double tolerance, std::span<std::uint8_t> out, Isa isa) {
    batch.check();
    if (out.size() < batch.size()) {
        throw std::invalid_argument("region_classify output span too small");
    }
    table(isa).region_classify(batch, tolerance, out);
}

void region_classify(const Group2BatchView& batch, double tolerance, std::span<std::uint8_t> out) {
    region_classify(batch, tolerance, out, active_isa());
}

void hyperplane_scan(std::span<const std::array<std::uint8_t, 3>> lines, std::uint32_t first, std::uint32_t last,
                     std::vector<std::uint16_t>& out, Isa isa) {
    if (last > (1u << 16) || first > last) {
        throw std::invalid_argument("hyperplane_scan range must lie in [0, 2^16]");
    }
    table(isa).hyperplane_scan(lines, first, last, out);
}

void hyperplane_scan(std::span<const std::array<std::uint8_t, 3>> lines, std::uint32_t first, std::uint32_t last,
                     std::vector<std::uint16_t>& out) {
    hyperplane_scan(lines, first, last, out, active_isa());
}

}  // namespace xstate::kernels
