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

#include <bit>

#include "formulas.hpp"
#include "variants.hpp"

namespace xstate::kernels {
namespace {

void scalar_group2_spectra(const Group2BatchView& b, std::span<double> rho, std::span<double> gamma) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        detail::group2_spectra_one(b.beta0[i], b.beta1[i], b.beta2[i], b.beta3[i], b.beta4[i], b.tau1[i], b.tau2[i],
                                   b.type[i], &rho[4 * i], &gamma[4 * i]);
    }
}

void scalar_bell_measure(const Group2BatchView& b, std::span<double> out) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = detail::bell_measure_one(b.beta0[i], b.beta1[i], b.beta2[i], b.beta3[i], b.beta4[i]);
    }
}

void scalar_region_classify(const Group2BatchView& b, double tol, std::span<std::uint8_t> out) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = detail::region_one(b.beta0[i], b.beta1[i], b.beta2[i], b.beta3[i], b.beta4[i], b.type[i], tol);
    }
}

void scalar_hyperplane_scan(std::span<const std::array<std::uint8_t, 3>> lines, std::uint32_t first,
                            std::uint32_t last, std::vector<std::uint16_t>& out) {
    for (std::uint32_t m = first; m < last; ++m) {
        bool ok = true;
        for (const auto& line : lines) {
            const std::uint32_t hit = ((m >> line[0]) & 1u) + ((m >> line[1]) & 1u) + ((m >> line[2]) & 1u);
            if ((hit & 1u) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(static_cast<std::uint16_t>(m));
        }
    }
}

}  // namespace

const KernelTable kScalarKernels{scalar_group2_spectra, scalar_bell_measure, scalar_region_classify,
                                 scalar_hyperplane_scan};

}  // namespace xstate::kernels
