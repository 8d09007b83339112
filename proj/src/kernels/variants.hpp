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

#pragma once

#include "xstate/kernels/kernels.hpp"

namespace xstate::kernels {

struct KernelTable {
    void (*group2_spectra)(const Group2BatchView&, std::span<double>, std::span<double>);
    void (*bell_measure)(const Group2BatchView&, std::span<double>);
    void (*region_classify)(const Group2BatchView&, double, std::span<std::uint8_t>);
    void (*hyperplane_scan)(std::span<const std::array<std::uint8_t, 3>>, std::uint32_t, std::uint32_t,
                            std::vector<std::uint16_t>&);
};

extern const KernelTable kScalarKernels;
#if defined(XSTATE_HAVE_AVX2)
extern const KernelTable kAvx2Kernels;
#endif

}  // namespace xstate::kernels
