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

// Batched inner loops with a scalar reference implementation and an AVX2
// variant chosen at runtime. Every variant must produce bit-identical output
// to the scalar kernels; tests/test_kernels.cpp enforces this.
//
// Batches are structure-of-arrays views over Group 2 generalized parameters:
// beta0, the 2x2 block (beta1 beta2 / beta3 beta4), tau1, tau2 and the type
// flag t in {1,2}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace xstate::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Best variant the running CPU supports (and the build includes).
Isa detected_isa();

/// The variant the dispatching entry points use: detected_isa() unless
/// overridden by force_isa() or by XSTATE_ISA=scalar in the environment.
Isa active_isa();

/// Pins (or with nullopt, unpins) the dispatch target. Not thread-safe; meant
/// for tests and benchmarks.
void force_isa(std::optional<Isa> isa);

bool isa_available(Isa isa);

struct Group2BatchView {
    std::span<const double> beta0;
    std::span<const double> beta1;
    std::span<const double> beta2;
    std::span<const double> beta3;
    std::span<const double> beta4;
    std::span<const double> tau1;
    std::span<const double> tau2;
    std::span<const std::int32_t> type;

    std::size_t size() const { return beta0.size(); }
    void check() const;
};

/// Owning storage for a Group2BatchView.
struct Group2Batch {
    std::vector<double> beta0, beta1, beta2, beta3, beta4, tau1, tau2;
    std::vector<std::int32_t> type;

    void reserve(std::size_t n);
    void push_back(double b0, double b1, double b2, double b3, double b4, double t1, double t2, int t);
    std::size_t size() const { return beta0.size(); }
    Group2BatchView view() const;
};

/// Region class codes written by region_classify.
enum RegionCode : std::uint8_t { kInvalid = 0, kSeparable = 1, kEntangled = 2 };

/// Closed-form spectra. For each element, writes the four eigenvalues of the
/// state and of its partial transpose, ascending, into rho[4*i..4*i+3] and
/// gamma[4*i..4*i+3].
void group2_spectra(const Group2BatchView& batch, std::span<double> rho, std::span<double> gamma, Isa isa);
void group2_spectra(const Group2BatchView& batch, std::span<double> rho, std::span<double> gamma);

/// Bell measure max(B, beta0^2 + m2) from the 2x2 block and beta0.
void bell_measure(const Group2BatchView& batch, std::span<double> out, Isa isa);
void bell_measure(const Group2BatchView& batch, std::span<double> out);

/// Disc-membership classification of tau = 0 states (tau fields are ignored).
void region_classify(const Group2BatchView& batch, double tolerance, std::span<std::uint8_t> out, Isa isa);
void region_classify(const Group2BatchView& batch, double tolerance, std::span<std::uint8_t> out);

/// Tests every 15-bit mask in [first, last) against the three-point lines
/// given as bit positions, keeping the masks that meet every line in an odd
/// number of points. Appends survivors in increasing order.
void hyperplane_scan(std::span<const std::array<std::uint8_t, 3>> lines, std::uint32_t first, std::uint32_t last,
                     std::vector<std::uint16_t>& out, Isa isa);
void hyperplane_scan(std::span<const std::array<std::uint8_t, 3>> lines, std::uint32_t first, std::uint32_t last,
                     std::vector<std::uint16_t>& out);

}  // namespace xstate::kernels
