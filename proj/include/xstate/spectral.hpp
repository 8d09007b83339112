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

// Spectra of hyperplane states: closed forms for the Group 1 and Group 2
// families, a numeric route through eig_hermitian4, and PPT classification.

#include <array>
#include <cstdint>

#include "xstate/pauli_state.hpp"

namespace xstate {

inline constexpr double kPsdTolerance = 1e-10;

using Spectrum = std::array<double, 4>;

struct SpectrumPair {
    Spectrum rho;    // ascending
    Spectrum gamma;  // ascending, partial transpose
};

struct SpectralReport {
    Spectrum eigs_rho{};
    Spectrum eigs_gamma{};
    bool valid = false;
    bool separable = false;
    bool entangled = false;
};

/// lambda = lambda^Gamma = 1/4 (1 + tau0 +- |tau + beta|), 1/4 (1 - tau0 +- |tau - beta|).
SpectrumPair group1_eigenvalues(const Group1Params& p);

/// Type I: lambda = 1/4 (1 + b0 +- sqrt(L-^2 + (t1+t2)^2)), 1/4 (1 - b0 +- sqrt(L+^2 + (t1-t2)^2)),
/// lambda^Gamma the same with L+ and L- exchanged. Type II exchanges lambda and lambda^Gamma.
SpectrumPair group2_eigenvalues(const Group2Params& p);

/// Numeric spectra of rho and of its partial transpose.
SpectrumPair numeric_eigenvalues(const DensityMatrix& rho);

/// PPT flags from a pair of spectra.
SpectralReport report_from(const SpectrumPair& s, double tol = kPsdTolerance);

SpectralReport classify(const DensityMatrix& rho, double tol = kPsdTolerance);
SpectralReport classify(const HyperplaneState& s, double tol = kPsdTolerance);

/// Matches both closed forms against the numeric spectra of `draws` random
/// states of the perp-set family at `center` (Group 2) and returns the type
/// that fits every draw within 1e-8. Throws std::logic_error if neither or
/// both fit.
int detect_type(Point center, std::uint64_t seed = 42, int draws = 100);

/// detect_type with the default seed, computed once per center.
int group2_type(Point center);

/// Largest absolute difference between two ascending spectra.
double max_abs_diff(const Spectrum& a, const Spectrum& b);

}  // namespace xstate
