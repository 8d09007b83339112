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

// Planar picture of tau = 0 Group 2 states. With C = (b4, b3), E = (b1, -b2),
// r = 1 - |b0| and R = 1 + |b0|, a state is valid iff s E lies in
// V = (C,r) n (-C,R) and separable iff E lies in S = (C,r) n (-C,r), where
// s = (-1)^t sgn(b0) and (P,rho) is the closed disc of radius rho around P.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xstate/pauli_state.hpp"

namespace xstate {

inline constexpr double kRegionTolerance = 1e-10;

enum class RegionClass { Invalid, Separable, Entangled };

std::string_view region_class_name(RegionClass c);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2, Vec2) = default;
};

double distance(Vec2 a, Vec2 b);

struct RegionGeometry {
    Vec2 c;  // (b4, b3)
    Vec2 d;  // (b1, b2)
    Vec2 e;  // (b1, -b2)
    Vec2 f;  // (b4, -b3)
    double r = 1.0;
    double big_r = 1.0;
    int sign_factor = 1;

    static RegionGeometry of(const Group2Params& p);

    double l_minus() const { return distance(c, e); }
    double l_plus() const { return distance(c, -e); }
};

/// sqrt((b1+b4)^2 + (b2-b3)^2).
double l_plus(const Group2Params& p);
/// sqrt((b1-b4)^2 + (b2+b3)^2).
double l_minus(const Group2Params& p);

/// Requires tau1 = tau2 = 0 (std::invalid_argument otherwise).
RegionClass classify_by_region(const Group2Params& p, double tol = kRegionTolerance);

/// The same decision through F: valid iff s F lies in (D,r) n (-D,R),
/// separable iff F lies in (D,r) n (-D,r). |F - D| = L- and |F + D| = L+.
RegionClass dual_classify_by_region(const Group2Params& p, double tol = kRegionTolerance);

struct RegionEmptiness {
    bool v_nonempty = false;
    bool s_nonempty = false;
};

/// V nonempty iff b3^2 + b4^2 <= 1; S nonempty iff b3^2 + b4^2 <= (1 - |b0|)^2.
RegionEmptiness region_emptiness(double beta0, double beta3, double beta4);

struct RegionCell {
    double beta1 = 0.0;
    double beta2 = 0.0;
    RegionClass cls = RegionClass::Invalid;
};

/// Cell centers of a resolution x resolution grid over [-2,2]^2 in
/// (b1, b2), row-major with b2 outer and both axes increasing.
std::vector<Vec2> grid_centers(int resolution);

std::vector<RegionCell> sample_region(double beta0, double beta3, double beta4, int type, int resolution);

/// "beta1,beta2,class" header plus one row per cell.
std::string region_csv(const std::vector<RegionCell>& cells);

struct SignRelationReport {
    int draws = 0;
    int considered = 0;            // valid, entangled, b0 != 0
    int type1_checked = 0;
    int type1_counterexamples = 0;  // b0 < 0 <=> L+ > L- fails
    int type2_checked = 0;
    int type2_literal_holds = 0;        // literal statement on Type II draws
    int type2_mirrored_counterexamples = 0;  // b0 < 0 <=> L- > L+ fails
    std::vector<std::string> counterexamples;

    bool passed() const { return type1_counterexamples == 0 && type2_mirrored_counterexamples == 0; }
};

/// Random tau = 0 states spread over the nine Group 2 families; validity and
/// entanglement come from the numeric spectra. On Type II families the two
/// sides of the biconditional trade places, so those draws are checked in
/// mirrored form and the literal form is only tallied.
SignRelationReport sign_relation_fuzz(int draws, std::uint64_t seed = 42);

}  // namespace xstate
