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

// Horodecki measure M: the sum of the two largest eigenvalues of beta^T beta.
// A state violates a CHSH inequality iff M > 1. For Group 2 states,
// beta^T beta has eigenvalues {b0^2, m1, m2} with m1,2 = (B -+ U)/2,
// B = tr M^T M and U = sqrt(B^2 - 4 det(M)^2).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "xstate/pauli_state.hpp"
#include "xstate/regions.hpp"

namespace xstate {

enum class MBranch { B, Beta0 };

std::string_view branch_name(MBranch b);

struct NonlocalityReport {
    double m_value = 0.0;
    double b = 0.0;
    double det = 0.0;
    double u = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    MBranch branch = MBranch::Beta0;
};

/// Two largest eigenvalues of beta^T beta, summed.
double bell_m_oracle(const Eigen::Matrix3d& beta);

/// B when b0^2 < m1, else b0^2 + m2. Ignores tau.
NonlocalityReport bell_m_closed(const Group2Params& p);

enum class CurveRegime { Arcs, EllipseOnly, Coincident, Undefined };

std::string_view regime_name(CurveRegime r);

/// The level set M = k in the (b1, b2) plane for fixed b0 and C = (b4, b3).
/// Geometry is computed in the frame rotated by theta = atan2(b3, b4), where
/// b3' = 0 and b4' = |C|; a point (b1', b2') maps back as R(-theta)(b1', b2').
/// There the B-branch is the circle b1'^2 + b2'^2 = k - |C|^2 and the
/// b0-branch the ellipse b1'^2/m2 + b2'^2/(m2 - |C|^2) = 1 with m2 = k - b0^2.
struct ConstantMCurve {
    double k = 0.0;
    double beta0 = 0.0;
    double beta3 = 0.0;
    double beta4 = 0.0;
    double theta = 0.0;
    double c_norm = 0.0;
    double m2 = 0.0;
    double circle_radius = 0.0;  // NaN when k < |C|^2
    double ellipse_a = 0.0;      // NaN when m2 < |C|^2
    double ellipse_b = 0.0;
    std::vector<Vec2> foci;           // original frame
    std::vector<Vec2> intersections;  // original frame
    Vec2 hat{};                       // (b1^, b2^) in the rotated frame
    CurveRegime regime = CurveRegime::Undefined;

    /// `n` points on the curve, original frame. Arcs: half on the circle
    /// (|b1'| >= b1^), half on the ellipse (|b1'| <= b1^).
    std::vector<Vec2> sample(int n) const;
    /// Rotated-frame point to original (b1, b2).
    Vec2 to_original(Vec2 rotated) const;
};

ConstantMCurve constant_m_curve(double k, double beta0, double beta3, double beta4);

/// For a valid state with T = tau1^2 + tau2^2:
///   M <= max(1 + b0^2 - T, b0^2 + (1 + b0^2 - T + sqrt(rad)) / 2),
///   rad = (1 - b0^2)^2 - 2 B T + (-1)^t 8 tau1 tau2 det M.
/// The first term bounds the B-branch, the second the b0-branch. Throws
/// std::domain_error when rad < -1e-9 (the state cannot be valid).
double m_upper_bound(const Group2Params& p);

enum class PurityOutcome { PureAndMaximal, Neither, ViolationOfProp };

std::string_view purity_outcome_name(PurityOutcome o);

/// Compares |M - 2| <= tol with |b0^2 + B - 3| <= tol for a tau = 0 state.
PurityOutcome purity_equivalence_check(const Group2Params& p, double tol = 1e-9);

struct HeatCell {
    double beta1 = 0.0;
    double beta2 = 0.0;
    bool valid = false;
    double m = 0.0;  // meaningful only when valid
    RegionClass cls = RegionClass::Invalid;
};

/// M on the grid of grid_centers(resolution); validity and class from the
/// region kernel.
std::vector<HeatCell> heatmap_m(double beta0, double beta3, double beta4, int resolution, int type = 1);

/// "beta1,beta2,m" header; m left empty for invalid cells.
std::string heatmap_csv(const std::vector<HeatCell>& cells);

}  // namespace xstate
