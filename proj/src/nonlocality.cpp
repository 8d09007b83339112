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

#include "xstate/nonlocality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "kernels/formulas.hpp"
#include "xstate/eigen_solver.hpp"
#include "xstate/kernels/kernels.hpp"

namespace xstate {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kCurveTol = 1e-12;

}  // namespace

std::string_view branch_name(MBranch b) { return b == MBranch::B ? "B" : "beta0"; }

std::string_view regime_name(CurveRegime r) {
    switch (r) {
        case CurveRegime::Arcs: return "circle_ellipse_arcs";
        case CurveRegime::EllipseOnly: return "ellipse_only";
        case CurveRegime::Coincident: return "coincident_circle";
        case CurveRegime::Undefined: return "undefined";
    }
    return "?";
}

std::string_view purity_outcome_name(PurityOutcome o) {
    switch (o) {
        case PurityOutcome::PureAndMaximal: return "pure_and_maximal";
        case PurityOutcome::Neither: return "neither";
        case PurityOutcome::ViolationOfProp: return "violation_of_prop";
    }
    return "?";
}

double bell_m_oracle(const Eigen::Matrix3d& beta) {
    const std::array<double, 3> ev = eig_symmetric3(beta.transpose() * beta);
    return ev[1] + ev[2];
}

NonlocalityReport bell_m_closed(const Group2Params& p) {
    NonlocalityReport r;
    const double b1 = p.beta1(), b2 = p.beta2(), b3 = p.beta3(), b4 = p.beta4();
    r.b = b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4;
    r.det = b1 * b4 - b2 * b3;
    r.u = std::sqrt(std::max(r.b * r.b - 4.0 * r.det * r.det, 0.0));
    r.m1 = 0.5 * (r.b - r.u);
    r.m2 = 0.5 * (r.b + r.u);
    r.m_value = kernels::detail::bell_measure_one(p.beta0, b1, b2, b3, b4);
    r.branch = p.beta0 * p.beta0 < r.m1 ? MBranch::B : MBranch::Beta0;
    return r;
}

Vec2 ConstantMCurve::to_original(Vec2 v) const {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * v.x + s * v.y, -s * v.x + c * v.y};
}

ConstantMCurve constant_m_curve(double k, double beta0, double beta3, double beta4) {
    ConstantMCurve curve;
    curve.k = k;
    curve.beta0 = beta0;
    curve.beta3 = beta3;
    curve.beta4 = beta4;
    curve.theta = std::atan2(beta3, beta4);
    curve.c_norm = std::hypot(beta3, beta4);
    const double c2 = curve.c_norm * curve.c_norm;
    const double b0sq = beta0 * beta0;
    curve.m2 = k - b0sq;
    curve.circle_radius = k >= c2 ? std::sqrt(k - c2) : kNaN;
    if (curve.m2 < c2 - kCurveTol) {
        // M >= b0^2 + m2(D) >= b0^2 + |C|^2 > k everywhere.
        curve.ellipse_a = curve.ellipse_b = kNaN;
        curve.regime = CurveRegime::Undefined;
        return curve;
    }
    curve.ellipse_a = std::sqrt(curve.m2);
    curve.ellipse_b = std::sqrt(std::max(curve.m2 - c2, 0.0));
    curve.foci = {curve.to_original({curve.c_norm, 0.0}), curve.to_original({-curve.c_norm, 0.0})};
    if (curve.c_norm <= kCurveTol) {
        curve.regime = std::fabs(beta0) <= kCurveTol ? CurveRegime::Coincident : CurveRegime::EllipseOnly;
        return curve;
    }
    if (b0sq > c2) {
        curve.regime = CurveRegime::EllipseOnly;
        return curve;
    }
    curve.regime = CurveRegime::Arcs;
    curve.hat = {std::sqrt(b0sq * curve.m2) / curve.c_norm,
                 std::sqrt(std::max((c2 - b0sq) * (curve.m2 - c2), 0.0)) / curve.c_norm};
    for (double sx : {1.0, -1.0}) {
        for (double sy : {1.0, -1.0}) {
            curve.intersections.push_back(curve.to_original({sx * curve.hat.x, sy * curve.hat.y}));
        }
    }
    return curve;
}

std::vector<Vec2> ConstantMCurve::sample(int n) const {
    std::vector<Vec2> out;
    if (n <= 0 || regime == CurveRegime::Undefined) {
        return out;
    }
    const double pi = std::numbers::pi;
    auto ellipse_at = [this](double psi) { return Vec2{ellipse_a * std::cos(psi), ellipse_b * std::sin(psi)}; };
    auto circle_at = [this](double phi) { return Vec2{circle_radius * std::cos(phi), circle_radius * std::sin(phi)}; };
    if (regime == CurveRegime::EllipseOnly || regime == CurveRegime::Coincident) {
        for (int i = 0; i < n; ++i) {
            out.push_back(to_original(ellipse_at(2.0 * pi * i / n)));
        }
        return out;
    }
    // Ellipse part: psi in [psi0, pi - psi0] and its mirror; circle part:
    // phi in [-phi0, phi0] and its mirror.
    const double psi0 = std::acos(std::clamp(hat.x / ellipse_a, -1.0, 1.0));
    const double phi0 = std::acos(std::clamp(hat.x / circle_radius, -1.0, 1.0));
    const int on_ellipse = n / 2;
    const int on_circle = n - on_ellipse;
    for (int i = 0; i < on_ellipse; ++i) {
        const double f = on_ellipse > 1 ? static_cast<double>(i / 2) / std::max(1, (on_ellipse - 1) / 2) : 0.5;
        const double psi = psi0 + f * (pi - 2.0 * psi0) + (i % 2 ? pi : 0.0);
        out.push_back(to_original(ellipse_at(psi)));
    }
    for (int i = 0; i < on_circle; ++i) {
        const double f = on_circle > 1 ? static_cast<double>(i / 2) / std::max(1, (on_circle - 1) / 2) : 0.5;
        const double phi = -phi0 + f * 2.0 * phi0 + (i % 2 ? pi : 0.0);
        out.push_back(to_original(circle_at(phi)));
    }
    return out;
}

double m_upper_bound(const Group2Params& p) {
    const NonlocalityReport r = bell_m_closed(p);
    const double b0sq = p.beta0 * p.beta0;
    const double t = p.tau1 * p.tau1 + p.tau2 * p.tau2;
    const double sign = p.type == 2 ? 1.0 : -1.0;
    const double one_minus = 1.0 - b0sq;
    const double rad = one_minus * one_minus - 2.0 * r.b * t + sign * 8.0 * p.tau1 * p.tau2 * r.det;
    if (rad < -1e-9) {
        throw std::domain_error("m_upper_bound: negative radicand, the state is not valid");
    }
    const double b_branch = 1.0 + b0sq - t;
    const double beta0_branch = b0sq + 0.5 * (1.0 + b0sq - t + std::sqrt(std::max(rad, 0.0)));
    return std::max(b_branch, beta0_branch);
}

PurityOutcome purity_equivalence_check(const Group2Params& p, double tol) {
    if (!p.tau_is_zero()) {
        throw std::invalid_argument("purity_equivalence_check needs tau1 = tau2 = 0");
    }
    const NonlocalityReport r = bell_m_closed(p);
    const bool maximal = std::fabs(r.m_value - 2.0) <= tol;
    const bool pure = std::fabs(p.beta0 * p.beta0 + r.b - 3.0) <= tol;
    if (maximal && pure) return PurityOutcome::PureAndMaximal;
    if (!maximal && !pure) return PurityOutcome::Neither;
    return PurityOutcome::ViolationOfProp;
}

std::vector<HeatCell> heatmap_m(double beta0, double beta3, double beta4, int resolution, int type) {
    const std::vector<RegionCell> regions = sample_region(beta0, beta3, beta4, type, resolution);
    kernels::Group2Batch batch;
    batch.reserve(regions.size());
    for (const RegionCell& c : regions) {
        batch.push_back(beta0, c.beta1, c.beta2, beta3, beta4, 0.0, 0.0, type);
    }
    std::vector<double> m(regions.size());
    kernels::bell_measure(batch.view(), m);
    std::vector<HeatCell> cells;
    cells.reserve(regions.size());
    for (std::size_t i = 0; i < regions.size(); ++i) {
        const bool valid = regions[i].cls != RegionClass::Invalid;
        cells.push_back({regions[i].beta1, regions[i].beta2, valid, m[i], regions[i].cls});
    }
    return cells;
}

std::string heatmap_csv(const std::vector<HeatCell>& cells) {
    std::ostringstream out;
    out.precision(17);
    out << "beta1,beta2,m\n";
    for (const HeatCell& c : cells) {
        out << c.beta1 << ',' << c.beta2 << ',';
        if (c.valid) out << c.m;
        out << '\n';
    }
    return out.str();
}

}  // namespace xstate
