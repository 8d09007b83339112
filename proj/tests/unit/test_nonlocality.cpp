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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "xstate/nonlocality.hpp"
#include "xstate/spectral.hpp"

using namespace xstate;

namespace {

Eigen::Matrix3d beta_of(const Group2Params& p, Point center) { return embed_group2(center, p).coeffs.beta; }

}  // namespace

TEST(BellOracle, Examples) {
    Eigen::Matrix3d epr = Eigen::Vector3d(1, -1, 1).asDiagonal();
    EXPECT_NEAR(bell_m_oracle(epr), 2.0, 1e-15);
    EXPECT_EQ(bell_m_oracle(Eigen::Matrix3d::Zero()), 0.0);
    for (double p : {0.1, 0.5, 0.8}) {
        Eigen::Matrix3d w = Eigen::Vector3d(p, -p, p).asDiagonal();
        EXPECT_NEAR(bell_m_oracle(w), 2.0 * p * p, 1e-15);
    }
}

TEST(BellClosed, Epr) {
    const NonlocalityReport r = bell_m_closed(Group2Params::from_betas(1.0, 1.0, 0.0, 0.0, -1.0));
    EXPECT_EQ(r.b, 2.0);
    EXPECT_EQ(r.det, -1.0);
    EXPECT_EQ(r.u, 0.0);
    EXPECT_EQ(r.m1, 1.0);
    EXPECT_EQ(r.m2, 1.0);
    EXPECT_EQ(r.branch, MBranch::Beta0);
    EXPECT_EQ(r.m_value, 2.0);
    EXPECT_EQ(bell_m_closed(Group2Params{}).m_value, 0.0);
}

TEST(BellClosed, MatchesOracleOnAllFamilies) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (Point c : all_points()) {
        if (group_of(c) != 2) continue;
        for (int i = 0; i < 1000; ++i) {
            const Group2Params p = Group2Params::from_betas(u(rng), u(rng), u(rng), u(rng), u(rng));
            const NonlocalityReport r = bell_m_closed(p);
            ASSERT_NEAR(r.m_value, bell_m_oracle(beta_of(p, c)), 1e-10) << label_of(c);
            ASSERT_LE(r.m1, r.m2);
            ASSERT_GE(r.m1, -1e-15);
            ASSERT_GE(r.u, 0.0);
        }
    }
}

TEST(BellClosed, TieUsesBeta0Branch) {
    // M = diag(1, 0.5): m1 = 0.25 = b0^2, all exact in binary.
    const NonlocalityReport r = bell_m_closed(Group2Params::from_betas(0.5, 1.0, 0.0, 0.0, 0.5));
    EXPECT_EQ(r.m1, 0.25);
    EXPECT_EQ(r.branch, MBranch::Beta0);
    EXPECT_NEAR(r.m_value, r.b, 1e-15);
}

TEST(ConstantMCurve, Figure8) {
    const ConstantMCurve c = constant_m_curve(1.0, 0.45, 0.0, 0.6);
    EXPECT_EQ(c.regime, CurveRegime::Arcs);
    EXPECT_DOUBLE_EQ(c.circle_radius, 0.8);
    EXPECT_NEAR(c.ellipse_a, 0.893, 5e-4);
    EXPECT_NEAR(c.ellipse_b, 0.661, 5e-4);
    EXPECT_NEAR(c.hat.x, 0.6698, 1e-4);
    EXPECT_NEAR(c.hat.y, 0.4375, 1e-4);
    ASSERT_EQ(c.intersections.size(), 4u);
    for (Vec2 v : c.intersections) {
        const NonlocalityReport r = bell_m_closed(Group2Params::from_betas(0.45, v.x, v.y, 0.0, 0.6));
        EXPECT_NEAR(r.b, 1.0, 1e-12);
        EXPECT_NEAR(r.m1, 0.45 * 0.45, 1e-12);
    }
    for (Vec2 v : c.sample(100)) {
        EXPECT_NEAR(bell_m_closed(Group2Params::from_betas(0.45, v.x, v.y, 0.0, 0.6)).m_value, 1.0, 1e-8);
    }
}

TEST(ConstantMCurve, RotatedFrames) {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int arcs = 0, ellipse_only = 0;
    for (int i = 0; i < 300; ++i) {
        const double b0 = u(rng), b3 = u(rng), b4 = u(rng), k = 2.0 * std::fabs(u(rng)) + 0.01;
        const ConstantMCurve c = constant_m_curve(k, b0, b3, b4);
        arcs += c.regime == CurveRegime::Arcs;
        ellipse_only += c.regime == CurveRegime::EllipseOnly;
        const double c2 = b3 * b3 + b4 * b4;
        const double m2 = k - b0 * b0;
        // Intersections appear exactly inside the window m2 >= |C|^2 >= b0^2.
        EXPECT_EQ(!c.intersections.empty(), m2 >= c2 && c2 >= b0 * b0) << k << ' ' << b0 << ' ' << b3 << ' ' << b4;
        for (Vec2 v : c.sample(40)) {
            ASSERT_NEAR(bell_m_closed(Group2Params::from_betas(b0, v.x, v.y, b3, b4)).m_value, k, 1e-8)
                << regime_name(c.regime);
        }
        if (!c.foci.empty()) {
            EXPECT_NEAR(c.foci[0].x, b4, 1e-12);
            EXPECT_NEAR(c.foci[0].y, -b3, 1e-12);
        }
    }
    EXPECT_GT(arcs, 10);
    EXPECT_GT(ellipse_only, 10);
}

TEST(ConstantMCurve, DegenerateFrames) {
    const ConstantMCurve same = constant_m_curve(0.5, 0.0, 0.0, 0.0);
    EXPECT_EQ(same.regime, CurveRegime::Coincident);
    EXPECT_DOUBLE_EQ(same.circle_radius, same.ellipse_a);
    const ConstantMCurve inner = constant_m_curve(0.5, 0.4, 0.0, 0.0);
    EXPECT_EQ(inner.regime, CurveRegime::EllipseOnly);
    EXPECT_TRUE(inner.intersections.empty());
    for (Vec2 v : inner.sample(16)) {
        EXPECT_NEAR(bell_m_closed(Group2Params::from_betas(0.4, v.x, v.y, 0.0, 0.0)).m_value, 0.5, 1e-12);
    }
    const ConstantMCurve none = constant_m_curve(0.3, 0.6, 0.0, 0.2);
    EXPECT_EQ(none.regime, CurveRegime::Undefined);
    EXPECT_TRUE(none.sample(10).empty());
}

TEST(UpperBound, Tau0Examples) {
    EXPECT_NEAR(m_upper_bound(Group2Params::from_betas(0.45, 0.1, 0.2, 0.0, 0.1)), 1.2025, 1e-15);
    const Group2Params epr = Group2Params::from_betas(1.0, 1.0, 0.0, 0.0, -1.0);
    EXPECT_EQ(m_upper_bound(epr), 2.0);
    EXPECT_EQ(bell_m_closed(epr).m_value, 2.0);
}

TEST(UpperBound, HoldsOnValidDrawsWithTau) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int valid = 0;
    for (int i = 0; valid < 3000 && i < 1000000; ++i) {
        const int t = 1 + i % 2;
        const Group2Params p = Group2Params::from_betas(u(rng), u(rng), u(rng), u(rng), u(rng), t, u(rng), u(rng));
        if (!report_from(group2_eigenvalues(p)).valid) continue;
        ++valid;
        ASSERT_LE(bell_m_closed(p).m_value, m_upper_bound(p) + 1e-10);
    }
    EXPECT_EQ(valid, 3000);
}

TEST(UpperBound, FrozenSignCounterexample) {
    // Valid Type I state where the radicand with the opposite sign on the
    // tau1 tau2 det term is negative.
    const Group2Params p = Group2Params::from_betas(0.59, 0.3, -0.24, -0.19, -0.4, 1, 0.61, 0.61);
    ASSERT_TRUE(report_from(group2_eigenvalues(p)).valid);
    const NonlocalityReport r = bell_m_closed(p);
    const double t = 2 * 0.61 * 0.61;
    const double other_sign = std::pow(1 - 0.59 * 0.59, 2) - 2 * r.b * t + 8 * 0.61 * 0.61 * r.det;
    EXPECT_LT(other_sign, 0.0);
    EXPECT_NO_THROW(m_upper_bound(p));
    EXPECT_LE(r.m_value, m_upper_bound(p));
}

TEST(UpperBound, FrozenBBranchCounterexample) {
    // Valid Type I state on the B-branch above the b0-branch expression alone.
    const Group2Params p = Group2Params::from_betas(-0.46, 0.36, -0.57, 0.66, 0.32, 1, 0.19, 0.33);
    ASSERT_TRUE(report_from(group2_eigenvalues(p)).valid);
    const NonlocalityReport r = bell_m_closed(p);
    EXPECT_EQ(r.branch, MBranch::B);
    const double b0sq = 0.46 * 0.46, t = 0.19 * 0.19 + 0.33 * 0.33;
    const double rad = std::pow(1 - b0sq, 2) - 2 * r.b * t - 8 * 0.19 * 0.33 * r.det;
    const double beta0_branch_only = b0sq + 0.5 * (1 + b0sq - t + std::sqrt(rad));
    EXPECT_GT(r.m_value, beta0_branch_only);
    EXPECT_LE(r.m_value, m_upper_bound(p));
    EXPECT_NEAR(m_upper_bound(p), 1 + b0sq - t, 1e-15);
}

TEST(UpperBound, InvalidStateRejected) {
    EXPECT_THROW(m_upper_bound(Group2Params::from_betas(0.0, 1.5, 1.5, 1.5, 1.5, 1, 0.9, 0.9)), std::domain_error);
}

TEST(Purity, Examples) {
    EXPECT_EQ(purity_equivalence_check(Group2Params::from_betas(1.0, 1.0, 0.0, 0.0, -1.0)),
              PurityOutcome::PureAndMaximal);
    EXPECT_EQ(purity_equivalence_check(Group2Params::from_betas(0.9, 0.9, 0.0, 0.0, -0.9)), PurityOutcome::Neither);
    Group2Params with_tau;
    with_tau.tau2 = 0.2;
    EXPECT_THROW(purity_equivalence_check(with_tau), std::invalid_argument);
}

TEST(Purity, NoViolationsAndBoundOnValidDraws) {
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int valid = 0;
    for (int i = 0; valid < 10000; ++i) {
        const Group2Params p = Group2Params::from_betas(u(rng), u(rng), u(rng), u(rng), u(rng), 1 + i % 2);
        if (classify_by_region(p) == RegionClass::Invalid) continue;
        ++valid;
        const double m = bell_m_closed(p).m_value;
        ASSERT_LE(m, 1.0 + p.beta0 * p.beta0 + 1e-10);
        ASSERT_LE(m, 2.0 + 1e-10);
        ASSERT_NE(purity_equivalence_check(p), PurityOutcome::ViolationOfProp);
    }
}

TEST(Heatmap, Figure11) {
    const auto cells = heatmap_m(0.45, -0.3, 0.4, 200, 1);
    ASSERT_EQ(cells.size(), 40000u);
    int nonlocal = 0;
    for (const HeatCell& c : cells) {
        if (c.valid && c.m > 1.0) {
            ++nonlocal;
            EXPECT_EQ(c.cls, RegionClass::Entangled);
        }
    }
    EXPECT_GT(nonlocal, 0);
}

TEST(Heatmap, CsvAndSmallGrid) {
    const auto cells = heatmap_m(0.0, 0.0, 0.0, 2);
    ASSERT_EQ(cells.size(), 4u);
    const std::string csv = heatmap_csv(cells);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "beta1,beta2,m");
    // All four cell centers (+-1, +-1) have L+ or L- = 2 > 1: invalid, m empty.
    EXPECT_NE(csv.find("-1,-1,\n"), std::string::npos);
}

TEST(Heatmap, ZeroBeta0AndZeroC) {
    double max_m = 0.0;
    for (const HeatCell& c : heatmap_m(0.0, 0.0, 0.0, 101)) {
        if (c.valid) max_m = std::max(max_m, c.m);
    }
    EXPECT_LE(max_m, 1.0 + 1e-12);
}
