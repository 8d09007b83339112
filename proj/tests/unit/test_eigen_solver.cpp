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

#include <Eigen/Eigenvalues>

#include "xstate/eigen_solver.hpp"
#include "xstate/pauli_state.hpp"

using namespace xstate;

namespace {

Eigen::Matrix4cd random_hermitian(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    Eigen::Matrix4cd a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = {n(rng), n(rng)};
    return 0.5 * (a + a.adjoint());
}

}  // namespace

TEST(EigHermitian4, Trivial) {
    const auto mixed = eig_hermitian4(Eigen::Matrix4cd::Identity() / 4.0);
    for (double v : mixed) EXPECT_DOUBLE_EQ(v, 0.25);
    Eigen::Matrix4cd d = Eigen::Matrix4cd::Zero();
    d.diagonal() << 0.3, -1.0, 2.0, 0.0;
    const auto ev = eig_hermitian4(d);
    EXPECT_EQ(ev, (std::array<double, 4>{-1.0, 0.0, 0.3, 2.0}));
}

TEST(EigHermitian4, BellProjector) {
    const auto ev = eig_hermitian4(build_density_matrix(make_named_state("epr_phi_plus")));
    EXPECT_NEAR(ev[0], 0.0, 1e-15);
    EXPECT_NEAR(ev[1], 0.0, 1e-15);
    EXPECT_NEAR(ev[2], 0.0, 1e-15);
    EXPECT_NEAR(ev[3], 1.0, 1e-15);
}

TEST(EigHermitian4, MatchesEigenOnRandomMatrices) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        const Eigen::Matrix4cd h = random_hermitian(rng);
        const auto ours = eig_hermitian4(h);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> ref(h, Eigen::EigenvaluesOnly);
        double sum = 0.0;
        for (int k = 0; k < 4; ++k) {
            EXPECT_NEAR(ours[static_cast<std::size_t>(k)], ref.eigenvalues()(k), 1e-12);
            sum += ours[static_cast<std::size_t>(k)];
        }
        EXPECT_NEAR(sum, h.trace().real(), 1e-10);
        EXPECT_TRUE(std::is_sorted(ours.begin(), ours.end()));
    }
}

TEST(EigHermitian4, DegenerateSpectra) {
    // Unitary conjugation of diag(1,1,-2,-2) keeps the pairs.
    std::mt19937_64 rng(2);
    Eigen::HouseholderQR<Eigen::Matrix4cd> qr(random_hermitian(rng));
    const Eigen::Matrix4cd q = qr.householderQ();
    Eigen::Vector4cd d(1, 1, -2, -2);
    const Eigen::Matrix4cd h = q * d.asDiagonal() * q.adjoint();
    const auto ev = eig_hermitian4(0.5 * (h + h.adjoint()));
    EXPECT_NEAR(ev[0], -2.0, 1e-12);
    EXPECT_NEAR(ev[1], -2.0, 1e-12);
    EXPECT_NEAR(ev[2], 1.0, 1e-12);
    EXPECT_NEAR(ev[3], 1.0, 1e-12);
}

TEST(EigHermitian4, RejectsNonHermitian) {
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Identity();
    h(0, 1) = {0.0, 1e-9};
    EXPECT_THROW(eig_hermitian4(h), std::invalid_argument);
}

TEST(EigSymmetric3, MatchesEigen) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n;
    for (int i = 0; i < 2000; ++i) {
        Eigen::Matrix3d a;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) a(r, c) = n(rng);
        const Eigen::Matrix3d s = a.transpose() * a;
        const auto ours = eig_symmetric3(s);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> ref(s, Eigen::EigenvaluesOnly);
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(ours[static_cast<std::size_t>(k)], ref.eigenvalues()(k), 1e-12);
    }
}
