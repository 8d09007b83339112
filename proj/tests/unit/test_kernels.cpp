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

#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "xstate/hyperplanes.hpp"
#include "xstate/kernels/kernels.hpp"
#include "xstate/nonlocality.hpp"
#include "xstate/regions.hpp"
#include "xstate/spectral.hpp"

using namespace xstate;
using namespace xstate::kernels;

namespace {

Group2Batch random_batch(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    Group2Batch b;
    b.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        b.push_back(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), 1 + static_cast<int>(rng() % 2));
    }
    return b;
}

// Edge values: zeros of both signs, exact ties between branches, disc
// boundaries and non-finite inputs.
Group2Batch edge_batch() {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    Group2Batch b;
    b.push_back(0, 0, 0, 0, 0, 0, 0, 1);
    b.push_back(-0.0, -0.0, 0, -0.0, 0, -0.0, 0, 2);
    b.push_back(1, 1, 0, 0, -1, 0, 0, 1);
    b.push_back(0.5, 1, 0, 0, 0.5, 0, 0, 1);
    b.push_back(0.5, 1, 0, 0, 0.5, 0, 0, 2);
    b.push_back(-1, 0, 0, 0, 0, 0, 0, 2);
    b.push_back(0.25, 0.75, 0, 0, 0, 0, 0, 1);
    b.push_back(nan, 0.1, 0.2, 0.3, 0.4, 0, 0, 1);
    b.push_back(0.1, inf, 0.2, 0.3, 0.4, 0.1, 0.1, 2);
    b.push_back(0.1, 0.2, -inf, 0.3, 0.4, 0, 0, 1);
    b.push_back(0.3, 0.2, 0.1, nan, 0.4, nan, 0.2, 2);
    return b;
}

template <typename T>
bool same_bits(const std::vector<T>& a, const std::vector<T>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0;
}

class IsaReset : public ::testing::Test {
  protected:
    void TearDown() override { force_isa(std::nullopt); }
};

void require_avx2() {
    if (!isa_available(Isa::Avx2)) GTEST_SKIP() << "AVX2 variant not available";
}

std::vector<std::array<std::uint8_t, 3>> doily_lines() {
    std::vector<std::array<std::uint8_t, 3>> out;
    for (const Line& l : isotropic_lines()) {
        out.push_back({static_cast<std::uint8_t>(l.points[0].index()), static_cast<std::uint8_t>(l.points[1].index()),
                       static_cast<std::uint8_t>(l.points[2].index())});
    }
    return out;
}

}  // namespace

TEST(KernelDispatch, Names) {
    EXPECT_EQ(isa_name(Isa::Scalar), "scalar");
    EXPECT_EQ(isa_name(Isa::Avx2), "avx2");
    EXPECT_TRUE(isa_available(Isa::Scalar));
    EXPECT_TRUE(detected_isa() == Isa::Scalar || isa_available(Isa::Avx2));
}

TEST_F(IsaReset, ForceIsa) {
    force_isa(Isa::Scalar);
    EXPECT_EQ(active_isa(), Isa::Scalar);
    force_isa(std::nullopt);
    if (!isa_available(Isa::Avx2)) {
        EXPECT_THROW(force_isa(Isa::Avx2), std::invalid_argument);
    }
}

TEST(KernelDispatch, SizeChecks) {
    Group2Batch b = random_batch(5, 1);
    std::vector<double> small(3), ok(20);
    EXPECT_THROW(bell_measure(b.view(), small, Isa::Scalar), std::invalid_argument);
    EXPECT_THROW(group2_spectra(b.view(), ok, small, Isa::Scalar), std::invalid_argument);
    b.tau1.pop_back();
    std::vector<double> out(5);
    EXPECT_THROW(bell_measure(b.view(), out, Isa::Scalar), std::invalid_argument);
}

TEST(ScalarKernels, MatchSingleStateRoutines) {
    const Group2Batch b = random_batch(257, 2);
    const auto n = b.size();
    std::vector<double> rho(4 * n), gamma(4 * n), m(n);
    std::vector<std::uint8_t> cls(n);
    group2_spectra(b.view(), rho, gamma, Isa::Scalar);
    bell_measure(b.view(), m, Isa::Scalar);
    region_classify(b.view(), kRegionTolerance, cls, Isa::Scalar);
    for (std::size_t i = 0; i < n; ++i) {
        const Group2Params p = Group2Params::from_betas(b.beta0[i], b.beta1[i], b.beta2[i], b.beta3[i], b.beta4[i],
                                                        b.type[i], b.tau1[i], b.tau2[i]);
        const SpectrumPair s = group2_eigenvalues(p);
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_EQ(rho[4 * i + k], s.rho[k]);
            EXPECT_EQ(gamma[4 * i + k], s.gamma[k]);
        }
        EXPECT_EQ(m[i], bell_m_closed(p).m_value);
        Group2Params q = p;
        q.tau1 = q.tau2 = 0.0;
        EXPECT_EQ(static_cast<int>(cls[i]), static_cast<int>(classify_by_region(q)));
    }
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {};

TEST_P(KernelEquivalence, SpectraBitIdentical) {
    require_avx2();
    const Group2Batch b = random_batch(GetParam(), 100 + GetParam());
    const auto n = b.size();
    std::vector<double> r1(4 * n), g1(4 * n), r2(4 * n), g2(4 * n);
    group2_spectra(b.view(), r1, g1, Isa::Scalar);
    group2_spectra(b.view(), r2, g2, Isa::Avx2);
    EXPECT_TRUE(same_bits(r1, r2));
    EXPECT_TRUE(same_bits(g1, g2));
}

TEST_P(KernelEquivalence, BellMeasureBitIdentical) {
    require_avx2();
    const Group2Batch b = random_batch(GetParam(), 200 + GetParam());
    std::vector<double> a(b.size()), c(b.size());
    bell_measure(b.view(), a, Isa::Scalar);
    bell_measure(b.view(), c, Isa::Avx2);
    EXPECT_TRUE(same_bits(a, c));
}

TEST_P(KernelEquivalence, RegionCodesIdentical) {
    require_avx2();
    const Group2Batch b = random_batch(GetParam(), 300 + GetParam());
    std::vector<std::uint8_t> a(b.size()), c(b.size());
    region_classify(b.view(), kRegionTolerance, a, Isa::Scalar);
    region_classify(b.view(), kRegionTolerance, c, Isa::Avx2);
    EXPECT_EQ(a, c);
}

INSTANTIATE_TEST_SUITE_P(BatchSizes, KernelEquivalence, ::testing::Values(0, 1, 3, 4, 5, 7, 8, 9, 64, 1001));

TEST(KernelEquivalenceEdges, NonFiniteAndTies) {
    require_avx2();
    const Group2Batch b = edge_batch();
    const auto n = b.size();
    std::vector<double> r1(4 * n), g1(4 * n), r2(4 * n), g2(4 * n), m1(n), m2(n);
    std::vector<std::uint8_t> c1(n), c2(n);
    group2_spectra(b.view(), r1, g1, Isa::Scalar);
    group2_spectra(b.view(), r2, g2, Isa::Avx2);
    bell_measure(b.view(), m1, Isa::Scalar);
    bell_measure(b.view(), m2, Isa::Avx2);
    region_classify(b.view(), kRegionTolerance, c1, Isa::Scalar);
    region_classify(b.view(), kRegionTolerance, c2, Isa::Avx2);
    EXPECT_TRUE(same_bits(r1, r2));
    EXPECT_TRUE(same_bits(g1, g2));
    EXPECT_TRUE(same_bits(m1, m2));
    EXPECT_EQ(c1, c2);
}

TEST(KernelEquivalenceEdges, Tolerances) {
    require_avx2();
    const Group2Batch b = random_batch(333, 9);
    for (double tol : {0.0, 1e-10, 0.05, -0.01}) {
        std::vector<std::uint8_t> a(b.size()), c(b.size());
        region_classify(b.view(), tol, a, Isa::Scalar);
        region_classify(b.view(), tol, c, Isa::Avx2);
        EXPECT_EQ(a, c) << tol;
    }
}

TEST(HyperplaneScan, VariantsAgreeOnRanges) {
    const auto lines = doily_lines();
    std::vector<std::uint16_t> full;
    hyperplane_scan(lines, 0, 1u << 15, full, Isa::Scalar);
    EXPECT_EQ(full.size(), 32u);  // 31 proper ones plus the full set
    if (!isa_available(Isa::Avx2)) GTEST_SKIP() << "AVX2 variant not available";
    for (auto [lo, hi] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {0, 1u << 15}, {1, 0x7FFF}, {3, 4}, {5, 5}, {100, 117}, {12345, 23456}, {0x7FF0, 0x8000}}) {
        std::vector<std::uint16_t> a, c;
        hyperplane_scan(lines, lo, hi, a, Isa::Scalar);
        hyperplane_scan(lines, lo, hi, c, Isa::Avx2);
        EXPECT_EQ(a, c) << lo << ".." << hi;
    }
}

TEST(HyperplaneScan, AppendsToOutput) {
    const auto lines = doily_lines();
    std::vector<std::uint16_t> out{7};
    hyperplane_scan(lines, 0, 1, out, Isa::Scalar);
    EXPECT_EQ(out, (std::vector<std::uint16_t>{7}));  // the empty set meets every line in 0 points
}
