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

// Property checks behind `xstate verify` and the acceptance binary. Each
// check draws from its own seeded generator, so results depend only on
// (seed, draws).

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xstate::verify {

struct CheckResult {
    explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    long passed = 0;
    long total = 0;
    std::vector<std::string> notes;
    std::vector<std::string> failures;  // first few counterexamples

    bool ok() const { return passed == total && total > 0; }
    void record(bool ok, const std::string& what_failed);
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int draws = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
};

inline constexpr std::string_view kSuites[] = {"geometry", "spectral", "region", "nonlocality", "all"};

bool is_suite(std::string_view name);

// geometry
CheckResult check_census();
CheckResult check_doily();
CheckResult check_q0_intersections();
CheckResult check_catalog_rows();

// spectral
CheckResult check_group1_spectra(int draws_per_family, std::uint64_t seed);
CheckResult check_group2_spectra(int draws_per_family, std::uint64_t seed);
CheckResult check_type_table(std::uint64_t seed);

struct WernerThresholds {
    double ppt = 0.0;
    double bell = 0.0;
};
/// Bisection on werner(p): first p with a negative partial-transpose
/// eigenvalue, and first p with M > 1.
WernerThresholds werner_thresholds(double tol = 1e-12);
CheckResult check_werner();

// region
CheckResult check_region_ppt(int draws, std::uint64_t seed);
CheckResult check_region_dual(int draws, std::uint64_t seed);
CheckResult check_sign_relation(int draws, std::uint64_t seed);
CheckResult check_emptiness_sampling(int cases, std::uint64_t seed);

// nonlocality
CheckResult check_bell_oracle(int draws, std::uint64_t seed);
CheckResult check_tau0_bound_and_purity(int valid_draws, std::uint64_t seed);
CheckResult check_upper_bound(int valid_draws, std::uint64_t seed);
CheckResult check_bell_implies_entangled(int valid_draws, std::uint64_t seed);
CheckResult check_group1_local(int draws, std::uint64_t seed);
CheckResult check_constant_m_curve();
CheckResult check_heatmap_nonlocality(int resolution);

/// Throws std::invalid_argument for an unknown suite or draws < 1.
SuiteReport run_suite(std::string_view suite, std::uint64_t seed, int draws);

std::string format_report(const SuiteReport& r);

}  // namespace xstate::verify
