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

#include "xstate/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>

#include "kernels/formulas.hpp"
#include "xstate/eigen_solver.hpp"

namespace xstate {

namespace {

double norm3(double a, double b, double c) { return std::sqrt(a * a + b * b + c * c); }

}  // namespace

SpectrumPair group1_eigenvalues(const Group1Params& p) {
    const double plus = norm3(p.tau[0] + p.beta[0], p.tau[1] + p.beta[1], p.tau[2] + p.beta[2]);
    const double minus = norm3(p.tau[0] - p.beta[0], p.tau[1] - p.beta[1], p.tau[2] - p.beta[2]);
    Spectrum s{0.25 * (1.0 + p.tau0 + plus), 0.25 * (1.0 + p.tau0 - plus), 0.25 * (1.0 - p.tau0 + minus),
               0.25 * (1.0 - p.tau0 - minus)};
    std::sort(s.begin(), s.end());
    return {s, s};
}

SpectrumPair group2_eigenvalues(const Group2Params& p) {
    SpectrumPair out;
    kernels::detail::group2_spectra_one(p.beta0, p.beta1(), p.beta2(), p.beta3(), p.beta4(), p.tau1, p.tau2,
                                        p.type, out.rho.data(), out.gamma.data());
    return out;
}

SpectrumPair numeric_eigenvalues(const DensityMatrix& rho) {
    return {eig_hermitian4(rho), eig_hermitian4(partial_transpose(rho))};
}

SpectralReport report_from(const SpectrumPair& s, double tol) {
    SpectralReport r;
    r.eigs_rho = s.rho;
    r.eigs_gamma = s.gamma;
    r.valid = s.rho[0] >= -tol;
    r.entangled = r.valid && s.gamma[0] < -tol;
    r.separable = r.valid && !r.entangled;
    return r;
}

SpectralReport classify(const DensityMatrix& rho, double tol) { return report_from(numeric_eigenvalues(rho), tol); }

SpectralReport classify(const HyperplaneState& s, double tol) { return classify(build_density_matrix(s), tol); }

double max_abs_diff(const Spectrum& a, const Spectrum& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::fabs(a[i] - b[i]));
    }
    return m;
}

int detect_type(Point center, std::uint64_t seed, int draws) {
    if (group_of(center) != 2) {
        throw std::invalid_argument("detect_type: " + label_of(center) + " is not a point of Q0");
    }
    if (draws < 1) {
        throw std::invalid_argument("detect_type: draws must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    bool fits[3] = {false, true, true};
    for (int i = 0; i < draws; ++i) {
        Group2Params p = Group2Params::from_betas(u(rng), u(rng), u(rng), u(rng), u(rng), 1, u(rng), u(rng));
        const SpectrumPair numeric = numeric_eigenvalues(build_density_matrix(embed_group2(center, p)));
        for (int t : {1, 2}) {
            p.type = t;
            const SpectrumPair closed = group2_eigenvalues(p);
            if (max_abs_diff(closed.rho, numeric.rho) > 1e-8 || max_abs_diff(closed.gamma, numeric.gamma) > 1e-8) {
                fits[t] = false;
            }
        }
    }
    if (fits[1] == fits[2]) {
        throw std::logic_error("detect_type: " + std::string(fits[1] ? "both" : "neither") +
                               " closed form fits the family at " + label_of(center));
    }
    return fits[1] ? 1 : 2;
}

int group2_type(Point center) {
    static std::once_flag once;
    static std::array<int, kNumPoints> table{};
    std::call_once(once, [] {
        for (Point p : all_points()) {
            if (group_of(p) == 2) {
                table[static_cast<std::size_t>(p.index())] = detect_type(p);
            }
        }
    });
    const int t = table[static_cast<std::size_t>(center.index())];
    if (t == 0) {
        throw std::invalid_argument("group2_type: " + label_of(center) + " is not a point of Q0");
    }
    return t;
}

}  // namespace xstate
