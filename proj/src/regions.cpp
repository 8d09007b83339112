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

#include "xstate/regions.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kernels/formulas.hpp"
#include "xstate/kernels/kernels.hpp"
#include "xstate/spectral.hpp"

namespace xstate {

std::string_view region_class_name(RegionClass c) {
    switch (c) {
        case RegionClass::Invalid: return "invalid";
        case RegionClass::Separable: return "separable";
        case RegionClass::Entangled: return "entangled";
    }
    return "?";
}

double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

RegionGeometry RegionGeometry::of(const Group2Params& p) {
    RegionGeometry g;
    g.c = {p.beta4(), p.beta3()};
    g.d = {p.beta1(), p.beta2()};
    g.e = {p.beta1(), -p.beta2()};
    g.f = {p.beta4(), -p.beta3()};
    g.r = 1.0 - std::fabs(p.beta0);
    g.big_r = 1.0 + std::fabs(p.beta0);
    g.sign_factor = (p.type == 2 ? 1 : -1) * (p.beta0 < 0.0 ? -1 : 1);
    return g;
}

double l_plus(const Group2Params& p) { return std::hypot(p.beta1() + p.beta4(), p.beta2() - p.beta3()); }

double l_minus(const Group2Params& p) { return std::hypot(p.beta1() - p.beta4(), p.beta2() + p.beta3()); }

namespace {

void require_tau_zero(const Group2Params& p) {
    if (!p.tau_is_zero()) {
        throw std::invalid_argument("region classification needs tau1 = tau2 = 0");
    }
}

RegionClass from_code(std::uint8_t code) {
    switch (code) {
        case kernels::kSeparable: return RegionClass::Separable;
        case kernels::kEntangled: return RegionClass::Entangled;
        default: return RegionClass::Invalid;
    }
}

bool in_disc(Vec2 point, Vec2 center, double radius, double tol) { return distance(point, center) <= radius + tol; }

}  // namespace

RegionClass classify_by_region(const Group2Params& p, double tol) {
    require_tau_zero(p);
    return from_code(kernels::detail::region_one(p.beta0, p.beta1(), p.beta2(), p.beta3(), p.beta4(), p.type, tol));
}

RegionClass dual_classify_by_region(const Group2Params& p, double tol) {
    require_tau_zero(p);
    const RegionGeometry g = RegionGeometry::of(p);
    const Vec2 sf = static_cast<double>(g.sign_factor) * g.f;
    const bool valid = in_disc(sf, g.d, g.r, tol) && in_disc(sf, -g.d, g.big_r, tol);
    const bool separable = in_disc(g.f, g.d, g.r, tol) && in_disc(g.f, -g.d, g.r, tol);
    if (!valid) {
        return RegionClass::Invalid;
    }
    return separable ? RegionClass::Separable : RegionClass::Entangled;
}

RegionEmptiness region_emptiness(double beta0, double beta3, double beta4) {
    const double c2 = beta3 * beta3 + beta4 * beta4;
    const double r = 1.0 - std::fabs(beta0);
    return {c2 <= 1.0, r >= 0.0 && c2 <= r * r};
}

std::vector<Vec2> grid_centers(int resolution) {
    if (resolution < 2) {
        throw std::invalid_argument("resolution must be at least 2");
    }
    const double step = 4.0 / resolution;
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
    for (int j = 0; j < resolution; ++j) {
        for (int i = 0; i < resolution; ++i) {
            out.push_back({-2.0 + (i + 0.5) * step, -2.0 + (j + 0.5) * step});
        }
    }
    return out;
}

std::vector<RegionCell> sample_region(double beta0, double beta3, double beta4, int type, int resolution) {
    if (type != 1 && type != 2) {
        throw std::invalid_argument("type must be 1 or 2");
    }
    const std::vector<Vec2> centers = grid_centers(resolution);
    kernels::Group2Batch batch;
    batch.reserve(centers.size());
    for (Vec2 v : centers) {
        batch.push_back(beta0, v.x, v.y, beta3, beta4, 0.0, 0.0, type);
    }
    std::vector<std::uint8_t> codes(centers.size());
    kernels::region_classify(batch.view(), kRegionTolerance, codes);
    std::vector<RegionCell> cells;
    cells.reserve(centers.size());
    for (std::size_t i = 0; i < centers.size(); ++i) {
        cells.push_back({centers[i].x, centers[i].y, from_code(codes[i])});
    }
    return cells;
}

std::string region_csv(const std::vector<RegionCell>& cells) {
    std::ostringstream out;
    out.precision(17);
    out << "beta1,beta2,class\n";
    for (const RegionCell& c : cells) {
        out << c.beta1 << ',' << c.beta2 << ',' << region_class_name(c.cls) << '\n';
    }
    return out.str();
}

SignRelationReport sign_relation_fuzz(int draws, std::uint64_t seed) {
    if (draws < 1) {
        throw std::invalid_argument("sign_relation_fuzz: draws must be positive");
    }
    std::vector<Point> centers;
    for (Point p : all_points()) {
        if (group_of(p) == 2) centers.push_back(p);
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SignRelationReport rep;
    rep.draws = draws;
    for (int i = 0; i < draws; ++i) {
        const Point center = centers[static_cast<std::size_t>(i) % centers.size()];
        Group2Params p = Group2Params::from_betas(u(rng), u(rng), u(rng), u(rng), u(rng), group2_type(center));
        const SpectralReport s = classify(embed_group2(center, p));
        if (!s.entangled || p.beta0 == 0.0) {
            continue;
        }
        ++rep.considered;
        const bool negative = p.beta0 < 0.0;
        const bool plus_wins = l_plus(p) > l_minus(p);
        const bool literal = negative == plus_wins;
        auto dump = [&] {
            std::ostringstream o;
            o.precision(17);
            o << label_of(center) << " t=" << p.type << " b0=" << p.beta0 << " M=(" << p.beta1() << ',' << p.beta2()
              << ',' << p.beta3() << ',' << p.beta4() << ')';
            return o.str();
        };
        if (p.type == 1) {
            ++rep.type1_checked;
            if (!literal) {
                ++rep.type1_counterexamples;
                rep.counterexamples.push_back(dump());
            }
        } else {
            ++rep.type2_checked;
            rep.type2_literal_holds += literal;
            const bool mirrored = negative == (l_minus(p) > l_plus(p));
            if (!mirrored) {
                ++rep.type2_mirrored_counterexamples;
                rep.counterexamples.push_back(dump());
            }
        }
    }
    return rep;
}

}  // namespace xstate
