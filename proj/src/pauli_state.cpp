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

#include "xstate/pauli_state.hpp"

#include <cmath>

#include "xstate/spectral.hpp"

namespace xstate {

using cd = std::complex<double>;

Qubit pauli_matrix(Pauli p) {
    Qubit m;
    switch (p) {
        case Pauli::I: m << 1, 0, 0, 1; break;
        case Pauli::X: m << 0, 1, 1, 0; break;
        case Pauli::Y: m << 0, cd(0, -1), cd(0, 1), 0; break;
        case Pauli::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

Eigen::Matrix4cd pauli_matrix(PauliLabel label) {
    const Qubit a = pauli_matrix(label.first);
    const Qubit b = pauli_matrix(label.second);
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

namespace {

// X,Y,Z -> 0,1,2
int axis(Pauli p) { return static_cast<int>(p) - 1; }

Pauli from_axis(int i) { return static_cast<Pauli>(i + 1); }

}  // namespace

double GeneralStateCoeffs::get(PauliLabel label) const {
    if (label.is_identity()) {
        throw std::invalid_argument("II has no free coefficient");
    }
    if (label.first == Pauli::I) {
        return tau_b[static_cast<std::size_t>(axis(label.second))];
    }
    if (label.second == Pauli::I) {
        return tau_a[static_cast<std::size_t>(axis(label.first))];
    }
    return beta(axis(label.first), axis(label.second));
}

void GeneralStateCoeffs::set(PauliLabel label, double value) {
    if (label.is_identity()) {
        throw std::invalid_argument("II has no free coefficient");
    }
    if (label.first == Pauli::I) {
        tau_b[static_cast<std::size_t>(axis(label.second))] = value;
    } else if (label.second == Pauli::I) {
        tau_a[static_cast<std::size_t>(axis(label.first))] = value;
    } else {
        beta(axis(label.first), axis(label.second)) = value;
    }
}

PointSet GeneralStateCoeffs::support() const {
    PointSet s;
    for (Point p : all_points()) {
        if (get(p) != 0.0) {
            s.insert(p);
        }
    }
    return s;
}

bool GeneralStateCoeffs::all_finite() const {
    for (Point p : all_points()) {
        if (!std::isfinite(get(p))) {
            return false;
        }
    }
    return true;
}

HyperplaneState HyperplaneState::make(const Hyperplane& h, const GeneralStateCoeffs& coeffs) {
    if (!coeffs.all_finite()) {
        throw InvalidStateError("state coefficients must be finite");
    }
    const PointSet outside(static_cast<std::uint16_t>(coeffs.support().mask() & ~h.points.mask()));
    if (!outside.empty()) {
        std::string names;
        for (const auto& l : outside.labels()) {
            names += (names.empty() ? "" : ",") + l;
        }
        throw InvalidStateError("coefficients on points outside " + h.name() + ": " + names);
    }
    return {h, coeffs};
}

HyperplaneState HyperplaneState::from_labels(const Hyperplane& h,
                                             const std::map<std::string, double>& coefficients) {
    GeneralStateCoeffs coeffs;
    for (const auto& [label, value] : coefficients) {
        Point p;
        try {
            p = point_of_label(label);
        } catch (const std::invalid_argument& e) {
            throw InvalidStateError("bad coefficient label '" + label + "': " + e.what());
        }
        if (!h.points.contains(p)) {
            throw InvalidStateError("label " + label + " is not a point of " + h.name());
        }
        coeffs.set(p, value);
    }
    return make(h, coeffs);
}

DensityMatrix build_density_matrix(const GeneralStateCoeffs& coeffs) {
    DensityMatrix rho = DensityMatrix::Identity();
    for (Point p : all_points()) {
        const double c = coeffs.get(p);
        if (c != 0.0) {
            rho += c * pauli_matrix(point_to_pauli(p));
        }
    }
    rho *= 0.25;
    return rho;
}

DensityMatrix build_density_matrix(const HyperplaneState& state) { return build_density_matrix(state.coeffs); }

GeneralStateCoeffs decompose(const DensityMatrix& rho) {
    GeneralStateCoeffs out;
    for (Point p : all_points()) {
        const cd t = (rho * pauli_matrix(point_to_pauli(p))).trace();
        out.set(p, t.real());
    }
    return out;
}

DensityMatrix partial_transpose(const DensityMatrix& rho) {
    DensityMatrix out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                for (int d = 0; d < 2; ++d) {
                    out(2 * a + d, 2 * c + b) = rho(2 * a + b, 2 * c + d);
                }
            }
        }
    }
    return out;
}

std::pair<Qubit, Qubit> reduced_states(const DensityMatrix& rho) {
    Qubit rho_a = Qubit::Zero();
    Qubit rho_b = Qubit::Zero();
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int k = 0; k < 2; ++k) {
                rho_a(x, y) += rho(2 * x + k, 2 * y + k);
                rho_b(x, y) += rho(2 * k + x, 2 * k + y);
            }
        }
    }
    return {rho_a, rho_b};
}

Group2Params Group2Params::from_betas(double beta0, double b1, double b2, double b3, double b4, int type,
                                      double tau1, double tau2) {
    Group2Params p;
    p.beta0 = beta0;
    p.m << b1, b2, b3, b4;
    p.type = type;
    p.tau1 = tau1;
    p.tau2 = tau2;
    return p;
}

Group1Frame group1_frame(Point center) {
    const PauliLabel c = point_to_pauli(center);
    if (group_of(center) != 1) {
        throw std::invalid_argument(label_of(center) + " is not a Group 1 point");
    }
    Group1Frame f{center, c, {}, {}};
    for (int i = 0; i < 3; ++i) {
        const Pauli s = from_axis(i);
        if (c.first == Pauli::I) {
            // center I(x)A: Bloch vector of qubit A, correlations s_i (x) A
            f.tau[static_cast<std::size_t>(i)] = {s, Pauli::I};
            f.beta[static_cast<std::size_t>(i)] = {s, c.second};
        } else {
            f.tau[static_cast<std::size_t>(i)] = {Pauli::I, s};
            f.beta[static_cast<std::size_t>(i)] = {c.first, s};
        }
    }
    return f;
}

Group2Frame group2_frame(Point center) {
    const PauliLabel c = point_to_pauli(center);
    if (group_of(center) != 2) {
        throw std::invalid_argument(label_of(center) + " is not a Group 2 point");
    }
    auto rest = [](Pauli a) {
        std::array<Pauli, 2> out{};
        std::size_t k = 0;
        for (int i = 0; i < 3; ++i) {
            if (from_axis(i) != a) out[k++] = from_axis(i);
        }
        return out;
    };
    const auto rows = rest(c.first);
    const auto cols = rest(c.second);
    Group2Frame f;
    f.center = center;
    f.beta0 = c;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            f.m[i][j] = {rows[i], cols[j]};
        }
    }
    f.tau1 = {c.first, Pauli::I};
    f.tau2 = {Pauli::I, c.second};
    return f;
}

std::optional<Point> group2_center(const Hyperplane& h) {
    if (h.kind == HyperplaneKind::PerpSet) {
        if (group_of(h.center) == 2) {
            return h.center;
        }
        return std::nullopt;
    }
    if (h.kind != HyperplaneKind::Grid || h.index == 0) {
        return std::nullopt;
    }
    const PointSet q0 = hyperplane_catalog().grid(0).points;
    const PointSet common = h.points & q0;
    for (Point c : q0.points()) {
        if ((fano_plane(c) & q0) == common) {
            return c;
        }
    }
    return std::nullopt;
}

Group1Params extract_group1_params(const HyperplaneState& state) {
    if (state.hyperplane.kind != HyperplaneKind::PerpSet || group_of(state.hyperplane.center) != 1) {
        throw std::invalid_argument("Group 1 parameters need a Group 1 perp-set, got " + state.hyperplane.name());
    }
    const Group1Frame f = group1_frame(state.hyperplane.center);
    Group1Params p;
    p.tau0 = state.coeffs.get(f.tau0);
    for (std::size_t i = 0; i < 3; ++i) {
        p.tau[i] = state.coeffs.get(f.tau[i]);
        p.beta[i] = state.coeffs.get(f.beta[i]);
    }
    return p;
}

Group2Params extract_group2_params(const HyperplaneState& state) {
    const std::optional<Point> center = group2_center(state.hyperplane);
    if (!center) {
        throw std::invalid_argument("Group 2 parameters need a Group 2 perp-set or one of Q1..Q9, got " +
                                    state.hyperplane.name());
    }
    const Group2Frame f = group2_frame(*center);
    Group2Params p;
    p.beta0 = state.coeffs.get(f.beta0);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            p.m(i, j) = state.coeffs.get(f.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
    if (state.hyperplane.kind == HyperplaneKind::PerpSet) {
        p.tau1 = state.coeffs.get(f.tau1);
        p.tau2 = state.coeffs.get(f.tau2);
    } else {
        for (Point q : state.hyperplane.points.points()) {
            if (group_of(q) == 1 && state.coeffs.get(q) != 0.0) {
                throw std::invalid_argument("grid state " + state.hyperplane.name() +
                                            " has a nonzero single-qubit coefficient on " + label_of(q) +
                                            "; only tau = 0 grid states map to Group 2 parameters");
            }
        }
    }
    p.type = group2_type(*center);
    return p;
}

HyperplaneState embed_group1(Point center, const Group1Params& p) {
    const Group1Frame f = group1_frame(center);
    GeneralStateCoeffs c;
    c.set(f.tau0, p.tau0);
    for (std::size_t i = 0; i < 3; ++i) {
        c.set(f.tau[i], p.tau[i]);
        c.set(f.beta[i], p.beta[i]);
    }
    return HyperplaneState::make(hyperplane_catalog().perp(center), c);
}

HyperplaneState embed_group2(Point center, const Group2Params& p) {
    const Group2Frame f = group2_frame(center);
    GeneralStateCoeffs c;
    c.set(f.beta0, p.beta0);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            c.set(f.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], p.m(i, j));
        }
    }
    c.set(f.tau1, p.tau1);
    c.set(f.tau2, p.tau2);
    return HyperplaneState::make(hyperplane_catalog().perp(center), c);
}

HyperplaneState make_named_state(std::string_view name, const NamedStateParams& params) {
    const HyperplaneCatalog& cat = hyperplane_catalog();
    if (name == "epr_phi_plus" || name == "werner") {
        const double p = name == "werner" ? params.p : 1.0;
        return HyperplaneState::from_labels(cat.perp(point_of_label("ZZ")), {{"XX", p}, {"YY", -p}, {"ZZ", p}});
    }
    if (name == "q0_state") {
        return HyperplaneState::from_labels(cat.grid(0), params.coefficients);
    }
    if (name == "q5_state") {
        return HyperplaneState::from_labels(cat.grid(5), params.coefficients);
    }
    if (name == "ovoid_o1_state") {
        return HyperplaneState::from_labels(cat.ovoid(1), params.coefficients);
    }
    throw std::invalid_argument("unknown named state '" + std::string(name) + "'");
}

}  // namespace xstate
