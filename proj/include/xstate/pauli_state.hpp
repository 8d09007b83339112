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

// Two-qubit states written on the Pauli basis,
//   rho = 1/4 (I + sum_i tauA_i s_i(x)I + sum_j tauB_j I(x)s_j + sum_ij beta_ij s_i(x)s_j),
// restricted to coefficient supports that form a hyperplane of W(3,2), plus
// the generalized parameters used by the closed-form spectra.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "xstate/gf2_geometry.hpp"
#include "xstate/hyperplanes.hpp"

namespace xstate {

using DensityMatrix = Eigen::Matrix4cd;
using Qubit = Eigen::Matrix2cd;

/// Pauli matrix for a single factor.
Qubit pauli_matrix(Pauli p);
/// A1 (x) A2, with the first factor on the more significant qubit.
Eigen::Matrix4cd pauli_matrix(PauliLabel label);

struct GeneralStateCoeffs {
    std::array<double, 3> tau_a{};  // X(x)I, Y(x)I, Z(x)I
    std::array<double, 3> tau_b{};  // I(x)X, I(x)Y, I(x)Z
    Eigen::Matrix3d beta = Eigen::Matrix3d::Zero();  // beta(i,j): s_i (x) s_j

    double get(PauliLabel label) const;
    void set(PauliLabel label, double value);
    double get(Point p) const { return get(point_to_pauli(p)); }
    void set(Point p, double value) { set(point_to_pauli(p), value); }

    /// Points carrying a nonzero coefficient.
    PointSet support() const;
    bool all_finite() const;
};

class InvalidStateError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct HyperplaneState {
    Hyperplane hyperplane;
    GeneralStateCoeffs coeffs;

    /// Validates that every coefficient lies on the hyperplane.
    static HyperplaneState make(const Hyperplane& h, const GeneralStateCoeffs& coeffs);
    /// Sparse label -> value form. Unknown labels, "II" and labels outside the
    /// hyperplane raise InvalidStateError.
    static HyperplaneState from_labels(const Hyperplane& h, const std::map<std::string, double>& coefficients);
};

DensityMatrix build_density_matrix(const GeneralStateCoeffs& coeffs);
DensityMatrix build_density_matrix(const HyperplaneState& state);

/// Inverse of build_density_matrix: coefficient of P is tr(rho P).
GeneralStateCoeffs decompose(const DensityMatrix& rho);

/// Transpose on the second qubit: (2a+b, 2c+d) -> (2a+d, 2c+b).
DensityMatrix partial_transpose(const DensityMatrix& rho);

/// (rho_A, rho_B): partial traces over the second and the first qubit.
std::pair<Qubit, Qubit> reduced_states(const DensityMatrix& rho);

struct Group1Params {
    double tau0 = 0.0;
    std::array<double, 3> tau{};
    std::array<double, 3> beta{};
};

struct Group2Params {
    double tau1 = 0.0;
    double tau2 = 0.0;
    double beta0 = 0.0;
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();  // (beta1 beta2 / beta3 beta4)
    int type = 1;

    double beta1() const { return m(0, 0); }
    double beta2() const { return m(0, 1); }
    double beta3() const { return m(1, 0); }
    double beta4() const { return m(1, 1); }
    bool tau_is_zero() const { return tau1 == 0.0 && tau2 == 0.0; }

    static Group2Params from_betas(double beta0, double b1, double b2, double b3, double b4, int type = 1,
                                   double tau1 = 0.0, double tau2 = 0.0);
};

/// Which Pauli operator carries each generalized Group 1 parameter for the
/// perp-set centered at a Group 1 point (one trivial factor).
struct Group1Frame {
    Point center;
    PauliLabel tau0;
    std::array<PauliLabel, 3> tau;
    std::array<PauliLabel, 3> beta;
};

/// Same for Group 2 centers (A,B): beta0 on AB, the block on
/// {A',A''} x {B',B''} (remaining letters in X,Y,Z order), tau1 on A(x)I
/// and tau2 on I(x)B.
struct Group2Frame {
    Point center;
    PauliLabel beta0;
    std::array<std::array<PauliLabel, 2>, 2> m;
    PauliLabel tau1;
    PauliLabel tau2;
};

Group1Frame group1_frame(Point center);
Group2Frame group2_frame(Point center);

/// Center of the Group 2 family a state belongs to: the perp-set center, or
/// for a grid Q1..Q9 the point c with Q_i n Q0 = H_c n Q0. Empty otherwise.
std::optional<Point> group2_center(const Hyperplane& h);

Group1Params extract_group1_params(const HyperplaneState& state);

/// Accepts Group 2 perp-sets and the grids Q1..Q9; for grids, the four
/// single-qubit coefficients must vanish. The type comes from group2_type().
Group2Params extract_group2_params(const HyperplaneState& state);

/// Canonical embeddings of generalized parameters into coefficients on the
/// perp-set of `center`. `p.type` is ignored; the family fixes it.
HyperplaneState embed_group1(Point center, const Group1Params& p);
HyperplaneState embed_group2(Point center, const Group2Params& p);

struct NamedStateParams {
    double p = 0.0;                             // werner
    std::map<std::string, double> coefficients;  // q0_state, q5_state, ovoid_o1_state
};

/// epr_phi_plus, werner, q0_state, q5_state, ovoid_o1_state.
HyperplaneState make_named_state(std::string_view name, const NamedStateParams& params = {});

}  // namespace xstate
