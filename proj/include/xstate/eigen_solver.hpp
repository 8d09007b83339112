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

// Cyclic Jacobi eigenvalue routine for the small matrices used here: 4x4
// Hermitian matrices (through their 8x8 real symmetric embedding) and 3x3
// real symmetric matrices.

#include <array>

#include <Eigen/Dense>

namespace xstate {

/// Ascending eigenvalues of a 4x4 Hermitian matrix. Throws
/// std::invalid_argument when h differs from its adjoint by more than 1e-12.
std::array<double, 4> eig_hermitian4(const Eigen::Matrix4cd& h);

/// Ascending eigenvalues of a real symmetric 3x3 matrix (upper triangle read).
std::array<double, 3> eig_symmetric3(const Eigen::Matrix3d& s);

/// Ascending eigenvalues of a real symmetric n x n matrix, n <= 8.
Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a);

}  // namespace xstate
