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

#include "xstate/eigen_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xstate {

Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || n > 8) {
        throw std::invalid_argument("jacobi_eigenvalues: square matrix of size <= 8 expected");
    }
    a = 0.5 * (a + a.transpose()).eval();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        }
        if (off < 1e-300) break;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Rutishauser's rotation: t = tan of the angle that zeroes a(p,q).
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
            }
        }
    }
    Eigen::VectorXd d = a.diagonal();
    std::sort(d.data(), d.data() + n);
    return d;
}

std::array<double, 4> eig_hermitian4(const Eigen::Matrix4cd& h) {
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("eig_hermitian4: matrix is not Hermitian");
    }
    // [[Re, -Im], [Im, Re]] has every eigenvalue of h twice.
    Eigen::MatrixXd big(8, 8);
    big.topLeftCorner(4, 4) = h.real();
    big.bottomRightCorner(4, 4) = h.real();
    big.topRightCorner(4, 4) = -h.imag();
    big.bottomLeftCorner(4, 4) = h.imag();
    const Eigen::VectorXd d = jacobi_eigenvalues(big);
    return {0.5 * (d(0) + d(1)), 0.5 * (d(2) + d(3)), 0.5 * (d(4) + d(5)), 0.5 * (d(6) + d(7))};
}

std::array<double, 3> eig_symmetric3(const Eigen::Matrix3d& s) {
    Eigen::Matrix3d sym = s.triangularView<Eigen::Upper>();
    sym.triangularView<Eigen::StrictlyLower>() = sym.transpose();
    const Eigen::VectorXd d = jacobi_eigenvalues(sym);
    return {d(0), d(1), d(2)};
}

}  // namespace xstate
