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

// Per-element formulas shared by the scalar kernels and the single-state
// entry points. The AVX2 kernels evaluate the same expressions in the same
// operation order, so results agree bit for bit.

#include <cmath>
#include <cstdint>

#include "xstate/kernels/kernels.hpp"

namespace xstate::kernels::detail {

// MINPD/MAXPD semantics: second operand wins on ties and NaN.
inline double vmin(double a, double b) { return a < b ? a : b; }
inline double vmax(double a, double b) { return a > b ? a : b; }

inline void sort4(double& a, double& b, double& c, double& d) {
    double lo = vmin(a, b), hi = vmax(a, b);
    a = lo;
    b = hi;
    lo = vmin(c, d);
    hi = vmax(c, d);
    c = lo;
    d = hi;
    lo = vmin(a, c);
    hi = vmax(a, c);
    a = lo;
    c = hi;
    lo = vmin(b, d);
    hi = vmax(b, d);
    b = lo;
    d = hi;
    lo = vmin(b, c);
    hi = vmax(b, c);
    b = lo;
    c = hi;
}

inline void group2_spectra_one(double b0, double b1, double b2, double b3, double b4, double t1, double t2,
                               std::int32_t type, double* rho, double* gamma) {
    const double dm = b1 - b4, sp = b2 + b3;
    const double dp = b1 + b4, sm = b2 - b3;
    const double lm2 = dm * dm + sp * sp;  // (L-)^2
    const double lp2 = dp * dp + sm * sm;  // (L+)^2
    const double ts = t1 + t2, td = t1 - t2;
    const double ts2 = ts * ts, td2 = td * td;
    const double rad_a = std::sqrt(lm2 + ts2);
    const double rad_b = std::sqrt(lp2 + td2);
    const double rad_c = std::sqrt(lp2 + ts2);
    const double rad_d = std::sqrt(lm2 + td2);
    const double up = 1.0 + b0, down = 1.0 - b0;
    // Type I assignment; Type II swaps the state and its partial transpose.
    double r0 = (up + rad_a) * 0.25, r1 = (up - rad_a) * 0.25, r2 = (down + rad_b) * 0.25,
           r3 = (down - rad_b) * 0.25;
    double g0 = (up + rad_c) * 0.25, g1 = (up - rad_c) * 0.25, g2 = (down + rad_d) * 0.25,
           g3 = (down - rad_d) * 0.25;
    sort4(r0, r1, r2, r3);
    sort4(g0, g1, g2, g3);
    double* first = type == 2 ? gamma : rho;
    double* second = type == 2 ? rho : gamma;
    first[0] = r0;
    first[1] = r1;
    first[2] = r2;
    first[3] = r3;
    second[0] = g0;
    second[1] = g1;
    second[2] = g2;
    second[3] = g3;
}

inline double bell_measure_one(double b0, double b1, double b2, double b3, double b4) {
    const double big_b = b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4;
    const double det = b1 * b4 - b2 * b3;
    const double disc = vmax(big_b * big_b - 4.0 * (det * det), 0.0);
    const double u = std::sqrt(disc);
    const double m1 = 0.5 * (big_b - u);
    const double m2 = 0.5 * (big_b + u);
    const double b0sq = b0 * b0;
    return b0sq < m1 ? big_b : b0sq + m2;
}

inline std::uint8_t region_one(double b0, double b1, double b2, double b3, double b4, std::int32_t type,
                               double tol) {
    // sign factor (-1)^t sgn(beta0), with sgn(0) = +1
    const double sign = (type == 2 ? 1.0 : -1.0) * (b0 < 0.0 ? -1.0 : 1.0);
    const double abs_b0 = std::fabs(b0);
    const double r = 1.0 - abs_b0;
    const double big_r = 1.0 + abs_b0;
    const double ex = b1, ey = -b2;  // E
    const double px = sign * ex, py = sign * ey;
    const double pcx = px - b4, pcy = py - b3;
    const double pnx = px + b4, pny = py + b3;
    const double d_pc = std::sqrt(pcx * pcx + pcy * pcy);
    const double d_pn = std::sqrt(pnx * pnx + pny * pny);
    const bool valid = (d_pc <= r + tol) && (d_pn <= big_r + tol);
    const double ecx = ex - b4, ecy = ey - b3;
    const double enx = ex + b4, eny = ey + b3;
    const double d_ec = std::sqrt(ecx * ecx + ecy * ecy);
    const double d_en = std::sqrt(enx * enx + eny * eny);
    const bool separable = (d_ec <= r + tol) && (d_en <= r + tol);
    if (!valid) {
        return kInvalid;
    }
    return separable ? kSeparable : kEntangled;
}

}  // namespace xstate::kernels::detail
