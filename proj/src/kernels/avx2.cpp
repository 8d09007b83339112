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

// AVX2 variants. Compiled with -mavx2 only (no FMA) and selected at runtime;
// each loop mirrors the operation order in formulas.hpp and finishes its tail
// with the scalar per-element code.

#include <immintrin.h>

#include "formulas.hpp"
#include "variants.hpp"

namespace xstate::kernels {
namespace {

struct Lanes {
    __m256d b0, b1, b2, b3, b4, t1, t2;
    __m256d is_type2;  // all-ones where t == 2
};

inline Lanes load(const Group2BatchView& b, std::size_t i) {
    Lanes l;
    l.b0 = _mm256_loadu_pd(&b.beta0[i]);
    l.b1 = _mm256_loadu_pd(&b.beta1[i]);
    l.b2 = _mm256_loadu_pd(&b.beta2[i]);
    l.b3 = _mm256_loadu_pd(&b.beta3[i]);
    l.b4 = _mm256_loadu_pd(&b.beta4[i]);
    l.t1 = _mm256_loadu_pd(&b.tau1[i]);
    l.t2 = _mm256_loadu_pd(&b.tau2[i]);
    const __m128i t = _mm_loadu_si128(reinterpret_cast<const __m128i*>(&b.type[i]));
    l.is_type2 = _mm256_cmp_pd(_mm256_cvtepi32_pd(t), _mm256_set1_pd(2.0), _CMP_EQ_OQ);
    return l;
}

inline __m256d sq(__m256d x) { return _mm256_mul_pd(x, x); }

inline void sort4(__m256d& a, __m256d& b, __m256d& c, __m256d& d) {
    __m256d lo = _mm256_min_pd(a, b), hi = _mm256_max_pd(a, b);
    a = lo;
    b = hi;
    lo = _mm256_min_pd(c, d);
    hi = _mm256_max_pd(c, d);
    c = lo;
    d = hi;
    lo = _mm256_min_pd(a, c);
    hi = _mm256_max_pd(a, c);
    a = lo;
    c = hi;
    lo = _mm256_min_pd(b, d);
    hi = _mm256_max_pd(b, d);
    b = lo;
    d = hi;
    lo = _mm256_min_pd(b, c);
    hi = _mm256_max_pd(b, c);
    b = lo;
    c = hi;
}

// Stores four lanes x four eigenvalues as four contiguous 4-vectors.
inline void store_transposed(double* dst, __m256d v0, __m256d v1, __m256d v2, __m256d v3) {
    const __m256d t0 = _mm256_unpacklo_pd(v0, v1);  // e0v0 e0v1 e2v0 e2v1
    const __m256d t1 = _mm256_unpackhi_pd(v0, v1);  // e1v0 e1v1 e3v0 e3v1
    const __m256d t2 = _mm256_unpacklo_pd(v2, v3);
    const __m256d t3 = _mm256_unpackhi_pd(v2, v3);
    _mm256_storeu_pd(dst + 0, _mm256_permute2f128_pd(t0, t2, 0x20));
    _mm256_storeu_pd(dst + 4, _mm256_permute2f128_pd(t1, t3, 0x20));
    _mm256_storeu_pd(dst + 8, _mm256_permute2f128_pd(t0, t2, 0x31));
    _mm256_storeu_pd(dst + 12, _mm256_permute2f128_pd(t1, t3, 0x31));
}

void avx2_group2_spectra(const Group2BatchView& b, std::span<double> rho, std::span<double> gamma) {
    const std::size_t n = b.size();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d quarter = _mm256_set1_pd(0.25);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const Lanes l = load(b, i);
        const __m256d dm = _mm256_sub_pd(l.b1, l.b4), sp = _mm256_add_pd(l.b2, l.b3);
        const __m256d dp = _mm256_add_pd(l.b1, l.b4), sm = _mm256_sub_pd(l.b2, l.b3);
        const __m256d lm2 = _mm256_add_pd(sq(dm), sq(sp));
        const __m256d lp2 = _mm256_add_pd(sq(dp), sq(sm));
        const __m256d ts2 = sq(_mm256_add_pd(l.t1, l.t2));
        const __m256d td2 = sq(_mm256_sub_pd(l.t1, l.t2));
        const __m256d rad_a = _mm256_sqrt_pd(_mm256_add_pd(lm2, ts2));
        const __m256d rad_b = _mm256_sqrt_pd(_mm256_add_pd(lp2, td2));
        const __m256d rad_c = _mm256_sqrt_pd(_mm256_add_pd(lp2, ts2));
        const __m256d rad_d = _mm256_sqrt_pd(_mm256_add_pd(lm2, td2));
        const __m256d up = _mm256_add_pd(one, l.b0), down = _mm256_sub_pd(one, l.b0);

        __m256d r0 = _mm256_mul_pd(_mm256_add_pd(up, rad_a), quarter);
        __m256d r1 = _mm256_mul_pd(_mm256_sub_pd(up, rad_a), quarter);
        __m256d r2 = _mm256_mul_pd(_mm256_add_pd(down, rad_b), quarter);
        __m256d r3 = _mm256_mul_pd(_mm256_sub_pd(down, rad_b), quarter);
        __m256d g0 = _mm256_mul_pd(_mm256_add_pd(up, rad_c), quarter);
        __m256d g1 = _mm256_mul_pd(_mm256_sub_pd(up, rad_c), quarter);
        __m256d g2 = _mm256_mul_pd(_mm256_add_pd(down, rad_d), quarter);
        __m256d g3 = _mm256_mul_pd(_mm256_sub_pd(down, rad_d), quarter);
        sort4(r0, r1, r2, r3);
        sort4(g0, g1, g2, g3);

        const __m256d m = l.is_type2;
        store_transposed(&rho[4 * i], _mm256_blendv_pd(r0, g0, m), _mm256_blendv_pd(r1, g1, m),
                         _mm256_blendv_pd(r2, g2, m), _mm256_blendv_pd(r3, g3, m));
        store_transposed(&gamma[4 * i], _mm256_blendv_pd(g0, r0, m), _mm256_blendv_pd(g1, r1, m),
                         _mm256_blendv_pd(g2, r2, m), _mm256_blendv_pd(g3, r3, m));
    }
    for (; i < n; ++i) {
        detail::group2_spectra_one(b.beta0[i], b.beta1[i], b.beta2[i], b.beta3[i], b.beta4[i], b.tau1[i], b.tau2[i],
                                   b.type[i], &rho[4 * i], &gamma[4 * i]);
    }
}

void avx2_bell_measure(const Group2BatchView& b, std::span<double> out) {
    const std::size_t n = b.size();
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d four = _mm256_set1_pd(4.0);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const Lanes l = load(b, i);
        const __m256d big_b = _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(sq(l.b1), sq(l.b2)), sq(l.b3)), sq(l.b4));
        const __m256d det = _mm256_sub_pd(_mm256_mul_pd(l.b1, l.b4), _mm256_mul_pd(l.b2, l.b3));
        const __m256d disc = _mm256_max_pd(_mm256_sub_pd(sq(big_b), _mm256_mul_pd(four, sq(det))), zero);
        const __m256d u = _mm256_sqrt_pd(disc);
        const __m256d m1 = _mm256_mul_pd(half, _mm256_sub_pd(big_b, u));
        const __m256d m2 = _mm256_mul_pd(half, _mm256_add_pd(big_b, u));
        const __m256d b0sq = sq(l.b0);
        const __m256d use_b = _mm256_cmp_pd(b0sq, m1, _CMP_LT_OQ);
        _mm256_storeu_pd(&out[i], _mm256_blendv_pd(_mm256_add_pd(b0sq, m2), big_b, use_b));
    }
    for (; i < n; ++i) {
        out[i] = detail::bell_measure_one(b.beta0[i], b.beta1[i], b.beta2[i], b.beta3[i], b.beta4[i]);
    }
}

inline __m256d norm2(__m256d x, __m256d y) { return _mm256_sqrt_pd(_mm256_add_pd(sq(x), sq(y))); }

void avx2_region_classify(const Group2BatchView& b, double tol, std::span<std::uint8_t> out) {
    const std::size_t n = b.size();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d minus_one = _mm256_set1_pd(-1.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d vtol = _mm256_set1_pd(tol);
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const Lanes l = load(b, i);
        const __m256d type_sign = _mm256_blendv_pd(minus_one, one, l.is_type2);
        const __m256d b0_sign = _mm256_blendv_pd(one, minus_one, _mm256_cmp_pd(l.b0, zero, _CMP_LT_OQ));
        const __m256d sign = _mm256_mul_pd(type_sign, b0_sign);
        const __m256d abs_b0 = _mm256_and_pd(l.b0, abs_mask);
        const __m256d r_tol = _mm256_add_pd(_mm256_sub_pd(one, abs_b0), vtol);
        const __m256d big_r_tol = _mm256_add_pd(_mm256_add_pd(one, abs_b0), vtol);
        const __m256d ex = l.b1;
        const __m256d ey = _mm256_xor_pd(l.b2, _mm256_set1_pd(-0.0));
        const __m256d px = _mm256_mul_pd(sign, ex), py = _mm256_mul_pd(sign, ey);
        const __m256d d_pc = norm2(_mm256_sub_pd(px, l.b4), _mm256_sub_pd(py, l.b3));
        const __m256d d_pn = norm2(_mm256_add_pd(px, l.b4), _mm256_add_pd(py, l.b3));
        const __m256d valid = _mm256_and_pd(_mm256_cmp_pd(d_pc, r_tol, _CMP_LE_OQ),
                                            _mm256_cmp_pd(d_pn, big_r_tol, _CMP_LE_OQ));
        const __m256d d_ec = norm2(_mm256_sub_pd(ex, l.b4), _mm256_sub_pd(ey, l.b3));
        const __m256d d_en = norm2(_mm256_add_pd(ex, l.b4), _mm256_add_pd(ey, l.b3));
        const __m256d separable = _mm256_and_pd(_mm256_cmp_pd(d_ec, r_tol, _CMP_LE_OQ),
                                                _mm256_cmp_pd(d_en, r_tol, _CMP_LE_OQ));
        const int valid_bits = _mm256_movemask_pd(valid);
        const int sep_bits = _mm256_movemask_pd(separable);
        for (int lane = 0; lane < 4; ++lane) {
            const bool v = (valid_bits >> lane) & 1;
            const bool s = (sep_bits >> lane) & 1;
            out[i + static_cast<std::size_t>(lane)] = !v ? kInvalid : (s ? kSeparable : kEntangled);
        }
    }
    for (; i < n; ++i) {
        out[i] = detail::region_one(b.beta0[i], b.beta1[i], b.beta2[i], b.beta3[i], b.beta4[i], b.type[i], tol);
    }
}

void avx2_hyperplane_scan(std::span<const std::array<std::uint8_t, 3>> lines, std::uint32_t first,
                          std::uint32_t last, std::vector<std::uint16_t>& out) {
    const __m256i lane_offsets = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i ones = _mm256_set1_epi32(1);
    std::uint32_t m = first;
    for (; m + 8 <= last; m += 8) {
        const __m256i masks = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(m)), lane_offsets);
        __m256i all_odd = ones;
        for (const auto& line : lines) {
            const __m256i a = _mm256_srlv_epi32(masks, _mm256_set1_epi32(line[0]));
            const __m256i b = _mm256_srlv_epi32(masks, _mm256_set1_epi32(line[1]));
            const __m256i c = _mm256_srlv_epi32(masks, _mm256_set1_epi32(line[2]));
            all_odd = _mm256_and_si256(all_odd, _mm256_xor_si256(_mm256_xor_si256(a, b), c));
        }
        const __m256i hit = _mm256_cmpeq_epi32(_mm256_and_si256(all_odd, ones), ones);
        int bits = _mm256_movemask_ps(_mm256_castsi256_ps(hit));
        while (bits != 0) {
            const int lane = __builtin_ctz(static_cast<unsigned>(bits));
            out.push_back(static_cast<std::uint16_t>(m + static_cast<std::uint32_t>(lane)));
            bits &= bits - 1;
        }
    }
    if (m < last) {
        kScalarKernels.hyperplane_scan(lines, m, last, out);
    }
}

}  // namespace

const KernelTable kAvx2Kernels{avx2_group2_spectra, avx2_bell_measure, avx2_region_classify, avx2_hyperplane_scan};

}  // namespace xstate::kernels
