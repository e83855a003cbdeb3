// AVX2 variants of the reference kernels in scalar.cpp. Compiled with a
// function-level target attribute so the rest of the build stays baseline
// x86-64; only called after a runtime CPU check.
#include "numrad/kernels.hpp"
#include "kernel_impl.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define NUMRAD_HAVE_AVX2 1
#include <immintrin.h>
#endif

namespace numrad::kernels {

#if NUMRAD_HAVE_AVX2
namespace {

#define NUMRAD_AVX2 __attribute__((target("avx2")))

// [ar*xr - ai*xi, ar*xi + ai*xr] for two packed complex values.
NUMRAD_AVX2 inline __m256d cmul_pd(__m256d ar, __m256d ai, __m256d x) {
    const __m256d swapped = _mm256_permute_pd(x, 0b0101);
    return _mm256_addsub_pd(_mm256_mul_pd(ar, x), _mm256_mul_pd(ai, swapped));
}

NUMRAD_AVX2 void axpby_avx2(double a, const double* x, double b, const double* y, double* out,
                            std::size_t len) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256d ax = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        const __m256d by = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(out + i, _mm256_add_pd(ax, by));
    }
    for (; i < len; ++i) {
        out[i] = a * x[i] + b * y[i];
    }
}

NUMRAD_AVX2 void caxpby_avx2(cplx a, const cplx* x, cplx b, const cplx* y, cplx* out,
                             std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
    const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
    const auto* xd = reinterpret_cast<const double*>(x);
    const auto* yd = reinterpret_cast<const double*>(y);
    auto* od = reinterpret_cast<double*>(out);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d ax = cmul_pd(ar, ai, _mm256_loadu_pd(xd + 2 * k));
        const __m256d by = cmul_pd(br, bi, _mm256_loadu_pd(yd + 2 * k));
        _mm256_storeu_pd(od + 2 * k, _mm256_add_pd(ax, by));
    }
    for (; k < n; ++k) {
        out[k] = detail::cmul(a, x[k]) + detail::cmul(b, y[k]);
    }
}

NUMRAD_AVX2 void cscal_avx2(cplx a, const cplx* x, cplx* out, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
    const auto* xd = reinterpret_cast<const double*>(x);
    auto* od = reinterpret_cast<double*>(out);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        _mm256_storeu_pd(od + 2 * k, cmul_pd(ar, ai, _mm256_loadu_pd(xd + 2 * k)));
    }
    for (; k < n; ++k) {
        out[k] = detail::cmul(a, x[k]);
    }
}

NUMRAD_AVX2 void cgemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
                            std::size_t n) {
    for (std::size_t i = 0; i < m * n; ++i) {
        c[i] = cplx(0.0, 0.0);
    }
    for (std::size_t i = 0; i < m; ++i) {
        cplx* crow = c + i * n;
        auto* cd = reinterpret_cast<double*>(crow);
        for (std::size_t l = 0; l < k; ++l) {
            const cplx aik = a[i * k + l];
            const __m256d ar = _mm256_set1_pd(aik.real()), ai = _mm256_set1_pd(aik.imag());
            const cplx* brow = b + l * n;
            const auto* bd = reinterpret_cast<const double*>(brow);
            std::size_t j = 0;
            for (; j + 2 <= n; j += 2) {
                const __m256d prod = cmul_pd(ar, ai, _mm256_loadu_pd(bd + 2 * j));
                _mm256_storeu_pd(cd + 2 * j, _mm256_add_pd(_mm256_loadu_pd(cd + 2 * j), prod));
            }
            for (; j < n; ++j) {
                crow[j] += detail::cmul(aik, brow[j]);
            }
        }
    }
}

NUMRAD_AVX2 double sumsq_avx2(const double* x, std::size_t len) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (; i < len; ++i) {
        lane[i & 3] += x[i] * x[i];
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

NUMRAD_AVX2 cplx cdotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
    __m256d p = _mm256_setzero_pd();
    __m256d q = _mm256_setzero_pd();
    const auto* xd = reinterpret_cast<const double*>(x);
    const auto* yd = reinterpret_cast<const double*>(y);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d vx = _mm256_loadu_pd(xd + 2 * k);
        const __m256d vy = _mm256_loadu_pd(yd + 2 * k);
        p = _mm256_add_pd(p, _mm256_mul_pd(vx, vy));
        q = _mm256_add_pd(q, _mm256_mul_pd(vx, _mm256_permute_pd(vy, 0b0101)));
    }
    alignas(32) double pl[4];
    alignas(32) double ql[4];
    _mm256_store_pd(pl, p);
    _mm256_store_pd(ql, q);
    for (; k < n; ++k) {
        const std::size_t o = (k & 1) * 2;
        pl[o] += x[k].real() * y[k].real();
        pl[o + 1] += x[k].imag() * y[k].imag();
        ql[o] += x[k].real() * y[k].imag();
        ql[o + 1] += x[k].imag() * y[k].real();
    }
    return {(pl[0] + pl[1]) + (pl[2] + pl[3]), (ql[0] - ql[1]) + (ql[2] - ql[3])};
}

#undef NUMRAD_AVX2

}  // namespace

const KernelTable* avx2_table() noexcept {
    static const KernelTable table{"avx2",     axpby_avx2, caxpby_avx2, cscal_avx2,
                                   cgemm_avx2, sumsq_avx2, cdotc_avx2};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &table : nullptr;
}

#else

// TODO: add a NEON table for aarch64 builds; they currently run the scalar path.
const KernelTable* avx2_table() noexcept { return nullptr; }

#endif

}  // namespace numrad::kernels
