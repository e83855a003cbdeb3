#pragma once
//
// Dense inner-loop kernels behind the matrix layer.
//
// Every kernel exists as a scalar reference and, on x86-64, an AVX2 variant
// chosen at first use from the CPU feature bits. The AVX2 variants perform
// the same floating-point operations in the same order as the reference
// (no FMA contraction, reductions use the same 4-lane striping), so both
// paths are bitwise identical. tests/unit/test_kernels.cpp holds them to that.
//
// Complex data is passed as interleaved (re, im) doubles, the layout of
// std::complex<double>.
//

#include <complex>
#include <cstddef>
#include <string_view>

namespace numrad::kernels {

using cplx = std::complex<double>;

struct KernelTable {
    std::string_view name;

    // out[i] = a * x[i] + b * y[i] over `len` doubles.
    void (*axpby)(double a, const double* x, double b, const double* y, double* out,
                  std::size_t len);

    // out[k] = a * x[k] + b * y[k] over `n` complex values.
    void (*caxpby)(cplx a, const cplx* x, cplx b, const cplx* y, cplx* out, std::size_t n);

    // out[k] = a * x[k] over `n` complex values.
    void (*cscal)(cplx a, const cplx* x, cplx* out, std::size_t n);

    // Row-major c (m x n) = a (m x k) * b (k x n); c is overwritten.
    void (*cgemm)(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
                  std::size_t n);

    // Sum of x[i]^2 accumulated in four lanes striped by i mod 4 and combined
    // as (l0 + l1) + (l2 + l3).
    double (*sumsq)(const double* x, std::size_t len);

    // Sum of conj(x[k]) * y[k]; even/odd k accumulate separately, then added.
    cplx (*cdotc)(const cplx* x, const cplx* y, std::size_t n);
};

enum class Isa { scalar, avx2 };

const KernelTable& scalar_table() noexcept;

// nullptr when the variant is not compiled in or the CPU lacks the feature.
const KernelTable* avx2_table() noexcept;

// Table used by the library. Resolved once: AVX2 when available unless the
// environment variable NUMRAD_ISA is set to "scalar".
const KernelTable& active() noexcept;

// Overrides the active table (tests, benchmarks). Returns false if the
// requested ISA is unavailable on this machine.
bool select(Isa isa) noexcept;

}  // namespace numrad::kernels
