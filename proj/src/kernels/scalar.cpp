#include "numrad/kernels.hpp"
#include "kernel_impl.hpp"

namespace numrad::kernels {
namespace {

void axpby_scalar(double a, const double* x, double b, const double* y, double* out,
                  std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = a * x[i] + b * y[i];
    }
}

void caxpby_scalar(cplx a, const cplx* x, cplx b, const cplx* y, cplx* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = detail::cmul(a, x[k]) + detail::cmul(b, y[k]);
    }
}

void cscal_scalar(cplx a, const cplx* x, cplx* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = detail::cmul(a, x[k]);
    }
}

void cgemm_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
                  std::size_t n) {
    for (std::size_t i = 0; i < m * n; ++i) {
        c[i] = cplx(0.0, 0.0);
    }
    for (std::size_t i = 0; i < m; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const cplx aik = a[i * k + l];
            const cplx* brow = b + l * n;
            for (std::size_t j = 0; j < n; ++j) {
                crow[j] += detail::cmul(aik, brow[j]);
            }
        }
    }
}

double sumsq_scalar(const double* x, std::size_t len) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < len; ++i) {
        lane[i & 3] += x[i] * x[i];
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

cplx cdotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
    // p: products re*re / im*im, q: cross products; index 0,1 even k, 2,3 odd k
    double p[4] = {0.0, 0.0, 0.0, 0.0};
    double q[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t o = (k & 1) * 2;
        const double xr = x[k].real(), xi = x[k].imag();
        const double yr = y[k].real(), yi = y[k].imag();
        p[o] += xr * yr;
        p[o + 1] += xi * yi;
        q[o] += xr * yi;
        q[o + 1] += xi * yr;
    }
    return {(p[0] + p[1]) + (p[2] + p[3]), (q[0] - q[1]) + (q[2] - q[3])};
}

}  // namespace

const KernelTable& scalar_table() noexcept {
    static const KernelTable table{"scalar",     axpby_scalar, caxpby_scalar, cscal_scalar,
                                   cgemm_scalar, sumsq_scalar, cdotc_scalar};
    return table;
}

}  // namespace numrad::kernels
