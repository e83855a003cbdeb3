#pragma once

#include <complex>

namespace numrad::kernels::detail {

// Plain product without the C99 Annex G NaN recovery; inputs are finite.
inline std::complex<double> cmul(std::complex<double> a, std::complex<double> b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace numrad::kernels::detail
