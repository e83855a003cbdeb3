#include "numrad/matrix.hpp"

#include <bit>
#include <cmath>
#include <cstdio>

#include "numrad/errors.hpp"
#include "numrad/kernels.hpp"

namespace numrad {
namespace {

void require_finite(std::span<const cplx> data) {
    for (const cplx& z : data) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw NonFiniteValue("matrix entry is not finite");
        }
    }
}

std::string shape_str(const CMat& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

CMat::CMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

CMat::CMat(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw ShapeMismatch("data length " + std::to_string(data_.size()) +
                            " does not match shape " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
    }
    require_finite(data_);
}

CMat CMat::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<cplx> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw ShapeMismatch("ragged row in from_rows");
        }
        data.insert(data.end(), row.begin(), row.end());
    }
    return CMat(r, c, std::move(data));
}

CMat CMat::identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMat CMat::diagonal(std::span<const cplx> d) {
    CMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    require_finite(m.data());
    return m;
}

CMat CMat::diagonal(std::span<const double> d) {
    CMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    require_finite(m.data());
    return m;
}

bool operator==(const CMat& a, const CMat& b) noexcept {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        return false;
    }
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
        if (a.data_[i] != b.data_[i]) {
            return false;
        }
    }
    return true;
}

void require_square(const CMat& a, const char* what) {
    if (!a.is_square()) {
        throw NotSquare(std::string(what) + ": expected a square matrix, got " + shape_str(a));
    }
}

void require_same_shape(const CMat& a, const CMat& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatch(std::string(what) + ": shapes " + shape_str(a) + " and " +
                            shape_str(b) + " differ");
    }
}

CMat adjoint(const CMat& a) {
    CMat out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

CMat re_part(const CMat& a) {
    require_square(a, "re_part");
    const std::size_t n = a.rows();
    CMat out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cplx s = a(i, j) + std::conj(a(j, i));
            out(i, j) = cplx(0.5 * s.real(), 0.5 * s.imag());
        }
    }
    return out;
}

CMat im_part(const CMat& a) {
    require_square(a, "im_part");
    const std::size_t n = a.rows();
    CMat out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // (a_ij - conj(a_ji)) / (2i) = -i/2 * d
            const cplx d = a(i, j) - std::conj(a(j, i));
            out(i, j) = cplx(0.5 * d.imag(), -0.5 * d.real());
        }
    }
    return out;
}

CMat rotate(const CMat& a, double theta) { return scale(a, cplx(std::cos(theta), std::sin(theta))); }

CMat rotated_re_part(const CMat& re, const CMat& im, double theta) {
    require_same_shape(re, im, "rotated_re_part");
    CMat out(re.rows(), re.cols());
    kernels::active().axpby(std::cos(theta), re.raw().data(), -std::sin(theta), im.raw().data(),
                            out.raw().data(), out.raw().size());
    return out;
}

CMat lincomb(cplx a, const CMat& x, cplx b, const CMat& y) {
    require_same_shape(x, y, "lincomb");
    CMat out(x.rows(), x.cols());
    kernels::active().caxpby(a, x.data().data(), b, y.data().data(), out.data().data(),
                             out.size());
    return out;
}

CMat add(const CMat& a, const CMat& b) {
    require_same_shape(a, b, "add");
    CMat out(a.rows(), a.cols());
    kernels::active().axpby(1.0, a.raw().data(), 1.0, b.raw().data(), out.raw().data(),
                            out.raw().size());
    return out;
}

CMat sub(const CMat& a, const CMat& b) {
    require_same_shape(a, b, "sub");
    CMat out(a.rows(), a.cols());
    kernels::active().axpby(1.0, a.raw().data(), -1.0, b.raw().data(), out.raw().data(),
                            out.raw().size());
    return out;
}

CMat scale(const CMat& a, cplx c) {
    CMat out(a.rows(), a.cols());
    kernels::active().cscal(c, a.data().data(), out.data().data(), out.size());
    return out;
}

CMat scale(const CMat& a, double c) {
    CMat out(a.rows(), a.cols());
    auto src = a.raw();
    auto dst = out.raw();
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] = c * src[i];
    }
    return out;
}

CMat matmul(const CMat& a, const CMat& b) {
    if (a.cols() != b.rows()) {
        throw ShapeMismatch("matmul: inner dimensions " + shape_str(a) + " * " + shape_str(b));
    }
    CMat out(a.rows(), b.cols());
    kernels::active().cgemm(a.data().data(), b.data().data(), out.data().data(), a.rows(),
                            a.cols(), b.cols());
    return out;
}

CMat operator+(const CMat& a, const CMat& b) { return add(a, b); }
CMat operator-(const CMat& a, const CMat& b) { return sub(a, b); }
CMat operator*(const CMat& a, const CMat& b) { return matmul(a, b); }
CMat operator*(cplx c, const CMat& a) { return scale(a, c); }
CMat operator*(double c, const CMat& a) { return scale(a, c); }

cplx trace(const CMat& a) {
    require_square(a, "trace");
    cplx t(0.0, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        t += a(i, i);
    }
    return t;
}

double frobenius_norm_sq(const CMat& a) {
    return kernels::active().sumsq(a.raw().data(), a.raw().size());
}

double frobenius_norm(const CMat& a) { return std::sqrt(frobenius_norm_sq(a)); }

double max_abs_diff(const CMat& a, const CMat& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

double hermitian_defect(const CMat& a) {
    require_square(a, "hermitian_defect");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += std::norm(a(i, j) - std::conj(a(j, i)));
        }
    }
    return std::sqrt(s);
}

bool is_exactly_hermitian(const CMat& a) noexcept {
    if (!a.is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a(i, i).imag() != 0.0) {
            return false;
        }
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            if (a(i, j) != std::conj(a(j, i))) {
                return false;
            }
        }
    }
    return true;
}

cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
    if (x.size() != y.size()) {
        throw ShapeMismatch("dotc: vector lengths differ");
    }
    return kernels::active().cdotc(x.data(), y.data(), x.size());
}

double vec_norm(std::span<const cplx> x) {
    return std::sqrt(kernels::active().sumsq(reinterpret_cast<const double*>(x.data()),
                                             2 * x.size()));
}

std::string digest(std::span<const CMat* const> mats) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    };
    for (const CMat* m : mats) {
        mix(m->rows());
        mix(m->cols());
        for (double d : m->raw()) {
            mix(std::bit_cast<std::uint64_t>(d));
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string digest(const CMat& a) {
    const CMat* p = &a;
    return digest(std::span<const CMat* const>(&p, 1));
}

}  // namespace numrad
