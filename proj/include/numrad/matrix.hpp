#pragma once
//
// Dense complex matrices, row-major. CMat stands in for a bounded operator
// on a finite-dimensional Hilbert space; all values are finite.
//

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace numrad {

using cplx = std::complex<double>;

class CMat {
  public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols);  // zero-filled

    // Throws ShapeMismatch if data.size() != rows * cols, NonFiniteValue on NaN/Inf.
    CMat(std::size_t rows, std::size_t cols, std::vector<cplx> data);

    // Nested rows, e.g. CMat::from_rows({{1, 1}, {0, 0}}).
    static CMat from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
    static CMat identity(std::size_t n);
    static CMat zeros(std::size_t n) { return CMat(n, n); }
    static CMat diagonal(std::span<const cplx> d);
    static CMat diagonal(std::span<const double> d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * cols_ + j];
    }

    std::span<cplx> data() noexcept { return data_; }
    std::span<const cplx> data() const noexcept { return data_; }

    // Interleaved (re, im) view used by the real-coefficient kernels.
    std::span<double> raw() noexcept {
        return {reinterpret_cast<double*>(data_.data()), 2 * data_.size()};
    }
    std::span<const double> raw() const noexcept {
        return {reinterpret_cast<const double*>(data_.data()), 2 * data_.size()};
    }

    // Bitwise component equality.
    friend bool operator==(const CMat& a, const CMat& b) noexcept;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

void require_square(const CMat& a, const char* what);
void require_same_shape(const CMat& a, const CMat& b, const char* what);

CMat adjoint(const CMat& a);
CMat re_part(const CMat& a);  // (A + A*)/2
CMat im_part(const CMat& a);  // (A - A*)/(2i)
CMat rotate(const CMat& a, double theta);  // e^{i theta} A

// cos(theta) * re + (-sin(theta)) * im; equals re_part(rotate(T, theta)) when
// re = re_part(T) and im = im_part(T). Exactly Hermitian for Hermitian inputs.
CMat rotated_re_part(const CMat& re, const CMat& im, double theta);

CMat add(const CMat& a, const CMat& b);
CMat sub(const CMat& a, const CMat& b);
CMat scale(const CMat& a, cplx c);
CMat scale(const CMat& a, double c);
CMat lincomb(cplx a, const CMat& x, cplx b, const CMat& y);  // a X + b Y
CMat matmul(const CMat& a, const CMat& b);

CMat operator+(const CMat& a, const CMat& b);
CMat operator-(const CMat& a, const CMat& b);
CMat operator*(const CMat& a, const CMat& b);
CMat operator*(cplx c, const CMat& a);
CMat operator*(double c, const CMat& a);

cplx trace(const CMat& a);
double frobenius_norm(const CMat& a);
double frobenius_norm_sq(const CMat& a);
double max_abs_diff(const CMat& a, const CMat& b);

// ‖A − A*‖_F, zero exactly iff A is bitwise Hermitian.
double hermitian_defect(const CMat& a);
bool is_exactly_hermitian(const CMat& a) noexcept;

// sum_k conj(x_k) y_k, i.e. the inner product <y, x> linear in y.
cplx dotc(std::span<const cplx> x, std::span<const cplx> y);
double vec_norm(std::span<const cplx> x);

// Stable 64-bit FNV-1a digest of shape and component bit patterns, hex.
std::string digest(std::span<const CMat* const> mats);
std::string digest(const CMat& a);

}  // namespace numrad
