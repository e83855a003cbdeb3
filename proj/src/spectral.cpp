#include "numrad/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "numrad/errors.hpp"

namespace numrad {
namespace {

constexpr double kOffDiagonalThreshold = 1e-13;
constexpr int kMaxSweeps = 60;

// Accepts A within tolerance and returns the bitwise-Hermitian (A + A*)/2.
CMat accept_hermitian(const CMat& a, double tol) {
    require_square(a, "hermitian eigensolver");
    if (is_exactly_hermitian(a)) {
        return a;
    }
    const double defect = hermitian_defect(a);
    if (defect > tol * std::max(1.0, frobenius_norm(a))) {
        throw NonHermitianInput("matrix is not Hermitian: ‖A − A*‖_F = " + std::to_string(defect));
    }
    return re_part(a);
}

// In-place cyclic Jacobi on a Hermitian n x n array. When v is non-null it
// accumulates the rotations (v starts as the identity). Returns sweeps used.
int jacobi(std::vector<cplx>& a, std::size_t n, std::vector<cplx>* v) {
    double total = 0.0;
    for (const cplx& z : a) {
        total += std::norm(z);
    }
    const double threshold = kOffDiagonalThreshold * std::sqrt(total);
    auto at = [&a, n](std::size_t i, std::size_t j) -> cplx& { return a[i * n + j]; };

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += std::norm(at(p, q));
            }
        }
        if (std::sqrt(2.0 * off) <= threshold) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = at(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                const cplx phase = apq / mag;
                const cplx phase_c = std::conj(phase);
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- A J with J = diag(1, e^{-iφ}) R(c, s) on (p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = at(k, p);
                    const cplx akq = phase_c * at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                // A <- J* A
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = at(p, k);
                    const cplx aqk = phase * at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, p) = app - t * mag;
                at(q, q) = aqq + t * mag;
                at(p, q) = 0.0;
                at(q, p) = 0.0;

                if (v != nullptr) {
                    auto& vm = *v;
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vkp = vm[k * n + p];
                        const cplx vkq = phase_c * vm[k * n + q];
                        vm[k * n + p] = c * vkp - s * vkq;
                        vm[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    return sweep;
}

}  // namespace

EigenResult hermitian_eigs(const CMat& a, double tol) {
    const CMat h = accept_hermitian(a, tol);
    const std::size_t n = h.rows();
    std::vector<cplx> work(h.data().begin(), h.data().end());
    CMat eye = CMat::identity(n);
    std::vector<cplx> v(eye.data().begin(), eye.data().end());
    EigenResult out;
    out.sweeps = jacobi(work, n, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return work[i * n + i].real() < work[j * n + j].real();
    });
    out.eigenvalues.resize(n);
    out.eigenvectors = CMat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = work[order[k] * n + order[k]].real();
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, k) = v[i * n + order[k]];
        }
    }

    const CMat av = matmul(h, out.eigenvectors);
    for (std::size_t k = 0; k < n; ++k) {
        double r = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            r += std::norm(av(i, k) - out.eigenvalues[k] * out.eigenvectors(i, k));
        }
        out.residual = std::max(out.residual, std::sqrt(r));
    }
    return out;
}

std::vector<double> hermitian_eigvals(const CMat& a, double tol) {
    const CMat h = accept_hermitian(a, tol);
    const std::size_t n = h.rows();
    std::vector<cplx> work(h.data().begin(), h.data().end());
    jacobi(work, n, nullptr);
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev[i] = work[i * n + i].real();
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

double lambda_max(const CMat& a, double tol) {
    const auto ev = hermitian_eigvals(a, tol);
    return ev.empty() ? 0.0 : ev.back();
}

double spectral_norm_hermitian(const CMat& a) {
    const auto ev = hermitian_eigvals(a);
    if (ev.empty()) {
        return 0.0;
    }
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

double spectral_norm_via_gram(const CMat& a) {
    if (a.empty()) {
        return 0.0;
    }
    const double top = lambda_max(matmul(adjoint(a), a));
    return std::sqrt(std::max(0.0, top));
}

double spectral_norm(const CMat& a) {
    if (is_exactly_hermitian(a)) {
        return spectral_norm_hermitian(a);
    }
    return spectral_norm_via_gram(a);
}

std::vector<double> singular_values(const CMat& a) {
    auto ev = hermitian_eigvals(matmul(adjoint(a), a));
    std::vector<double> sv(ev.size());
    for (std::size_t i = 0; i < ev.size(); ++i) {
        sv[i] = std::sqrt(std::max(0.0, ev[ev.size() - 1 - i]));
    }
    return sv;
}

CMat hermitian_sqrt_defect(const CMat& s) {
    const EigenResult e = hermitian_eigs(s);
    const std::size_t n = s.rows();
    for (double lam : e.eigenvalues) {
        if (std::abs(lam) > 1.0 + 1e-9) {
            throw NotAContraction("spectral norm " + std::to_string(std::abs(lam)) + " exceeds 1");
        }
    }
    CMat out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = std::clamp(e.eigenvalues[k], -1.0, 1.0);
        const double root = std::sqrt(std::max(0.0, 1.0 - lam * lam));
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vik = root * e.eigenvectors(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += vik * std::conj(e.eigenvectors(j, k));
            }
        }
    }
    return re_part(out);
}

CMat cayley_unitary(const CMat& s) {
    const CMat root = hermitian_sqrt_defect(s);
    const CMat herm = re_part(s);
    const CMat u = lincomb(1.0, herm, cplx(0.0, 1.0), root);
    const std::size_t n = s.rows();
    const double unit_defect = max_abs_diff(matmul(adjoint(u), u), CMat::identity(n));
    const double re_defect = max_abs_diff(re_part(u), herm);
    if (unit_defect > 1e-10 || re_defect > 1e-10) {
        throw Error("cayley_unitary: postcondition failed (U*U defect " +
                    std::to_string(unit_defect) + ", Re U defect " + std::to_string(re_defect) +
                    ")");
    }
    return u;
}

}  // namespace numrad
