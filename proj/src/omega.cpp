#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>
#include <vector>

#include "numrad/errors.hpp"
#include "numrad/kernels.hpp"
#include "numrad/radius.hpp"
#include "numrad/rng.hpp"
#include "numrad/spectral.hpp"

namespace numrad {
namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// g(s, ψ)² = λ_max(B*B) with B = cos(s) T + e^{iψ} sin(s) T*, expanded as
//   cos² T*T + sin² TT* + cos·sin (e^{iψ} T*² + e^{−iψ} T²)
// so each evaluation is O(n²) assembly plus one Hermitian eigenproblem.
class OmegaLandscape {
  public:
    explicit OmegaLandscape(const CMat& t)
        : gram_(matmul(adjoint(t), t)), cogram_(matmul(t, adjoint(t))),
          square_adj_(matmul(adjoint(t), adjoint(t))), work_(t.rows(), t.cols()),
          rotated_(t.rows(), t.cols()) {}

    double operator()(double s, double psi) {
        const double c = std::cos(s);
        const double sn = std::sin(s);
        const auto& k = kernels::active();
        k.cscal(cplx(std::cos(psi), std::sin(psi)), square_adj_.data().data(),
                rotated_.data().data(), rotated_.size());
        const CMat cross = re_part(rotated_);  // (W + W*)/2, bitwise Hermitian
        k.axpby(c * c, gram_.raw().data(), sn * sn, cogram_.raw().data(), work_.raw().data(),
                work_.raw().size());
        k.axpby(1.0, work_.raw().data(), 2.0 * c * sn, cross.raw().data(), work_.raw().data(),
                work_.raw().size());
        return std::sqrt(std::max(0.0, lambda_max(work_)));
    }

  private:
    CMat gram_;
    CMat cogram_;
    CMat square_adj_;
    CMat work_;
    CMat rotated_;
};

struct Cell {
    int i;
    int j;
    double value;
};

void validate(const OmegaOptions& o) {
    if (o.grid_s < 2 || o.grid_psi < 3) {
        throw InvalidArgument("omega grid needs grid_s >= 2 and grid_psi >= 3");
    }
    if (!(o.refine_tol > 0.0) || o.top_cells < 1 || o.max_rounds < 1) {
        throw InvalidArgument("omega refinement options must be positive");
    }
}

}  // namespace

double omega_objective(const CMat& t, double s, double psi) {
    return spectral_norm(lincomb(std::cos(s), t, std::polar(std::sin(s), psi), adjoint(t)));
}

OmegaResult omega_norm(const CMat& t, const OmegaOptions& opts) {
    require_square(t, "omega_norm");
    validate(opts);
    OmegaLandscape g(t);
    const int ns = opts.grid_s;
    const int np = opts.grid_psi;
    const double ds = kHalfPi / (ns - 1);
    const double dp = kTwoPi / np;

    std::vector<double> values(static_cast<std::size_t>(ns) * np);
    auto at = [&](int i, int j) -> double& { return values[static_cast<std::size_t>(i) * np + j]; };
    for (int i = 0; i < ns; ++i) {
        for (int j = 0; j < np; ++j) {
            at(i, j) = g(i * ds, j * dp);
        }
    }

    std::vector<Cell> peaks;
    for (int i = 0; i < ns; ++i) {
        for (int j = 0; j < np; ++j) {
            const double v = at(i, j);
            bool peak = true;
            for (int di = -1; di <= 1 && peak; ++di) {
                const int ii = i + di;
                if (ii < 0 || ii >= ns) {
                    continue;
                }
                for (int dj = -1; dj <= 1; ++dj) {
                    if ((di != 0 || dj != 0) && at(ii, (j + dj + np) % np) > v) {
                        peak = false;
                        break;
                    }
                }
            }
            if (peak) {
                peaks.push_back({i, j, v});
            }
        }
    }
    // Larger value first; ties go to smaller s, then smaller ψ.
    std::stable_sort(peaks.begin(), peaks.end(), [](const Cell& a, const Cell& b) {
        return std::tie(b.value, a.i, a.j) < std::tie(a.value, b.i, b.j);
    });
    if (static_cast<int>(peaks.size()) > opts.top_cells) {
        peaks.resize(opts.top_cells);
    }

    OmegaResult out;
    out.evaluations = static_cast<long>(ns) * np;
    double best_value = -1.0;
    for (const Cell& cell : peaks) {
        double s = cell.i * ds;
        double psi = cell.j * dp;
        double v = cell.value;
        double cell_size = std::max(ds, dp);
        for (int round = 0; round < opts.max_rounds; ++round) {
            const double lo = std::max(0.0, s - ds);
            const double hi = std::min(kHalfPi, s + ds);
            const GoldenResult gs =
                golden_max([&](double x) { return g(x, psi); }, lo, hi, opts.refine_tol, s, v);
            const GoldenResult gp = golden_max([&](double x) { return g(gs.x, x); }, psi - dp,
                                               psi + dp, opts.refine_tol, psi, gs.value);
            out.evaluations += gs.evaluations + gp.evaluations;
            const double move = std::max(std::abs(gs.x - s), std::abs(gp.x - psi));
            s = gs.x;
            psi = gp.x;
            v = gp.value;
            cell_size = std::max({move, gs.width, gp.width});
            if (move <= opts.refine_tol) {
                break;
            }
        }
        if (v > best_value) {
            best_value = v;
            out.s = s;
            out.psi = std::fmod(std::fmod(psi, kTwoPi) + kTwoPi, kTwoPi);
            out.achieved_cell = cell_size;
        }
    }
    out.value = omega_objective(t, out.s, out.psi);
    return out;
}

double omega_vector_lower_bound(const CMat& t, int samples, std::uint64_t seed) {
    require_square(t, "omega_vector_lower_bound");
    const std::size_t n = t.rows();
    const CMat ta = adjoint(t);
    SplitMix64 rng(seed);
    auto unit = [&rng, n]() {
        CMat v(n, 1);
        for (cplx& z : v.data()) {
            z = rng.complex_gaussian();
        }
        return scale(v, 1.0 / vec_norm(v.data()));
    };
    double best = 0.0;
    for (int k = 0; k < samples; ++k) {
        const CMat x = unit();
        const CMat y = unit();
        const cplx a = dotc(x.data(), matmul(t, y).data());   // <Ty, x>
        const cplx b = dotc(x.data(), matmul(ta, y).data());  // <T*y, x>
        best = std::max(best, std::sqrt(std::norm(a) + std::norm(b)));
    }
    return best;
}

}  // namespace numrad
