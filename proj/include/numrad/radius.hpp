#pragma once
//
// Optimizers for the numerical radius w(T), the generalized radius
// w_N(T) = sup_θ N(Re(e^{iθ}T)), the Ω norm and its radius, and the
// Hilbert–Schmidt radius identity.
//

#include <cstdint>

#include "numrad/matrix.hpp"
#include "numrad/norms.hpp"
#include "numrad/optimize.hpp"

namespace numrad {

using RadiusOptions = GridOptions;

struct RadiusResult {
    double value = 0.0;
    double argmax_theta = 0.0;  // [0, 2π)
    double achieved_interval = 0.0;
    long evaluations = 0;
};

// sup over θ ∈ [0, 2π) of N(Re(e^{iθ}T)). The full circle is searched since
// a user norm need not satisfy N(−A) = N(A).
RadiusResult generalized_radius(const CMat& t, const NormSpec& norm, const RadiusOptions& opts = {});

// w(T) = sup_θ λ_max(Re(e^{iθ}T)); θ → θ + π negates the Hermitian part, so
// the top eigenvalue alone reaches the operator norm.
RadiusResult numerical_radius(const CMat& t, const RadiusOptions& opts = {});

// Dense θ-grid maximum of λ_max(Re(e^{iθ}T)), no refinement. Test oracle.
double numerical_radius_oracle(const CMat& t, int grid = 200000);

// sup over (α, β) = (cos t, sin t) of N(α Re T + β Im T).
double alphabeta_radius(const CMat& t, const NormSpec& norm, const RadiusOptions& opts = {});

// w_Ω(T) = √2 w(T).
double omega_radius(const CMat& t, const RadiusOptions& opts = {});

// (1/2)‖T‖_F² + (1/2)|tr T²|, which equals w_2(T)², the square of the
// Frobenius-norm radius.
double hs_radius_sq(const CMat& t);

struct OmegaOptions {
    int grid_s = 96;     // points on [0, π/2], endpoints included
    int grid_psi = 192;  // points on [0, 2π)
    double refine_tol = 1e-9;
    int top_cells = 5;
    int max_rounds = 100;
};

// Options for the w_Ω slow path. Each θ evaluation is a full Ω search on a
// Hermitian matrix, whose Ω landscape has a single basin.
inline constexpr RadiusOptions kSlowRadiusOptions{180, 1e-10, 3};
inline constexpr OmegaOptions kSlowOmegaOptions{5, 8, 1e-9, 1, 100};

// w_Ω through generalized_radius with the Ω norm; the independent slow path.
RadiusResult omega_radius_slow(const CMat& t, const RadiusOptions& opts = kSlowRadiusOptions,
                               const OmegaOptions& omega = kSlowOmegaOptions);

struct OmegaResult {
    double value = 0.0;
    double s = 0.0;    // ζ = cos s, |η| = sin s
    double psi = 0.0;  // η = e^{iψ} sin s
    double achieved_cell = 0.0;
    long evaluations = 0;
};

// Ω(T) = sup{‖ζT + ηT*‖ : |ζ|² + |η|² ≤ 1}, searched on the sphere with ζ
// real non-negative: g(s, ψ) = ‖cos(s) T + e^{iψ} sin(s) T*‖.
OmegaResult omega_norm(const CMat& t, const OmegaOptions& opts = {});

// ‖cos(s) T + e^{iψ} sin(s) T*‖ evaluated directly.
double omega_objective(const CMat& t, double s, double psi);

// Max over `samples` random unit pairs (x, y) of sqrt(|<Ty,x>|² + |<T*y,x>|²).
double omega_vector_lower_bound(const CMat& t, int samples, std::uint64_t seed);

}  // namespace numrad
