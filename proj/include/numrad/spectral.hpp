#pragma once
//
// Hermitian eigensolver (cyclic complex Jacobi) and the spectral quantities
// built on it: operator norm, singular values, contraction square roots.
//

#include <vector>

#include "numrad/matrix.hpp"

namespace numrad {

// Relative Hermiticity tolerance applied before any Hermitian-only routine.
inline constexpr double kHermitianTol = 1e-10;

struct EigenResult {
    std::vector<double> eigenvalues;  // ascending
    CMat eigenvectors;                // column k pairs with eigenvalues[k]
    double residual = 0.0;            // max_k ‖A v_k − λ_k v_k‖
    int sweeps = 0;
};

// Full decomposition. Throws NonHermitianInput if
// ‖A − A*‖_F > tol · max(1, ‖A‖_F); accepted input is symmetrized first.
EigenResult hermitian_eigs(const CMat& a, double tol = kHermitianTol);

// Eigenvalues only (ascending), same acceptance rule.
std::vector<double> hermitian_eigvals(const CMat& a, double tol = kHermitianTol);
double lambda_max(const CMat& a, double tol = kHermitianTol);

// Largest singular value. Bitwise-Hermitian input takes max |λ|; anything
// else takes sqrt(λ_max(A*A)).
double spectral_norm(const CMat& a);
double spectral_norm_via_gram(const CMat& a);
double spectral_norm_hermitian(const CMat& a);

// Descending singular values from the eigenvalues of A*A, clamped at zero.
std::vector<double> singular_values(const CMat& a);

// (I − S²)^{1/2} for Hermitian S with ‖S‖ ≤ 1 + 1e−9; eigenvalues are
// clamped into [−1, 1] before the square root.
CMat hermitian_sqrt_defect(const CMat& s);

// U = S + i (I − S²)^{1/2}. Throws Error if U*U = I or Re U = S fails at 1e−10.
CMat cayley_unitary(const CMat& s);

}  // namespace numrad
