#pragma once
//
// Plug-in matrix norms N(·) with the structural flags that inequality checks
// rely on. Flags are declarations; validate_norm audits them.
//

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numrad/matrix.hpp"

namespace numrad {

struct OmegaOptions;

struct NormSpec {
    std::string id;
    std::function<double(const CMat&)> evaluate;
    bool self_adjoint = false;                // N(A*) = N(A)
    bool algebra = false;                     // N(AB) <= N(A) N(B)
    bool weakly_unitarily_invariant = false;  // N(U*AU) = N(A)
    // sup over n x n unitaries of N(U); nullopt when no closed form is known.
    std::function<std::optional<double>(std::size_t)> unitary_sup;
};

NormSpec operator_norm_spec();
NormSpec schatten_norm_spec(double p);  // p >= 1, p = +inf is the operator norm
NormSpec numerical_radius_norm_spec();
NormSpec omega_norm_spec();
NormSpec omega_norm_spec(const OmegaOptions& opts);

// Grid used by the registry's Ω entry. Every w_Ω evaluation feeds Ω a
// Hermitian matrix, where the landscape has one basin, so a coarser grid
// than the standalone default suffices.
OmegaOptions registry_omega_options();

// "op", "schatten:p" (p decimal or "inf"), "wnum", "omega".
// Throws InvalidArgument on anything else.
NormSpec norm_from_id(std::string_view id);

// op, schatten:1, schatten:2, schatten:inf, wnum, omega.
std::vector<NormSpec> default_registry();

// Worst observed violation per axiom and flag (0 means none found).
// Relative violations are normalized by max(1, |reference value|).
struct NormAudit {
    std::string id;
    std::size_t dim = 0;
    int trials = 0;
    double zero = 0.0;               // N(0)
    double homogeneity = 0.0;        // |N(cA) − |c|N(A)| rel
    double triangle = 0.0;           // N(A+B) − N(A) − N(B) rel
    double self_adjoint = 0.0;       // |N(A*) − N(A)| rel
    double algebra = 0.0;            // N(AB) − N(A)N(B) rel
    double unitary_invariance = 0.0; // |N(U*AU) − N(A)| rel
    double unitary_sup_excess = 0.0; // max_U N(U) − unitary_sup(n)
    double unitary_sup_gap = 0.0;    // unitary_sup(n) − max_U N(U)
    double max_unitary_value = 0.0;
    std::optional<double> unitary_sup;
    // Largest submultiplicativity violation found, if any.
    struct Witness {
        std::string pair;  // how the pair was built
        std::string digest;
        double product_norm = 0.0;
        double bound = 0.0;
    };
    std::optional<Witness> algebra_witness;

    // Tolerances the declared flags are audited against.
    static constexpr double kHomogeneityTol = 1e-12;
    static constexpr double kTriangleTol = 1e-10;
    static constexpr double kSelfAdjointTol = 1e-12;
    static constexpr double kAlgebraTol = 1e-10;
    static constexpr double kUnitaryInvarianceTol = 1e-10;
    static constexpr double kUnitarySupTol = 1e-9;
    static constexpr double kUnitarySupGapTol = 1e-6;
};

struct NormFlags {
    bool self_adjoint;
    bool algebra;
    bool weakly_unitarily_invariant;
};

// Runs the battery on seeded random matrices of dimension `dim`.
NormAudit validate_norm(const NormSpec& spec, std::size_t dim, int trials, std::uint64_t seed);

// True when every declared flag of `flags` audits clean in `audit`.
bool audit_passes(const NormAudit& audit, const NormFlags& flags, std::string* reason = nullptr);
bool audit_passes(const NormAudit& audit, const NormSpec& spec, std::string* reason = nullptr);

}  // namespace numrad
