#pragma once
//
// One checkable predicate per inequality or identity. Each check evaluates
// its quantities on concrete matrices and returns an InequalityReport with a
// slack per relation. Hypotheses (norm flags, contraction, commutation) are
// verified first; a check whose hypotheses fail is `inapplicable`, never a
// pass.
//

#include <map>
#include <string>
#include <vector>

#include "numrad/matrix.hpp"
#include "numrad/norms.hpp"
#include "numrad/radius.hpp"

namespace numrad {

enum class CheckStatus { holds, violated, inapplicable };

std::string_view to_string(CheckStatus s) noexcept;

struct Relation {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;      // rhs − lhs
    double scale = 0.0;      // largest magnitude in the relation
    double tolerance = 0.0;  // tol · max(1, scale)
    bool holds = false;      // slack >= −tolerance
};

struct InequalityReport {
    std::string name;
    std::string paper_tag;
    std::string norm_id;  // empty for checks that fix the norm
    CheckStatus status = CheckStatus::inapplicable;
    // Binding relation: the one with the smallest slack / max(1, scale).
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;
    bool holds = false;
    std::vector<Relation> relations;
    std::map<std::string, double> terms;
    std::string input_digest;
    std::string note;  // reason when inapplicable; observations otherwise
};

struct CheckOptions {
    RadiusOptions radius{};
    OmegaOptions omega{};
    RadiusOptions slow_radius = kSlowRadiusOptions;
    OmegaOptions slow_omega = kSlowOmegaOptions;
    double tol = 1e-9;
};

// Relative distance from w_Ω = Ω/2 below which an input is noted.
inline constexpr double kNearEqualityNote = 1e-4;

enum class SpecialForm { normal, square_zero, self_adjoint };

InequalityReport check_basic_bounds(const CMat& t, const CheckOptions& o = {});
InequalityReport check_kittaneh(const CMat& t, const CheckOptions& o = {});
InequalityReport check_dragomir(const CMat& t, const CheckOptions& o = {});
InequalityReport check_inf_upper(const CMat& t, const NormSpec& n, const CheckOptions& o = {});
InequalityReport check_lower_bound(const CMat& t, const NormSpec& n, const CheckOptions& o = {});
InequalityReport check_product_chain(const CMat& t, const CMat& s, const NormSpec& n,
                                     const CheckOptions& o = {});
InequalityReport check_commutator(const CMat& t, const CMat& s, const NormSpec& n,
                                  const CheckOptions& o = {});
InequalityReport check_unitary_commutator(const CMat& t, const CMat& s, const NormSpec& n,
                                          const CheckOptions& o = {});
InequalityReport check_self_commutator(const CMat& t, const NormSpec& n, const CheckOptions& o = {});
InequalityReport check_product(const CMat& t, const CMat& s, const NormSpec& n,
                               const CheckOptions& o = {});
InequalityReport check_commuting_product(const CMat& t, const CMat& s, const NormSpec& n,
                                         const CheckOptions& o = {});
InequalityReport check_omega_upper(const CMat& t, const CheckOptions& o = {});
InequalityReport check_w_omega_chain(const CMat& t, const CheckOptions& o = {});
InequalityReport check_omega_equality_condition(const CMat& t, const CheckOptions& o = {});
InequalityReport check_special_forms(const CMat& t, SpecialForm kind, const CheckOptions& o = {});
InequalityReport check_c2_corollary(const CMat& t, const CMat& s, const CheckOptions& o = {});

// sup / inf over φ ∈ [0, 2π) sharing the radius optimizer.
struct SupOverPhi {
    double value = 0.0;
    double argmax_phi = 0.0;
    int grid = 0;
    double refine_tol = 0.0;
};
SupOverPhi sup_over_phi(const Objective1D& f, const RadiusOptions& opts);
SupOverPhi inf_over_phi(const Objective1D& f, const RadiusOptions& opts);

}  // namespace numrad
