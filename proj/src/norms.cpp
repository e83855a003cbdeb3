#include "numrad/norms.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "numrad/ensembles.hpp"
#include "numrad/errors.hpp"
#include "numrad/radius.hpp"
#include "numrad/rng.hpp"
#include "numrad/spectral.hpp"

namespace numrad {
namespace {

std::optional<double> unit_sup(std::size_t) { return 1.0; }

// Schatten p-norm from singular values; Hermitian input uses |eigenvalues|.
double schatten(const CMat& a, double p) {
    if (p == 2.0) {
        return frobenius_norm(a);
    }
    std::vector<double> sv;
    if (is_exactly_hermitian(a)) {
        sv = hermitian_eigvals(a);
        for (double& x : sv) {
            x = std::abs(x);
        }
    } else {
        sv = singular_values(a);
    }
    if (p == 1.0) {
        double s = 0.0;
        for (double x : sv) {
            s += x;
        }
        return s;
    }
    double top = 0.0;
    for (double x : sv) {
        top = std::max(top, x);
    }
    if (top == 0.0) {
        return 0.0;
    }
    double s = 0.0;
    for (double x : sv) {
        s += std::pow(x / top, p);
    }
    return top * std::pow(s, 1.0 / p);
}

std::string format_p(double p) {
    if (std::isinf(p)) {
        return "inf";
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, p);
    return std::string(buf, res.ptr);
}

double rel(double violation, double reference) {
    return violation / std::max(1.0, std::abs(reference));
}

}  // namespace

NormSpec operator_norm_spec() {
    return {"op", [](const CMat& a) { return spectral_norm(a); }, true, true, true, unit_sup};
}

NormSpec schatten_norm_spec(double p) {
    if (std::isnan(p) || p < 1.0) {
        throw InvalidArgument("Schatten index must satisfy p >= 1");
    }
    if (std::isinf(p)) {
        NormSpec op = operator_norm_spec();
        op.id = "schatten:inf";
        return op;
    }
    return {"schatten:" + format_p(p), [p](const CMat& a) { return schatten(a, p); }, true, true,
            true, [p](std::size_t n) -> std::optional<double> {
                return std::pow(static_cast<double>(n), 1.0 / p);
            }};
}

NormSpec numerical_radius_norm_spec() {
    return {"wnum", [](const CMat& a) { return numerical_radius(a).value; }, true, false, true,
            unit_sup};
}

OmegaOptions registry_omega_options() {
    OmegaOptions o;
    o.grid_s = 17;
    o.grid_psi = 32;
    return o;
}

NormSpec omega_norm_spec(const OmegaOptions& opts) {
    // Ω(U) = √2 for every unitary (normal, norm 1). Ω is not submultiplicative:
    // Ω(E12 E21) = √2 > Ω(E12) Ω(E21) = 1.
    return {"omega", [opts](const CMat& a) { return omega_norm(a, opts).value; }, true, false,
            true, [](std::size_t) -> std::optional<double> { return std::numbers::sqrt2; }};
}

NormSpec omega_norm_spec() { return omega_norm_spec(registry_omega_options()); }

NormSpec norm_from_id(std::string_view id) {
    if (id == "op") {
        return operator_norm_spec();
    }
    if (id == "wnum") {
        return numerical_radius_norm_spec();
    }
    if (id == "omega") {
        return omega_norm_spec();
    }
    constexpr std::string_view prefix = "schatten:";
    if (id.substr(0, prefix.size()) == prefix) {
        const std::string_view rest = id.substr(prefix.size());
        if (rest == "inf") {
            return schatten_norm_spec(std::numeric_limits<double>::infinity());
        }
        double p = 0.0;
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
        if (ec != std::errc() || ptr != rest.data() + rest.size()) {
            throw InvalidArgument("norm id '" + std::string(id) + "': bad Schatten index");
        }
        return schatten_norm_spec(p);
    }
    throw InvalidArgument("unknown norm id '" + std::string(id) + "'");
}

std::vector<NormSpec> default_registry() {
    return {operator_norm_spec(),
            schatten_norm_spec(1.0),
            schatten_norm_spec(2.0),
            schatten_norm_spec(std::numeric_limits<double>::infinity()),
            numerical_radius_norm_spec(),
            omega_norm_spec()};
}

NormAudit validate_norm(const NormSpec& spec, std::size_t dim, int trials, std::uint64_t seed) {
    if (dim == 0 || trials < 1) {
        throw InvalidArgument("validate_norm needs dim >= 1 and trials >= 1");
    }
    NormAudit audit;
    audit.id = spec.id;
    audit.dim = dim;
    audit.trials = trials;
    audit.zero = spec.evaluate(CMat::zeros(dim));

    auto note_algebra = [&](const CMat& a, const CMat& b, const char* how) {
        const CMat ab = matmul(a, b);
        const double lhs = spec.evaluate(ab);
        const double bound = spec.evaluate(a) * spec.evaluate(b);
        const double v = rel(lhs - bound, bound);
        if (v > audit.algebra) {
            audit.algebra = v;
            const CMat* mats[] = {&a, &b};
            audit.algebra_witness = NormAudit::Witness{how, digest(mats), lhs, bound};
        }
    };

    for (int k = 0; k < trials; ++k) {
        SplitMix64 rng(mix_seed(seed + static_cast<std::uint64_t>(k)));
        const CMat a = ginibre(rng, dim);
        const CMat b = ginibre(rng, dim);
        const CMat u = haar_unitary(rng, dim);
        const cplx c = 3.0 * rng.complex_gaussian();

        const double na = spec.evaluate(a);
        const double nb = spec.evaluate(b);
        const double nca = spec.evaluate(scale(a, c));
        audit.homogeneity = std::max(audit.homogeneity, rel(std::abs(nca - std::abs(c) * na), nca));

        const double nsum = spec.evaluate(add(a, b));
        audit.triangle = std::max(audit.triangle, rel(nsum - na - nb, na + nb));

        audit.self_adjoint =
            std::max(audit.self_adjoint, rel(std::abs(spec.evaluate(adjoint(a)) - na), na));

        const double nconj = spec.evaluate(matmul(matmul(adjoint(u), a), u));
        audit.unitary_invariance = std::max(audit.unitary_invariance, rel(std::abs(nconj - na), na));

        // Random pairs, adjoint pairs and square-zero pairs: the last two are
        // where the numerical radius is known to fail submultiplicativity.
        note_algebra(a, b, "ginibre pair");
        note_algebra(a, adjoint(a), "(A, A*) pair");
        if (dim >= 2) {
            const CMat nil = generate({EnsembleKind::square_zero, dim, rng(), 1.0}).first;
            note_algebra(nil, adjoint(nil), "square-zero (T, T*) pair");
        }
    }

    audit.unitary_sup = spec.unitary_sup ? spec.unitary_sup(dim) : std::nullopt;
    SplitMix64 urng(mix_seed(seed ^ 0x5555555555555555ull));
    for (int k = 0; k < 50; ++k) {
        audit.max_unitary_value = std::max(audit.max_unitary_value, spec.evaluate(haar_unitary(urng, dim)));
    }
    if (audit.unitary_sup) {
        audit.unitary_sup_excess = std::max(0.0, audit.max_unitary_value - *audit.unitary_sup);
        audit.unitary_sup_gap = std::max(0.0, *audit.unitary_sup - audit.max_unitary_value);
    }
    return audit;
}

bool audit_passes(const NormAudit& a, const NormFlags& flags, std::string* reason) {
    auto fail = [reason](const std::string& why) {
        if (reason != nullptr) {
            *reason = why;
        }
        return false;
    };
    if (a.zero != 0.0) {
        return fail("N(0) = " + std::to_string(a.zero));
    }
    if (a.homogeneity > NormAudit::kHomogeneityTol) {
        return fail("homogeneity violated by " + std::to_string(a.homogeneity));
    }
    if (a.triangle > NormAudit::kTriangleTol) {
        return fail("triangle inequality violated by " + std::to_string(a.triangle));
    }
    if (flags.self_adjoint && a.self_adjoint > NormAudit::kSelfAdjointTol) {
        return fail("declared self-adjoint, defect " + std::to_string(a.self_adjoint));
    }
    if (flags.algebra && a.algebra > NormAudit::kAlgebraTol) {
        std::string why = "declared algebra norm, submultiplicativity violated by " +
                          std::to_string(a.algebra);
        if (a.algebra_witness) {
            why += " (" + a.algebra_witness->pair + ", digest " + a.algebra_witness->digest + ")";
        }
        return fail(why);
    }
    if (flags.weakly_unitarily_invariant && a.unitary_invariance > NormAudit::kUnitaryInvarianceTol) {
        return fail("declared weakly unitarily invariant, defect " +
                    std::to_string(a.unitary_invariance));
    }
    if (a.unitary_sup && a.unitary_sup_excess > NormAudit::kUnitarySupTol) {
        return fail("unitary_sup exceeded by " + std::to_string(a.unitary_sup_excess));
    }
    if (a.unitary_sup && a.unitary_sup_gap > NormAudit::kUnitarySupGapTol) {
        return fail("unitary_sup not attained, gap " + std::to_string(a.unitary_sup_gap));
    }
    return true;
}

bool audit_passes(const NormAudit& audit, const NormSpec& spec, std::string* reason) {
    return audit_passes(audit, NormFlags{spec.self_adjoint, spec.algebra, spec.weakly_unitarily_invariant},
                        reason);
}

}  // namespace numrad
