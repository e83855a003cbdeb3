#include "numrad/ensembles.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <vector>

#include "numrad/errors.hpp"
#include "numrad/spectral.hpp"

namespace numrad {
namespace {

using Column = std::vector<cplx>;

void subtract_projection(Column& v, const Column& q) {
    const cplx coef = dotc(q, v);
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] -= coef * q[k];
    }
}

void normalize(Column& v) {
    const double nv = vec_norm(v);
    for (cplx& z : v) {
        z /= nv;
    }
}

Column gaussian_vector(SplitMix64& rng, std::size_t n) {
    Column v(n);
    for (cplx& z : v) {
        z = rng.complex_gaussian();
    }
    return v;
}

std::vector<double> uniform_symmetric(SplitMix64& rng, std::size_t n) {
    std::vector<double> d(n);
    for (double& x : d) {
        x = 2.0 * rng.uniform() - 1.0;
    }
    return d;
}

// U diag(d) U*, symmetrized to be bitwise Hermitian.
CMat conjugate_diagonal(const CMat& u, const std::vector<double>& d) {
    return re_part(matmul(matmul(u, CMat::diagonal(std::span<const double>(d))), adjoint(u)));
}

std::pair<CMat, CMat> commuting_pair(SplitMix64& rng, std::size_t n, double scale) {
    const CMat u = haar_unitary(rng, n);
    auto d1 = uniform_symmetric(rng, n);
    auto d2 = uniform_symmetric(rng, n);
    for (std::size_t i = 0; i < n; ++i) {
        d1[i] *= scale;
        d2[i] *= scale;
    }
    return {conjugate_diagonal(u, d1), conjugate_diagonal(u, d2)};
}

}  // namespace

CMat ginibre(SplitMix64& rng, std::size_t n) {
    CMat g(n, n);
    for (cplx& z : g.data()) {
        z = rng.complex_gaussian();
    }
    return g;
}

CMat haar_unitary(SplitMix64& rng, std::size_t n) {
    const CMat g = ginibre(rng, n);
    std::vector<Column> q;
    q.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Column v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = g(i, j);
        }
        // Two Gram-Schmidt passes; R then has a positive real diagonal, which
        // is the phase convention that makes Q Haar distributed.
        for (int pass = 0; pass < 2; ++pass) {
            for (const Column& prev : q) {
                subtract_projection(v, prev);
            }
        }
        normalize(v);
        q.push_back(std::move(v));
    }
    CMat u(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            u(i, j) = q[j][i];
        }
    }
    return u;
}

bool is_pair_kind(EnsembleKind kind) noexcept {
    return kind == EnsembleKind::commuting_hermitian_pair ||
           kind == EnsembleKind::anticommuting_hermitian_pair;
}

Sample generate(const EnsembleSpec& spec) {
    const std::size_t n = spec.dim;
    if (n == 0) {
        throw InvalidArgument("ensemble dimension must be positive");
    }
    if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) {
        throw InvalidArgument("ensemble scale must be positive and finite");
    }
    SplitMix64 rng(spec.seed);
    switch (spec.kind) {
        case EnsembleKind::ginibre:
            return {scale(ginibre(rng, n), spec.scale), std::nullopt};
        case EnsembleKind::hermitian:
            return {scale(re_part(ginibre(rng, n)), spec.scale), std::nullopt};
        case EnsembleKind::haar_unitary:
            return {haar_unitary(rng, n), std::nullopt};
        case EnsembleKind::normal: {
            const CMat u = haar_unitary(rng, n);
            std::vector<cplx> d(n);
            for (cplx& z : d) {
                z = spec.scale * rng.complex_gaussian();
            }
            return {matmul(matmul(u, CMat::diagonal(std::span<const cplx>(d))), adjoint(u)),
                    std::nullopt};
        }
        case EnsembleKind::square_zero: {
            Column u = gaussian_vector(rng, n);
            Column v = gaussian_vector(rng, n);
            normalize(u);
            subtract_projection(v, u);
            subtract_projection(v, u);
            CMat t(n, n);
            if (n == 1) {
                return {t, std::nullopt};
            }
            normalize(v);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    t(i, j) = spec.scale * (u[i] * std::conj(v[j]));
                }
            }
            return {t, std::nullopt};
        }
        case EnsembleKind::hermitian_contraction: {
            const CMat h = re_part(ginibre(rng, n));
            const double factor = rng.uniform_pos();
            const double norm = spectral_norm(h);
            CMat s = scale(h, factor / (norm * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())));
            return {s, std::nullopt};
        }
        case EnsembleKind::commuting_hermitian_pair: {
            auto [t, s] = commuting_pair(rng, n, spec.scale);
            return {std::move(t), std::move(s)};
        }
        case EnsembleKind::anticommuting_hermitian_pair: {
            if (n % 2 != 0) {
                throw InvalidArgument("anticommuting pair requires an even dimension, got " +
                                      std::to_string(n));
            }
            const std::size_t m = n / 2;
            auto [a, b] = commuting_pair(rng, m, spec.scale);
            // T = σ_x ⊗ A, S = σ_z ⊗ B
            CMat t(n, n);
            CMat s(n, n);
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    t(i, m + j) = a(i, j);
                    t(m + i, j) = a(i, j);
                    s(i, j) = b(i, j);
                    s(m + i, m + j) = -b(i, j);
                }
            }
            return {std::move(t), std::move(s)};
        }
    }
    throw InvalidArgument("unknown ensemble kind");
}

std::string_view kind_prefix(EnsembleKind kind) noexcept {
    switch (kind) {
        case EnsembleKind::ginibre: return "ginibre";
        case EnsembleKind::hermitian: return "hermitian";
        case EnsembleKind::normal: return "normal";
        case EnsembleKind::haar_unitary: return "unitary";
        case EnsembleKind::square_zero: return "nil";
        case EnsembleKind::hermitian_contraction: return "contraction";
        case EnsembleKind::commuting_hermitian_pair: return "commute";
        case EnsembleKind::anticommuting_hermitian_pair: return "anticommute";
    }
    return "?";
}

std::string ensemble_id(EnsembleKind kind, std::size_t dim) {
    return std::string(kind_prefix(kind)) + ":" + std::to_string(dim);
}

EnsembleId parse_ensemble_id(std::string_view id) {
    const auto colon = id.find(':');
    if (colon == std::string_view::npos) {
        throw InvalidArgument("ensemble id '" + std::string(id) + "' must look like kind:n");
    }
    const std::string_view prefix = id.substr(0, colon);
    const std::string_view dim_text = id.substr(colon + 1);
    std::size_t dim = 0;
    const auto [ptr, ec] = std::from_chars(dim_text.data(), dim_text.data() + dim_text.size(), dim);
    if (ec != std::errc() || ptr != dim_text.data() + dim_text.size() || dim == 0 || dim > 64) {
        throw InvalidArgument("ensemble id '" + std::string(id) + "': dimension must be in 1..64");
    }
    for (auto kind : {EnsembleKind::ginibre, EnsembleKind::hermitian, EnsembleKind::normal,
                      EnsembleKind::haar_unitary, EnsembleKind::square_zero,
                      EnsembleKind::hermitian_contraction, EnsembleKind::commuting_hermitian_pair,
                      EnsembleKind::anticommuting_hermitian_pair}) {
        if (kind_prefix(kind) == prefix) {
            if (kind == EnsembleKind::anticommuting_hermitian_pair && dim % 2 != 0) {
                throw InvalidArgument("ensemble id '" + std::string(id) +
                                      "': anticommuting pairs need an even dimension");
            }
            return {kind, dim};
        }
    }
    throw InvalidArgument("unknown ensemble kind '" + std::string(prefix) + "'");
}

}  // namespace numrad
