#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "numrad/matrix.hpp"
#include "numrad/rng.hpp"

namespace numrad {

enum class EnsembleKind {
    ginibre,
    hermitian,
    normal,
    haar_unitary,
    square_zero,
    hermitian_contraction,
    commuting_hermitian_pair,
    anticommuting_hermitian_pair,
};

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::ginibre;
    std::size_t dim = 2;
    std::uint64_t seed = 0;
    double scale = 1.0;  // ignored by haar_unitary and hermitian_contraction
};

// A generated input. Pair kinds fill `second`.
struct Sample {
    CMat first;
    std::optional<CMat> second;
};

bool is_pair_kind(EnsembleKind kind) noexcept;

// Pure function of the spec; identical specs give bitwise-identical output.
// Throws InvalidArgument for dim 0 or an odd-dimensional anticommuting pair.
Sample generate(const EnsembleSpec& spec);

// Cli ids: "ginibre:n", "hermitian:n", "normal:n", "unitary:n", "nil:n",
// "contraction:n", "commute:n", "anticommute:n".
struct EnsembleId {
    EnsembleKind kind;
    std::size_t dim;
};
EnsembleId parse_ensemble_id(std::string_view id);
std::string ensemble_id(EnsembleKind kind, std::size_t dim);
std::string_view kind_prefix(EnsembleKind kind) noexcept;

// Building blocks, exposed for tests and the Monte-Carlo helpers.
CMat ginibre(SplitMix64& rng, std::size_t n);
CMat haar_unitary(SplitMix64& rng, std::size_t n);

}  // namespace numrad
