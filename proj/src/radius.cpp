#include "numrad/radius.hpp"

#include <cmath>
#include <numbers>

#include "numrad/errors.hpp"
#include "numrad/kernels.hpp"
#include "numrad/spectral.hpp"

namespace numrad {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

RadiusResult from_search(const AngleSearch& s) {
    return {s.value, s.argmax, s.achieved_interval, s.evaluations};
}

}  // namespace

RadiusResult generalized_radius(const CMat& t, const NormSpec& norm, const RadiusOptions& opts) {
    require_square(t, "generalized_radius");
    const CMat re = re_part(t);
    const CMat im = im_part(t);
    auto objective = [&](double theta) {
        const double v = norm.evaluate(rotated_re_part(re, im, theta));
        if (!std::isfinite(v) || v < 0.0) {
            throw Error("norm '" + norm.id + "' returned an invalid value");
        }
        return v;
    };
    return from_search(maximize_periodic(objective, kTwoPi, opts));
}

RadiusResult numerical_radius(const CMat& t, const RadiusOptions& opts) {
    require_square(t, "numerical_radius");
    const CMat re = re_part(t);
    const CMat im = im_part(t);
    auto objective = [&](double theta) { return lambda_max(rotated_re_part(re, im, theta)); };
    RadiusResult r = from_search(maximize_periodic(objective, kTwoPi, opts));
    // sup_θ λ_max ≥ 0 since λ_max(Re(e^{iθ}T)) + λ_max(Re(e^{i(θ+π)}T)) ≥ 0; clamp rounding.
    r.value = std::max(r.value, 0.0);
    return r;
}

double numerical_radius_oracle(const CMat& t, int grid) {
    require_square(t, "numerical_radius_oracle");
    if (grid < 1) {
        throw InvalidArgument("oracle grid must be positive");
    }
    double best = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double theta = kTwoPi * i / grid;
        best = std::max(best, lambda_max(re_part(rotate(t, theta))));
    }
    return best;
}

double alphabeta_radius(const CMat& t, const NormSpec& norm, const RadiusOptions& opts) {
    require_square(t, "alphabeta_radius");
    const CMat re = re_part(t);
    const CMat im = im_part(t);
    auto objective = [&](double angle) {
        CMat mix(re.rows(), re.cols());
        kernels::active().axpby(std::cos(angle), re.raw().data(), std::sin(angle),
                                im.raw().data(), mix.raw().data(), mix.raw().size());
        return norm.evaluate(mix);
    };
    return maximize_periodic(objective, kTwoPi, opts).value;
}

double omega_radius(const CMat& t, const RadiusOptions& opts) {
    return std::numbers::sqrt2 * numerical_radius(t, opts).value;
}

RadiusResult omega_radius_slow(const CMat& t, const RadiusOptions& opts, const OmegaOptions& omega) {
    return generalized_radius(t, omega_norm_spec(omega), opts);
}

double hs_radius_sq(const CMat& t) {
    require_square(t, "hs_radius_sq");
    return 0.5 * frobenius_norm_sq(t) + 0.5 * std::abs(trace(matmul(t, t)));
}

}  // namespace numrad
