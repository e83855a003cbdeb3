#include "numrad/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "numrad/errors.hpp"

namespace numrad {
namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

double wrap(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) {
        r += period;
    }
    return r >= period ? 0.0 : r;
}

void validate(const GridOptions& opts) {
    if (opts.grid < 3) {
        throw InvalidArgument("grid must have at least 3 points");
    }
    if (!(opts.refine_tol > 0.0)) {
        throw InvalidArgument("refine_tol must be positive");
    }
    if (opts.top_brackets < 1) {
        throw InvalidArgument("top_brackets must be at least 1");
    }
}

}  // namespace

GoldenResult golden_max(const Objective1D& f, double lo, double hi, double tol, double seed_x,
                        double seed_value) {
    GoldenResult best{seed_x, seed_value, hi - lo, 0};
    double a = lo;
    double b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    best.evaluations += 2;
    auto consider = [&best](double x, double v) {
        if (v > best.value) {
            best.value = v;
            best.x = x;
        }
    };
    consider(x1, f1);
    consider(x2, f2);
    while (b - a > tol) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            if (!(x1 > a && x1 < x2)) {
                break;  // bracket exhausted at double precision
            }
            f1 = f(x1);
            consider(x1, f1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            if (!(x2 < b && x2 > x1)) {
                break;
            }
            f2 = f(x2);
            consider(x2, f2);
        }
        ++best.evaluations;
    }
    best.width = b - a;
    return best;
}

AngleSearch maximize_periodic(const Objective1D& f, double period, const GridOptions& opts) {
    validate(opts);
    const int m = opts.grid;
    const double h = period / m;
    std::vector<double> values(m);
    for (int i = 0; i < m; ++i) {
        values[i] = f(i * h);
    }

    // Local maxima of the periodic grid; a flat run yields every point.
    std::vector<int> peaks;
    for (int i = 0; i < m; ++i) {
        const double left = values[(i + m - 1) % m];
        const double right = values[(i + 1) % m];
        if (values[i] >= left && values[i] >= right) {
            peaks.push_back(i);
        }
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [&values](int a, int b) { return values[a] > values[b]; });
    if (static_cast<int>(peaks.size()) > opts.top_brackets) {
        peaks.resize(opts.top_brackets);
    }

    AngleSearch out;
    out.evaluations = m;
    const int first = peaks.empty() ? 0 : peaks.front();
    out.value = values[first];
    out.argmax = first * h;
    out.achieved_interval = 0.0;
    for (int i : peaks) {
        const double centre = i * h;
        const GoldenResult g =
            golden_max(f, centre - h, centre + h, opts.refine_tol, centre, values[i]);
        out.evaluations += g.evaluations;
        out.achieved_interval = std::max(out.achieved_interval, g.width);
        if (g.value > out.value) {
            out.value = g.value;
            out.argmax = g.x;
        }
    }
    out.argmax = wrap(out.argmax, period);
    return out;
}

AngleSearch minimize_periodic(const Objective1D& f, double period, const GridOptions& opts) {
    AngleSearch r = maximize_periodic([&f](double x) { return -f(x); }, period, opts);
    r.value = -r.value;
    return r;
}

}  // namespace numrad
