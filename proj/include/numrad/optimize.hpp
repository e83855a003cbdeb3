#pragma once
//
// Derivative-free global search over one periodic angle: a uniform grid,
// then golden-section refinement of the best local brackets. Shared by the
// radius optimizers and the sup/inf-over-rotation terms of the checks so
// all of them carry the same error budget.
//

#include <functional>

namespace numrad {

struct GridOptions {
    int grid = 720;
    double refine_tol = 1e-10;
    int top_brackets = 5;
};

struct AngleSearch {
    double value = 0.0;
    double argmax = 0.0;  // in [0, period)
    double achieved_interval = 0.0;
    long evaluations = 0;
};

using Objective1D = std::function<double(double)>;

// Maximizes f over [0, period). f must be period-periodic.
AngleSearch maximize_periodic(const Objective1D& f, double period, const GridOptions& opts = {});

// Minimizes f; `value` is the minimum and `argmax` its location.
AngleSearch minimize_periodic(const Objective1D& f, double period, const GridOptions& opts = {});

struct GoldenResult {
    double x = 0.0;
    double value = 0.0;
    double width = 0.0;  // final bracket width
    long evaluations = 0;
};

// Golden-section maximization on [lo, hi] to bracket width `tol`. The
// returned point is the best one evaluated; `seed_x`/`seed_value` is a known
// point inside the bracket that the result never falls below.
GoldenResult golden_max(const Objective1D& f, double lo, double hi, double tol, double seed_x,
                        double seed_value);

}  // namespace numrad
