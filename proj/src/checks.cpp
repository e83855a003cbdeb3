#include "numrad/checks.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>

#include "numrad/kernels.hpp"
#include "numrad/spectral.hpp"

namespace numrad {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfSqrt2 = 0.5 * std::numbers::sqrt2;
constexpr double kStructureTol = 1e-10;
constexpr double kClosedFormTol = 1e-7;

class ReportBuilder {
  public:
    ReportBuilder(std::string name, std::string tag, double tol, std::initializer_list<const CMat*> inputs)
        : tol_(tol) {
        r_.name = std::move(name);
        r_.paper_tag = std::move(tag);
        std::vector<const CMat*> mats(inputs);
        r_.input_digest = digest(mats);
    }

    ReportBuilder& norm(const NormSpec& n) {
        r_.norm_id = n.id;
        return *this;
    }

    // lhs <= rhs; `extra_scale` joins |lhs| and |rhs| in the normalization.
    ReportBuilder& relation(std::string label, double lhs, double rhs, double extra_scale = 0.0) {
        Relation rel;
        rel.label = std::move(label);
        rel.lhs = lhs;
        rel.rhs = rhs;
        rel.slack = rhs - lhs;
        rel.scale = std::max({std::abs(lhs), std::abs(rhs), std::abs(extra_scale)});
        rel.tolerance = tol_ * std::max(1.0, rel.scale);
        rel.holds = rel.slack >= -rel.tolerance;
        r_.relations.push_back(std::move(rel));
        return *this;
    }

    // |value − expected| <= allowed, with no extra tolerance on top.
    ReportBuilder& closeness(std::string label, double value, double expected, double allowed) {
        Relation rel;
        rel.label = std::move(label);
        rel.lhs = std::abs(value - expected);
        rel.rhs = allowed;
        rel.slack = allowed - rel.lhs;
        rel.scale = std::max(std::abs(value), std::abs(expected));
        rel.tolerance = 0.0;
        rel.holds = rel.slack >= 0.0;
        r_.relations.push_back(std::move(rel));
        return *this;
    }

    ReportBuilder& term(const std::string& key, double v) {
        r_.terms[key] = v;
        return *this;
    }

    ReportBuilder& note(std::string text) {
        r_.note = std::move(text);
        return *this;
    }

    InequalityReport inapplicable(std::string why) {
        r_.status = CheckStatus::inapplicable;
        r_.holds = false;
        r_.note = std::move(why);
        return std::move(r_);
    }

    InequalityReport finish() {
        const Relation* binding = nullptr;
        double worst = 0.0;
        for (const Relation& rel : r_.relations) {
            const double normalized = rel.slack / std::max(1.0, rel.scale);
            if (binding == nullptr || normalized < worst) {
                binding = &rel;
                worst = normalized;
            }
        }
        if (binding != nullptr) {
            r_.lhs = binding->lhs;
            r_.rhs = binding->rhs;
            r_.slack = binding->slack;
            r_.tolerance = binding->tolerance;
        }
        r_.holds = std::all_of(r_.relations.begin(), r_.relations.end(),
                               [](const Relation& rel) { return rel.holds; });
        r_.status = r_.holds ? CheckStatus::holds : CheckStatus::violated;
        return std::move(r_);
    }

  private:
    InequalityReport r_;
    double tol_;
};

double wn(const CMat& t, const NormSpec& n, const CheckOptions& o) {
    return generalized_radius(t, n, o.radius).value;
}

double w(const CMat& t, const CheckOptions& o) { return numerical_radius(t, o.radius).value; }

CMat sym_sum(const CMat& t) {  // TT* + T*T
    const CMat ta = adjoint(t);
    return add(matmul(t, ta), matmul(ta, t));
}

// Im(e^{iφ}T) = sin φ Re T + cos φ Im T
CMat rotated_im_part(const CMat& re, const CMat& im, double phi) {
    CMat out(re.rows(), re.cols());
    kernels::active().axpby(std::sin(phi), re.raw().data(), std::cos(phi), im.raw().data(),
                            out.raw().data(), out.raw().size());
    return out;
}

double rel(double expected) { return kClosedFormTol * std::max(1.0, std::abs(expected)); }

bool hermitian_within(const CMat& a) {
    return hermitian_defect(a) <= kStructureTol * std::max(1.0, frobenius_norm(a));
}

std::string missing_flags(const NormSpec& n, bool self_adjoint, bool algebra, bool wui) {
    std::string out;
    auto add_flag = [&out](const char* f) {
        if (!out.empty()) {
            out += ", ";
        }
        out += f;
    };
    if (self_adjoint && !n.self_adjoint) {
        add_flag("self-adjoint");
    }
    if (algebra && !n.algebra) {
        add_flag("algebra");
    }
    if (wui && !n.weakly_unitarily_invariant) {
        add_flag("weakly unitarily invariant");
    }
    return out;
}

}  // namespace

std::string_view to_string(CheckStatus s) noexcept {
    switch (s) {
        case CheckStatus::holds: return "holds";
        case CheckStatus::violated: return "violated";
        case CheckStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

SupOverPhi sup_over_phi(const Objective1D& f, const RadiusOptions& opts) {
    const AngleSearch s = maximize_periodic(f, kTwoPi, opts);
    return {s.value, s.argmax, opts.grid, opts.refine_tol};
}

SupOverPhi inf_over_phi(const Objective1D& f, const RadiusOptions& opts) {
    const AngleSearch s = minimize_periodic(f, kTwoPi, opts);
    return {s.value, s.argmax, opts.grid, opts.refine_tol};
}

InequalityReport check_basic_bounds(const CMat& t, const CheckOptions& o) {
    require_square(t, "check_basic_bounds");
    ReportBuilder b("basic_bounds", "numerical-radius-sandwich", o.tol, {&t});
    const double norm = spectral_norm(t);
    const double wt = w(t, o);
    return b.term("norm", norm)
        .term("w", wt)
        .relation("||T||/2 <= w(T)", 0.5 * norm, wt)
        .relation("w(T) <= ||T||", wt, norm)
        .finish();
}

InequalityReport check_kittaneh(const CMat& t, const CheckOptions& o) {
    require_square(t, "check_kittaneh");
    ReportBuilder b("kittaneh", "kittaneh-upper", o.tol, {&t});
    const double wt = w(t, o);
    const double bound = kHalfSqrt2 * std::sqrt(spectral_norm(sym_sum(t)));
    return b.term("w", wt)
        .term("bound", bound)
        .relation("w(T) <= sqrt(2)/2 sqrt(||TT*+T*T||)", wt, bound)
        .finish();
}

InequalityReport check_dragomir(const CMat& t, const CheckOptions& o) {
    require_square(t, "check_dragomir");
    ReportBuilder b("dragomir", "dragomir-upper", o.tol, {&t});
    const double wt = w(t, o);
    const double norm = spectral_norm(t);
    const double w_sq = w(matmul(t, t), o);
    const double bound = kHalfSqrt2 * std::sqrt(norm * norm + w_sq);
    return b.term("w", wt)
        .term("w(T^2)", w_sq)
        .term("bound", bound)
        .relation("w(T) <= sqrt(2)/2 sqrt(||T||^2 + w(T^2))", wt, bound)
        .finish();
}

InequalityReport check_inf_upper(const CMat& t, const NormSpec& n, const CheckOptions& o) {
    require_square(t, "check_inf_upper");
    ReportBuilder b("inf_upper", "cartesian-inf-upper", o.tol, {&t});
    b.norm(n);
    const CMat re = re_part(t);
    const CMat im = im_part(t);
    auto cartesian = [&](double phi) {
        const double a = n.evaluate(rotated_re_part(re, im, phi));
        const double c = n.evaluate(rotated_im_part(re, im, phi));
        return std::sqrt(a * a + c * c);
    };
    const double wnt = wn(t, n, o);
    const SupOverPhi inf = inf_over_phi(cartesian, o.radius);
    const double n_re = n.evaluate(re);
    const double n_im = n.evaluate(im);
    const double at_zero = std::sqrt(n_re * n_re + n_im * n_im);
    return b.term("w_N", wnt)
        .term("inf", inf.value)
        .term("argmin_phi", inf.argmax_phi)
        .term("N(Re T)", n_re)
        .term("N(Im T)", n_im)
        .relation("w_N(T) <= inf_phi sqrt(N^2(Re) + N^2(Im))", wnt, inf.value)
        .relation("inf_phi <= sqrt(N^2(Re T) + N^2(Im T))", inf.value, at_zero)
        .relation("sqrt(N^2(Re T) + N^2(Im T)) <= N(Re T) + N(Im T)", at_zero, n_re + n_im)
        .relation("w_N(T) <= N(Re T) + N(Im T)", wnt, n_re + n_im)
        .relation("N(Re T) <= w_N(T)", n_re, wnt)
        .relation("N(Im T) <= w_N(T)", n_im, wnt)
        .finish();
}

InequalityReport check_lower_bound(const CMat& t, const NormSpec& n, const CheckOptions& o) {
    require_square(t, "check_lower_bound");
    ReportBuilder b("lower_bound", "cartesian-lower", o.tol, {&t});
    b.norm(n);
    if (!n.algebra) {
        return b.inapplicable("RequiresAlgebraNorm: norm '" + n.id + "' is not an algebra norm");
    }
    const CMat re = re_part(t);
    const CMat im = im_part(t);
    auto gap = [&](double phi) {
        const double a = n.evaluate(rotated_re_part(re, im, phi));
        const double c = n.evaluate(rotated_im_part(re, im, phi));
        return std::abs(a * a - c * c);
    };
    const double base = n.evaluate(sym_sum(t)) / 4.0;
    const SupOverPhi sup = sup_over_phi(gap, o.radius);
    const double wnt = wn(t, n, o);
    const double w_sq = wnt * wnt;
    return b.term("N(TT*+T*T)/4", base)
        .term("sup_phi gap", sup.value)
        .term("argmax_phi", sup.argmax_phi)
        .term("w_N", wnt)
        .relation("N(TT*+T*T)/4 + sup|N^2(Re)-N^2(Im)|/2 <= w_N^2", base + 0.5 * sup.value, w_sq)
        .relation("N(TT*+T*T)/4 <= w_N^2", base, w_sq)
        .finish();
}

InequalityReport check_product_chain(const CMat& t, const CMat& s, const NormSpec& n,
                                     const CheckOptions& o) {
    require_square(t, "check_product_chain");
    require_same_shape(t, s, "check_product_chain");
    ReportBuilder b("product_chain", "product-chain", o.tol, {&t, &s});
    b.norm(n);
    if (const auto miss = missing_flags(n, true, true, false); !miss.empty()) {
        return b.inapplicable("RequiresFlags: " + miss);
    }
    const CMat ts = matmul(t, s);
    const double w_ts = wn(ts, n, o);
    const double n_ts = n.evaluate(ts);
    const double n_t = n.evaluate(t);
    const double n_s = n.evaluate(s);
    const double w_t = wn(t, n, o);
    const double w_s = wn(s, n, o);
    return b.term("w_N(TS)", w_ts)
        .term("N(TS)", n_ts)
        .term("N(T)", n_t)
        .term("N(S)", n_s)
        .term("w_N(T)", w_t)
        .term("w_N(S)", w_s)
        .relation("w_N(TS) <= N(TS)", w_ts, n_ts)
        .relation("N(TS) <= N(T)N(S)", n_ts, n_t * n_s)
        .relation("N(T)N(S) <= 2N(T)w_N(S)", n_t * n_s, 2.0 * n_t * w_s)
        .relation("2N(T)w_N(S) <= 4w_N(T)w_N(S)", 2.0 * n_t * w_s, 4.0 * w_t * w_s)
        .finish();
}

InequalityReport check_commutator(const CMat& t, const CMat& s, const NormSpec& n,
                                  const CheckOptions& o) {
    require_square(t, "check_commutator");
    require_same_shape(t, s, "check_commutator");
    ReportBuilder b("commutator", "commutator", o.tol, {&t, &s});
    b.norm(n);
    if (!n.algebra) {
        return b.inapplicable("RequiresAlgebraNorm: norm '" + n.id + "' is not an algebra norm");
    }
    const CMat ts = matmul(t, s);
    const CMat st_adj = matmul(s, adjoint(t));
    const double w_s = wn(s, n, o);
    const double n_t = n.evaluate(t);
    const double n_t_adj = n.evaluate(adjoint(t));
    const double bound = w_s * (n_t + n_t_adj);
    const double w_plus = wn(add(ts, st_adj), n, o);
    const double w_minus = wn(sub(ts, st_adj), n, o);
    b.term("w_N(TS+ST*)", w_plus)
        .term("w_N(TS-ST*)", w_minus)
        .term("w_N(S)", w_s)
        .term("N(T)", n_t)
        .term("N(T*)", n_t_adj)
        .relation("w_N(TS+ST*) <= w_N(S)(N(T)+N(T*))", w_plus, bound)
        .relation("w_N(TS-ST*) <= w_N(S)(N(T)+N(T*))", w_minus, bound);
    if (n.self_adjoint) {
        b.relation("w_N(TS+ST*) <= 2 w_N(S) N(T)", w_plus, 2.0 * w_s * n_t)
            .relation("w_N(TS-ST*) <= 2 w_N(S) N(T)", w_minus, 2.0 * w_s * n_t);
    }
    return b.finish();
}

InequalityReport check_unitary_commutator(const CMat& t, const CMat& s, const NormSpec& n,
                                          const CheckOptions& o) {
    require_square(t, "check_unitary_commutator");
    require_same_shape(t, s, "check_unitary_commutator");
    ReportBuilder b("unitary_commutator", "hermitian-commutator", o.tol, {&t, &s});
    b.norm(n);
    if (const auto miss = missing_flags(n, false, true, true); !miss.empty()) {
        return b.inapplicable("RequiresFlags: " + miss);
    }
    const std::size_t dim = t.rows();
    const auto sup_u = n.unitary_sup ? n.unitary_sup(dim) : std::nullopt;
    if (!sup_u) {
        return b.inapplicable("RequiresFlags: unitary_sup unknown for '" + n.id + "'");
    }
    if (!hermitian_within(t) || !hermitian_within(s)) {
        return b.inapplicable("RequiresContraction: T and S must be Hermitian");
    }
    const CMat th = re_part(t);
    const CMat sh = re_part(s);
    const double op_t = spectral_norm(th);
    const double op_s = spectral_norm(sh);
    if (op_t > 1.0 + 1e-9 || op_s > 1.0 + 1e-9) {
        return b.inapplicable("RequiresContraction: operator norms " + std::to_string(op_t) +
                              ", " + std::to_string(op_s) + " exceed 1");
    }
    // Proof construction: U = S + i(I − S²)^{1/2} is unitary with Re U = S.
    const CMat u = cayley_unitary(sh);
    const double re_defect = max_abs_diff(re_part(u), sh);

    // sup_U {N(U) + N(U*)} <= 2 sup_U N(U), with equality for self-adjoint N.
    const double sup_sum = 2.0 * *sup_u;
    const CMat ts = matmul(th, sh);
    const CMat st = matmul(sh, th);
    const double w_plus = wn(add(ts, st), n, o);
    const double w_minus = wn(sub(ts, st), n, o);
    const double w_t = wn(th, n, o);
    const double w_s = wn(sh, n, o);
    const double bound = std::min(w_t, w_s) * sup_sum;
    b.term("w_N(TS+ST)", w_plus)
        .term("w_N(TS-ST)", w_minus)
        .term("w_N(T)", w_t)
        .term("w_N(S)", w_s)
        .term("sup_U N(U)", *sup_u)
        .term("cayley Re U defect", re_defect)
        .relation("w_N(TS+ST) <= min{w_N(T),w_N(S)} sup(N(U)+N(U*))", w_plus, bound)
        .relation("w_N(TS-ST) <= min{w_N(T),w_N(S)} sup(N(U)+N(U*))", w_minus, bound)
        .closeness("Re(S + i(I-S^2)^(1/2)) = S", re_defect, 0.0, 1e-10);
    return b.note("contraction measured in the operator norm").finish();
}

InequalityReport check_self_commutator(const CMat& t, const NormSpec& n, const CheckOptions& o) {
    require_square(t, "check_self_commutator");
    ReportBuilder b("self_commutator", "self-commutator", o.tol, {&t});
    b.norm(n);
    if (const auto miss = missing_flags(n, true, true, true); !miss.empty()) {
        return b.inapplicable("RequiresFlags: " + miss);
    }
    const auto sup_u = n.unitary_sup ? n.unitary_sup(t.rows()) : std::nullopt;
    if (!sup_u) {
        return b.inapplicable("RequiresFlags: unitary_sup unknown for '" + n.id + "'");
    }
    const double op = spectral_norm(t);
    if (op > 1.0 + 1e-9) {
        return b.inapplicable("RequiresContraction: operator norm " + std::to_string(op) +
                              " exceeds 1");
    }
    const CMat ta = adjoint(t);
    const double lhs = wn(sub(matmul(t, ta), matmul(ta, t)), n, o);
    const double n_t = n.evaluate(t);
    return b.term("w_N(TT*-T*T)", lhs)
        .term("N(T)", n_t)
        .term("sup_U N(U)", *sup_u)
        .relation("w_N(TT*-T*T) <= 4 N(T) sup N(U)", lhs, 4.0 * n_t * *sup_u)
        .note("contraction measured in the operator norm")
        .finish();
}

InequalityReport check_product(const CMat& t, const CMat& s, const NormSpec& n,
                               const CheckOptions& o) {
    require_square(t, "check_product");
    require_same_shape(t, s, "check_product");
    ReportBuilder b("product", "product-refinement", o.tol, {&t, &s});
    b.norm(n);
    if (const auto miss = missing_flags(n, true, true, false); !miss.empty()) {
        return b.inapplicable("RequiresFlags: " + miss);
    }
    const CMat ta = adjoint(t);
    const CMat sa = adjoint(s);
    const CMat ts = matmul(t, s);
    const CMat st_adj = matmul(s, ta);
    const CMat s_adj_t = matmul(sa, t);
    const double w_ts = wn(ts, n, o);
    const double w_t = wn(t, n, o);
    const double w_s = wn(s, n, o);
    const double n_t = n.evaluate(t);
    const double n_s = n.evaluate(s);
    const double a_plus = n_t * w_s + 0.5 * wn(add(ts, st_adj), n, o);
    const double a_minus = n_t * w_s + 0.5 * wn(sub(ts, st_adj), n, o);
    const double b_plus = n_s * w_t + 0.5 * wn(add(ts, s_adj_t), n, o);
    const double b_minus = n_s * w_t + 0.5 * wn(sub(ts, s_adj_t), n, o);
    const double inner = std::min({a_plus, a_minus, b_plus, b_minus});
    const double middle = 2.0 * std::min(n_t * w_s, n_s * w_t);
    const double outer = 4.0 * w_t * w_s;
    return b.term("w_N(TS)", w_ts)
        .term("N(T)w_N(S)+w_N(TS+ST*)/2", a_plus)
        .term("N(T)w_N(S)+w_N(TS-ST*)/2", a_minus)
        .term("N(S)w_N(T)+w_N(TS+S*T)/2", b_plus)
        .term("N(S)w_N(T)+w_N(TS-S*T)/2", b_minus)
        .relation("w_N(TS) <= N(T)w_N(S) + w_N(TS+ST*)/2", w_ts, a_plus)
        .relation("w_N(TS) <= N(T)w_N(S) + w_N(TS-ST*)/2", w_ts, a_minus)
        .relation("w_N(TS) <= N(S)w_N(T) + w_N(TS+S*T)/2", w_ts, b_plus)
        .relation("w_N(TS) <= N(S)w_N(T) + w_N(TS-S*T)/2", w_ts, b_minus)
        .relation("min{...} <= 2 min{N(T)w_N(S), N(S)w_N(T)}", inner, middle)
        .relation("2 min{N(T)w_N(S), N(S)w_N(T)} <= 4 w_N(T)w_N(S)", middle, outer)
        .finish();
}

InequalityReport check_commuting_product(const CMat& t, const CMat& s, const NormSpec& n,
                                         const CheckOptions& o) {
    require_square(t, "check_commuting_product");
    require_same_shape(t, s, "check_commuting_product");
    ReportBuilder b("commuting_product", "commuting-product", o.tol, {&t, &s});
    b.norm(n);
    if (const auto miss = missing_flags(n, true, true, false); !miss.empty()) {
        return b.inapplicable("RequiresFlags: " + miss);
    }
    if (!hermitian_within(t) || !hermitian_within(s)) {
        return b.inapplicable("RequiresHermitian: T and S must be self-adjoint");
    }
    const CMat ts = matmul(t, s);
    const CMat st = matmul(s, t);
    const double scale_ts = frobenius_norm(t) * frobenius_norm(s);
    const double comm = frobenius_norm(sub(ts, st));
    const double anti = frobenius_norm(add(ts, st));
    const double limit = kStructureTol * std::max(1.0, scale_ts);
    if (comm > limit && anti > limit) {
        return b.inapplicable("RequiresCommutation: TS = ±ST fails (residuals " +
                              std::to_string(comm) + ", " + std::to_string(anti) + ")");
    }
    const double w_ts = wn(ts, n, o);
    const double bound =
        std::min(n.evaluate(t) * wn(s, n, o), n.evaluate(s) * wn(t, n, o));
    return b.term("w_N(TS)", w_ts)
        .term("commutator residual", comm)
        .term("anticommutator residual", anti)
        .relation("w_N(TS) <= min{N(T)w_N(S), N(S)w_N(T)}", w_ts, bound)
        .note(comm <= limit ? "TS = ST" : "TS = -ST")
        .finish();
}

InequalityReport check_omega_upper(const CMat& t, const CheckOptions& o) {
    require_square(t, "check_omega_upper");
    ReportBuilder b("omega_upper", "omega-upper", o.tol, {&t});
    const double omega = omega_norm(t, o.omega).value;
    const double norm = spectral_norm(t);
    const double first = std::sqrt(spectral_norm(sym_sum(t)));
    const double second = std::sqrt(norm * norm + w(matmul(t, t), o));
    return b.term("Omega", omega)
        .term("sqrt||TT*+T*T||", first)
        .term("sqrt(||T||^2+w(T^2))", second)
        .term("norm", norm)
        .relation("Omega(T) <= sqrt(||TT*+T*T||)", omega, first)
        .relation("Omega(T) <= sqrt(||T||^2 + w(T^2))", omega, second)
        .relation("||T|| <= Omega(T)", norm, omega)
        .relation("Omega(T) <= sqrt(2)||T||", omega, std::numbers::sqrt2 * norm)
        .finish();
}

InequalityReport check_w_omega_chain(const CMat& t, const CheckOptions& o) {
    require_square(t, "check_w_omega_chain");
    ReportBuilder b("w_omega_chain", "omega-radius-chain", o.tol, {&t});
    const double wt = w(t, o);
    const double omega = omega_norm(t, o.omega).value;
    const double norm = spectral_norm(t);
    const double first = std::sqrt(spectral_norm(sym_sum(t)));
    const double second = std::sqrt(norm * norm + w(matmul(t, t), o));
    const double slow = omega_radius_slow(t, o.slow_radius, o.slow_omega).value;
    return b.term("w", wt)
        .term("Omega", omega)
        .term("w_Omega slow", slow)
        .relation("w(T) <= sqrt(2)/2 Omega(T)", wt, kHalfSqrt2 * omega)
        .relation("sqrt(2)/2 Omega(T) <= sqrt(2)/2 min{...}", kHalfSqrt2 * omega,
                  kHalfSqrt2 * std::min(first, second))
        .closeness("w_Omega(T) = sqrt(2) w(T)", slow, std::numbers::sqrt2 * wt,
                   kClosedFormTol * std::max(1.0, wt))
        .finish();
}

InequalityReport check_omega_equality_condition(const CMat& t, const CheckOptions& o) {
    require_square(t, "check_omega_equality_condition");
    ReportBuilder b("omega_equality", "omega-equality-condition", o.tol, {&t});
    const double omega = omega_norm(t, o.omega).value;
    const double w_omega = omega_radius(t, o.radius);
    const CMat re = re_part(t);
    const CMat im = im_part(t);
    double worst = 0.0;
    constexpr int kThetaGrid = 720;
    for (int i = 0; i < kThetaGrid; ++i) {
        const double theta = kTwoPi * i / kThetaGrid;
        const double part = spectral_norm(rotated_re_part(re, im, theta));
        worst = std::max(worst, std::abs(omega - 2.0 * std::numbers::sqrt2 * part));
    }
    const double gap_i = std::abs(w_omega - 0.5 * omega);
    const bool cond_i = gap_i <= kClosedFormTol * omega;
    const bool cond_ii = worst <= kClosedFormTol * omega;
    const double relative_gap = omega > 0.0 ? gap_i / omega : 0.0;
    b.term("Omega", omega)
        .term("w_Omega", w_omega)
        .term("condition (i)", cond_i ? 1.0 : 0.0)
        .term("condition (ii)", cond_ii ? 1.0 : 0.0)
        .term("relative gap (i)", relative_gap)
        .term("max_theta gap (ii)", worst)
        .relation("(i) <=> (ii)", cond_i == cond_ii ? 0.0 : 1.0, 0.0);
    if (omega > 0.0 && relative_gap <= kNearEqualityNote) {
        b.note("w_Omega within 1e-4 of Omega/2");
    }
    return b.finish();
}

InequalityReport check_special_forms(const CMat& t, SpecialForm kind, const CheckOptions& o) {
    require_square(t, "check_special_forms");
    ReportBuilder b("special_forms", "omega-special-forms", o.tol, {&t});
    const double fro_sq = frobenius_norm_sq(t);
    const double limit = kStructureTol * std::max(1.0, fro_sq);
    const CMat ta = adjoint(t);
    switch (kind) {
        case SpecialForm::normal: {
            const double r = frobenius_norm(sub(matmul(t, ta), matmul(ta, t)));
            if (r > limit) {
                return b.inapplicable("RequiresNormal: ||TT*-T*T||_F = " + std::to_string(r));
            }
            break;
        }
        case SpecialForm::square_zero: {
            const double r = frobenius_norm(matmul(t, t));
            if (r > limit) {
                return b.inapplicable("RequiresSquareZero: ||T^2||_F = " + std::to_string(r));
            }
            break;
        }
        case SpecialForm::self_adjoint:
            if (!hermitian_within(t)) {
                return b.inapplicable("RequiresSelfAdjoint");
            }
            break;
    }
    const double omega = omega_norm(t, o.omega).value;
    const double norm = spectral_norm(t);
    const double w_omega = omega_radius(t, o.radius);
    b.term("Omega", omega).term("norm", norm).term("w_Omega", w_omega);
    switch (kind) {
        case SpecialForm::normal:
            b.note("normal")
                .closeness("Omega(T) = sqrt(2)||T||", omega, std::numbers::sqrt2 * norm, rel(std::numbers::sqrt2 * norm))
                .closeness("w_Omega(T) = Omega(T)", w_omega, omega, rel(omega));
            break;
        case SpecialForm::square_zero:
            b.note("square-zero")
                .closeness("Omega(T) = ||T||", omega, norm, rel(norm))
                .closeness("w_Omega(T) = sqrt(2)/2 Omega(T)", w_omega, kHalfSqrt2 * omega, rel(kHalfSqrt2 * omega));
            break;
        case SpecialForm::self_adjoint:
            b.note("self-adjoint")
                .closeness("Omega(T) = sqrt(2)||T||", omega, std::numbers::sqrt2 * norm, rel(std::numbers::sqrt2 * norm));
            break;
    }
    return b.finish();
}

InequalityReport check_c2_corollary(const CMat& t, const CMat& s, const CheckOptions& o) {
    require_square(t, "check_c2_corollary");
    require_same_shape(t, s, "check_c2_corollary");
    ReportBuilder b("c2_corollary", "hilbert-schmidt-corollary", o.tol, {&t, &s});
    const CMat ta = adjoint(t);
    auto trace_sum = [&](double phi) {
        const CMat x = rotate(t, phi);
        const CMat xa = rotate(ta, -phi);
        return std::abs(trace(matmul(x, x)) + trace(matmul(xa, xa)));
    };
    const SupOverPhi sup = sup_over_phi(trace_sum, o.radius);
    const double tr_t2 = std::abs(trace(matmul(t, t)));
    const double closed = 2.0 * tr_t2;
    const double hs_t = frobenius_norm_sq(t);
    const double lhs_i = frobenius_norm(sym_sum(t)) + sup.value;
    const double rhs_i = 2.0 * (hs_t + tr_t2);

    const CMat ts = matmul(t, s);
    const double hs_s = frobenius_norm_sq(s);
    const double tr_s2 = std::abs(trace(matmul(s, s)));
    const double lhs_ii = frobenius_norm_sq(ts) + std::abs(trace(matmul(ts, ts)));
    const double rhs_ii = 4.0 * std::min(hs_t * (hs_s + tr_s2), hs_s * (hs_t + tr_t2));
    return b.term("sup_phi trace", sup.value)
        .term("2|tr T^2|", closed)
        .relation("(i) ||TT*+T*T||_2 + sup|tr(...)| <= 2(||T||_2^2 + |tr T^2|)", lhs_i, rhs_i)
        .relation("(ii) ||TS||_2^2 + |tr (TS)^2| <= 4 min{...}", lhs_ii, rhs_ii)
        .closeness("sup_phi |tr((e^{i phi}T)^2 + (e^{-i phi}T*)^2)| = 2|tr T^2|", sup.value,
                   closed, 1e-10 * std::max(1.0, closed))
        .finish();
}

}  // namespace numrad
