#include "twspeed/twspeed.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "twspeed/approx.hpp"
#include "twspeed/core.hpp"
#include "twspeed/error.hpp"
#include "twspeed/spectra.hpp"
#include "twspeed/verify.hpp"
#include "twspeed/wavespeed.hpp"

using namespace twspeed;

struct tws_curve {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> status;
    std::string termination;
};

struct tws_report {
    SuiteReport report;
};

namespace {

thread_local std::string g_last_error;

template <class F>
tws_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return TWS_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<tws_status>(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TWS_ERR_NUMERICAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) throw Error(Errc::invalid_input, std::string("null pointer: ") + what);
}

void copy_text(char* dst, std::size_t n, const std::string& src) {
    std::strncpy(dst, src.c_str(), n - 1);
    dst[n - 1] = '\0';
}

void fill(tws_interval* out, const SpeedInterval& s) {
    out->lo = s.lo();
    out->hi = s.hi();
    out->empty = s.empty() ? 1 : 0;
    out->kind = static_cast<tws_interval_kind>(s.kind());
    copy_text(out->reason, sizeof out->reason, s.reason());
}

void fill(tws_estimate* out, const BetaStarEstimate& e) {
    out->q = e.q;
    out->beta_star = e.beta_star;
    out->witness = e.witness;
    out->witness_sign = e.witness_sign;
    out->source = e.source == BetaStarSource::periodic_sup ? TWS_SOURCE_PERIODIC : TWS_SOURCE_DIRICHLET;
}

BetaStarSource to_source(tws_beta_source s) {
    if (s == TWS_SOURCE_PERIODIC) return BetaStarSource::periodic_sup;
    if (s == TWS_SOURCE_DIRICHLET) return BetaStarSource::dirichlet_sup;
    throw Error(Errc::invalid_input, "unknown estimate source");
}

const double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> sweep(const tws_curve_request& r) {
    if (r.samples < 1) throw Error(Errc::invalid_input, "samples must be >= 1");
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.hi < r.lo)
        throw Error(Errc::invalid_input, "sweep range needs lo <= hi");
    std::vector<double> v;
    for (int i = 0; i < r.samples; ++i)
        v.push_back(r.samples == 1 ? r.lo : r.lo + (r.hi - r.lo) * i / (r.samples - 1));
    return v;
}

// Evaluates `row` per sweep value; a throwing row becomes NaNs plus status.
template <class Row>
void sweep_rows(tws_curve& c, const std::vector<double>& xs, Row&& row) {
    for (double x : xs) {
        try {
            c.rows.push_back(row(x));
            c.status.emplace_back("ok");
        } catch (const Error& e) {
            std::vector<double> bad(c.columns.size(), kNaN);
            bad[0] = x;
            c.rows.push_back(bad);
            c.status.emplace_back(e.what());
        }
    }
}

void add_fucik(tws_curve& c, const FucikCurve& f) {
    for (const auto& s : f.samples) {
        c.rows.push_back({s.alpha, s.beta, s.aux, s.length});
        c.status.emplace_back("ok");
    }
    c.termination = f.termination;
}

CurveOptions curve_options(const tws_curve_request& r) {
    CurveOptions o;
    o.alpha_max = r.alpha_max;
    o.step = r.step;
    if (!(o.step > 0.0) || !(o.alpha_max > 0.0)) throw Error(Errc::invalid_input, "step and alpha cap must be positive");
    if (r.stop > 0.0) o.stops.push_back(r.stop);
    return o;
}

void compute_curve(const tws_curve_request& r, tws_curve& c) {
    switch (r.kind) {
    case TWS_CURVE_MU_T:
        c.columns = {"x1", "alpha", "beta", "in_omega"};
        sweep_rows(c, sweep(r), [&](double x) {
            auto s = mu_T(r.T, x);
            return std::vector<double>{x, s.alpha, s.beta, double(s.in_omega)};
        });
        break;
    case TWS_CURVE_MU:
        c.columns = {"x1", "alpha", "beta", "in_omega"};
        sweep_rows(c, sweep(r), [&](double x) {
            auto s = mu(x);
            return std::vector<double>{x, s.alpha, s.beta, double(s.in_omega)};
        });
        break;
    case TWS_CURVE_P:
        c.columns = {"alpha", "beta"};
        sweep_rows(c, sweep(r), [&](double a) { return std::vector<double>{a, P_curve(a)}; });
        break;
    case TWS_CURVE_ETA_T:
        c.columns = {"x1", "alpha", "beta", "in_omega"};
        sweep_rows(c, sweep(r), [&](double x) {
            auto s = eta_T(r.T, r.p1, r.p2, x);
            return std::vector<double>{x, s.alpha, s.beta, double(s.in_omega)};
        });
        break;
    case TWS_CURVE_ETA: {
        c.columns = {"x1", "alpha", "beta", "p1", "p2", "T", "residual"};
        auto pts = eta_curve(sweep(r));
        for (const auto& p : pts) {
            if (p.solution) {
                const auto& s = p.solution->state;
                c.rows.push_back({p.x1, s.alpha, s.beta, s.p1, s.p2, s.T, p.solution->residual});
            } else {
                c.rows.push_back({p.x1, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN});
            }
            c.status.push_back(p.status);
        }
        break;
    }
    case TWS_CURVE_DIRICHLET_EIG: {
        c.columns = {"r", "lambda"};
        if (r.n < 1) throw Error(Errc::invalid_input, "branch index must be >= 1");
        sweep_rows(c, sweep(r), [&](double x) { return std::vector<double>{x, dirichlet_eigenvalue(r.n, x)}; });
        break;
    }
    case TWS_CURVE_PERIODIC_FUCIK:
        c.columns = {"alpha", "beta", "tau", "T"};
        add_fucik(c, periodic_fucik_curve(r.T, curve_options(r)));
        break;
    case TWS_CURVE_DIRICHLET_FUCIK:
        c.columns = {"alpha", "beta", "delta", "r"};
        if (r.sign != 1 && r.sign != -1) throw Error(Errc::invalid_input, "sign must be +1 or -1");
        add_fucik(c, r.r > 0.0 ? dirichlet_fucik_curve_r(r.r, r.sign, curve_options(r))
                               : dirichlet_fucik_curve(r.k, r.sign, curve_options(r)));
        break;
    case TWS_CURVE_ENVELOPE: {
        c.columns = {"q", "alpha", "beta", "T"};
        if (!(r.lo > 1.0)) throw Error(Errc::invalid_input, "envelope sweep needs q > 1");
        std::vector<double> qs;
        for (int i = 0; i < r.samples; ++i)
            qs.push_back(r.samples == 1 ? r.lo : r.lo * std::pow(r.hi / r.lo, double(i) / (r.samples - 1)));
        sweep_rows(c, qs, [&](double q) {
            auto e = periodic_envelope(q);
            return std::vector<double>{q, q * e.beta_star, e.beta_star, e.witness};
        });
        break;
    }
    case TWS_CURVE_INTERVAL_LENGTH: {
        c.columns = {"b_over_a", "necessary", "poly", "pade", "optimal"};
        double x2 = r.T / 2.0 - r.x1;
        if (!(r.x1 > 0.0 && x2 > 0.0)) throw Error(Errc::invalid_input, "interval length needs 0 < x1 < T/2");
        sweep_rows(c, sweep(r), [&](double ratio) {
            if (!(ratio > 0.0 && ratio < 1.0)) throw Error(Errc::invalid_input, "b/a must lie in (0, 1)");
            PhysicalParams p{1.0, ratio};
            double scale = std::pow(4.0, 0.25);
            auto est = estimate_beta_star(1.0 / ratio, BetaStarSource::periodic_sup);
            return std::vector<double>{ratio, necessary_interval(p).length() / scale,
                                       sufficient_interval_poly(p, r.x1, x2).length() / scale,
                                       sufficient_interval_pade(p, r.x1, x2, r.p1, r.p2).length() / scale,
                                       optimal_interval_estimate(p, est).length() / scale};
        });
        break;
    }
    default:
        throw Error(Errc::invalid_input, "unknown curve kind");
    }
}

}  // namespace

extern "C" {

const char* tws_last_error(void) { return g_last_error.c_str(); }

const char* tws_status_name(tws_status status) { return errc_name(static_cast<Errc>(status)); }

tws_status tws_fucik_point(double a, double b, double c, double* alpha, double* beta) {
    return guarded([&] {
        need(alpha, "alpha");
        need(beta, "beta");
        auto p = to_fucik_point({a, b}, {c});
        *alpha = p.alpha;
        *beta = p.beta;
    });
}

tws_status tws_necessary_interval(double a, double b, tws_interval* out) {
    return guarded([&] {
        need(out, "out");
        fill(out, necessary_interval({a, b}));
    });
}

tws_status tws_poly_interval(double a, double b, double x1, double x2, tws_interval* out) {
    return guarded([&] {
        need(out, "out");
        fill(out, sufficient_interval_poly({a, b}, x1, x2));
    });
}

tws_status tws_pade_interval(double a, double b, double x1, double x2, double p1, double p2, tws_interval* out) {
    return guarded([&] {
        need(out, "out");
        fill(out, sufficient_interval_pade({a, b}, x1, x2, p1, p2));
    });
}

tws_status tws_beta_star(double q, tws_beta_source source, tws_estimate* out) {
    return guarded([&] {
        need(out, "out");
        fill(out, estimate_beta_star(q, to_source(source)));
    });
}

tws_status tws_optimal_interval(double a, double b, tws_beta_source source, tws_interval* out,
                                tws_estimate* estimate) {
    return guarded([&] {
        need(out, "out");
        if (!(a > b && b > 0.0)) {
            fill(out, SpeedInterval::none(IntervalKind::sufficient_optimal, "sufficient conditions need a > b > 0"));
            return;
        }
        auto est = estimate_beta_star(a / b, to_source(source));
        if (estimate) fill(estimate, est);
        fill(out, optimal_interval_estimate({a, b}, est));
    });
}

tws_status tws_best_poly(double q, tws_bound_choice* out) {
    return guarded([&] {
        need(out, "out");
        auto c = best_poly(q);
        *out = {c.x1, c.x2, c.p1, c.p2, c.bound};
    });
}

tws_status tws_best_pade(double q, tws_bound_choice* out) {
    return guarded([&] {
        need(out, "out");
        auto c = best_pade(q);
        *out = {c.x1, c.x2, c.p1, c.p2, c.bound};
    });
}

tws_status tws_bound_poly(double x1, double x2, double q, double* out) {
    return guarded([&] {
        need(out, "out");
        if (!(x1 > 0.0) || !(x2 > 0.0)) throw Error(Errc::invalid_input, "half-widths must be positive");
        *out = bound_poly(x1, x2, q);
    });
}

tws_status tws_bound_pade(double x1, double x2, double p1, double p2, double q, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = bound_pade(x1, x2, p1, p2, q);
    });
}

tws_status tws_P_curve(double alpha, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = P_curve(alpha);
    });
}

void tws_curve_request_init(tws_curve_request* req, tws_curve_kind kind) {
    if (!req) return;
    using std::numbers::pi;
    *req = {};
    req->kind = kind;
    req->samples = 400;
    req->T = 20.0 / 3.0;
    req->p1 = 0.1;
    req->p2 = 0.15;
    req->x1 = 1.2;
    req->n = 1;
    req->k = 2;
    req->sign = 1;
    req->step = 0.05;
    req->alpha_max = 6.0;
    switch (kind) {
    case TWS_CURVE_MU_T: req->lo = 0.7; req->hi = 1.6; break;
    case TWS_CURVE_MU: req->lo = 0.4; req->hi = std::sqrt(3.0); break;
    case TWS_CURVE_P: req->lo = 1.0; req->hi = 6.0; break;
    case TWS_CURVE_ETA_T: req->lo = 0.75; req->hi = 1.7; break;
    case TWS_CURVE_ETA: req->lo = 1.0; req->hi = 1.6; req->samples = 61; break;
    case TWS_CURVE_DIRICHLET_EIG: req->lo = 0.5; req->hi = 20.0; break;
    case TWS_CURVE_PERIODIC_FUCIK: req->T = std::sqrt(4.6) * pi; break;
    case TWS_CURVE_DIRICHLET_FUCIK: req->alpha_max = 4.0; break;
    case TWS_CURVE_ENVELOPE: req->lo = 1.05; req->hi = 10.0; req->samples = 60; break;
    case TWS_CURVE_INTERVAL_LENGTH: req->lo = 0.02; req->hi = 0.98; req->samples = 49; break;
    }
}

tws_status tws_curve_compute(const tws_curve_request* req, tws_curve** out) {
    return guarded([&] {
        need(req, "request");
        need(out, "out");
        *out = nullptr;
        auto c = std::make_unique<tws_curve>();
        compute_curve(*req, *c);
        *out = c.release();
    });
}

size_t tws_curve_rows(const tws_curve* c) { return c ? c->rows.size() : 0; }
size_t tws_curve_columns(const tws_curve* c) { return c ? c->columns.size() : 0; }

const char* tws_curve_column_name(const tws_curve* c, size_t col) {
    return c && col < c->columns.size() ? c->columns[col].c_str() : nullptr;
}

double tws_curve_value(const tws_curve* c, size_t row, size_t col) {
    if (!c || row >= c->rows.size() || col >= c->columns.size()) return kNaN;
    return c->rows[row][col];
}

const char* tws_curve_row_status(const tws_curve* c, size_t row) {
    return c && row < c->status.size() ? c->status[row].c_str() : nullptr;
}

const char* tws_curve_termination(const tws_curve* c) { return c ? c->termination.c_str() : nullptr; }

void tws_curve_destroy(tws_curve* c) { delete c; }

size_t tws_suite_count(void) { return suite_names().size(); }

const char* tws_suite_name(size_t i) { return i < suite_names().size() ? suite_names()[i].c_str() : nullptr; }

tws_status tws_verify_run(const char* suite, tws_report** out) {
    return guarded([&] {
        need(suite, "suite");
        need(out, "out");
        *out = nullptr;
        *out = new tws_report{run_suite(suite)};
    });
}

namespace {
const Check* check_at(const tws_report* r, size_t i) {
    return r && i < r->report.checks.size() ? &r->report.checks[i] : nullptr;
}
}  // namespace

size_t tws_report_size(const tws_report* r) { return r ? r->report.checks.size() : 0; }
const char* tws_report_check_name(const tws_report* r, size_t i) {
    auto c = check_at(r, i);
    return c ? c->name.c_str() : nullptr;
}
int tws_report_check_pass(const tws_report* r, size_t i) {
    auto c = check_at(r, i);
    return c && c->pass ? 1 : 0;
}
int tws_report_check_hard(const tws_report* r, size_t i) {
    auto c = check_at(r, i);
    return c && c->hard ? 1 : 0;
}
double tws_report_check_value(const tws_report* r, size_t i) {
    auto c = check_at(r, i);
    return c ? c->value : kNaN;
}
double tws_report_check_reference(const tws_report* r, size_t i) {
    auto c = check_at(r, i);
    return c ? c->reference : kNaN;
}
double tws_report_check_tolerance(const tws_report* r, size_t i) {
    auto c = check_at(r, i);
    return c ? c->tolerance : kNaN;
}
const char* tws_report_check_detail(const tws_report* r, size_t i) {
    auto c = check_at(r, i);
    return c ? c->detail.c_str() : nullptr;
}
int tws_report_passed(const tws_report* r) { return r && r->report.passed() ? 1 : 0; }
void tws_report_destroy(tws_report* r) { delete r; }

tws_status tws_region_verdict(tws_verdict_method method, double c, double a, double b,
                              const tws_verdict_params* params, tws_verdict* out) {
    return guarded([&] {
        need(out, "out");
        WaveSpeed speed{c};
        PhysicalParams phys{a, b};
        RegionVerdict v;
        switch (method) {
        case TWS_VERDICT_P: v = region_verdict_P(speed, phys); break;
        case TWS_VERDICT_ETA:
            need(params, "params");
            v = region_verdict_eta(speed, phys, params->T, params->p1, params->p2);
            break;
        case TWS_VERDICT_POLY:
            need(params, "params");
            v = region_verdict_poly(speed, phys, params->x1, params->x2);
            break;
        case TWS_VERDICT_PADE:
            need(params, "params");
            v = region_verdict_pade(speed, phys, params->x1, params->x2, params->p1, params->p2);
            break;
        case TWS_VERDICT_SPECTRA: v = region_verdict_spectra(speed, phys); break;
        default: throw Error(Errc::invalid_input, "unknown verdict method");
        }
        out->alpha = v.point.alpha;
        out->beta = v.point.beta;
        out->verdict = static_cast<tws_verdict_value>(v.verdict);
        out->margin = v.margin;
        out->matched_x1 = v.matched_x1;
        out->estimate_based = v.estimate_based ? 1 : 0;
        copy_text(out->source, sizeof out->source, source_name(v.source));
        copy_text(out->reason, sizeof out->reason, v.reason);
    });
}

}  // extern "C"
