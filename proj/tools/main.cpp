#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "expr.hpp"
#include "output.hpp"
#include "twspeed/twspeed.h"

using twcli::Table;

namespace {

enum Exit { kOk = 0, kUsage = 1, kEmpty = 2, kNoConvergence = 3 };

struct Failure {
    int code;
    std::string message;
};

int exit_for(tws_status s) {
    switch (s) {
    case TWS_OK: return kOk;
    case TWS_ERR_INVALID_INPUT:
    case TWS_ERR_OUT_OF_DOMAIN:
    case TWS_ERR_SINGULAR: return kUsage;
    default: return kNoConvergence;
    }
}

void check(tws_status s) {
    if (s != TWS_OK) throw Failure{exit_for(s), std::string(tws_status_name(s)) + ": " + tws_last_error()};
}

// Numeric flag kept as text so defaults show in --help and expressions work.
struct Num {
    std::string text;
    CLI::Option* opt = nullptr;
    double value() const {
        try {
            return twcli::eval_expr(text);
        } catch (const twcli::ExprError& e) {
            throw Failure{kUsage, opt->get_name() + ": " + e.what()};
        }
    }
    bool given() const { return opt->count() > 0; }
};

class Flags {
public:
    Num& num(CLI::App* app, const std::string& name, const std::string& def, const std::string& help) {
        auto n = std::make_unique<Num>();
        n->text = def;
        n->opt = app->add_option(name, n->text, help)->type_name("EXPR")->capture_default_str();
        store_.push_back(std::move(n));
        return *store_.back();
    }

private:
    std::vector<std::unique_ptr<Num>> store_;
};

int to_int(const Num& n) {
    double v = n.value();
    if (v != std::floor(v) || std::abs(v) > 1e9) throw Failure{kUsage, n.opt->get_name() + " must be an integer"};
    return static_cast<int>(v);
}

// Output sink: --out path or stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw Failure{kUsage, "cannot open " + path};
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_plot(const std::string& path, const Table& t, const std::vector<std::size_t>& ys, const std::string& title) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Failure{kUsage, "cannot open " + path};
    twcli::write_svg(f, t, ys, title);
}

std::string sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---- config file --------------------------------------------------------

std::vector<std::string> inject_config(std::vector<std::string> args, const CLI::App& app) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw Failure{kUsage, "cannot read config " + path};
    auto given = [&](const std::string& flag) {
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };
    const CLI::App* sub = nullptr;
    for (const auto& a : args)
        if (!sub && a.rfind("-", 0) != 0) sub = app.get_subcommand_no_throw(a);
    std::vector<std::string> extra;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Failure{kUsage, path + ":" + std::to_string(lineno) + ": expected key=value"};
        std::string flag = "--" + trim(line.substr(0, eq));
        if (flag == "--config") throw Failure{kUsage, path + ": nested config not allowed"};
        if (!sub || !sub->get_option_no_throw(flag))
            throw Failure{kUsage, path + ":" + std::to_string(lineno) + ": unknown key '" + flag.substr(2) + "'"};
        if (given(flag)) continue;
        extra.push_back(flag);
        extra.push_back(trim(line.substr(eq + 1)));
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

// ---- wavespeed ----------------------------------------------------------

struct WavespeedCmd {
    Num *a, *b, *x1, *x2, *p1, *p2;
    std::string method = "necessary", source = "periodic", format = "text", out;

    void add(CLI::App& app, Flags& f) {
        auto* sub = app.add_subcommand("wavespeed", "Admissible wave-speed interval for given a > b > 0");
        a = &f.num(sub, "--a", "1", "coefficient a");
        b = &f.num(sub, "--b", "0.09", "coefficient b");
        sub->add_option("--method", method, "necessary | poly | pade | optimal")
            ->check(CLI::IsMember({"necessary", "poly", "pade", "optimal"}))
            ->capture_default_str();
        x1 = &f.num(sub, "--x1", "6/5", "positive half-width");
        x2 = &f.num(sub, "--x2", "10/3-6/5", "negative half-width");
        p1 = &f.num(sub, "--p1", "1/10", "positive shape parameter (pade)");
        p2 = &f.num(sub, "--p2", "3/20", "negative shape parameter (pade)");
        sub->add_option("--source", source, "envelope estimate for optimal: periodic | dirichlet")
            ->check(CLI::IsMember({"periodic", "dirichlet"}))
            ->capture_default_str();
        sub->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
        sub->add_option("--out", out, "output file (default stdout)");
    }

    int run() {
        double av = a->value(), bv = b->value();
        tws_interval nec{}, iv{};
        tws_estimate est{};
        bool has_est = false;
        check(tws_necessary_interval(av, bv, &nec));
        if (method == "necessary") iv = nec;
        else if (method == "poly") check(tws_poly_interval(av, bv, x1->value(), x2->value(), &iv));
        else if (method == "pade")
            check(tws_pade_interval(av, bv, x1->value(), x2->value(), p1->value(), p2->value(), &iv));
        else {
            auto src = source == "dirichlet" ? TWS_SOURCE_DIRICHLET : TWS_SOURCE_PERIODIC;
            est.q = 0.0;
            check(tws_optimal_interval(av, bv, src, &iv, &est));
            has_est = est.q > 0.0;
        }

        Sink sink(out);
        auto& os = sink.stream();
        if (format == "json") {
            nlohmann::ordered_json doc;
            doc["schema_version"] = TWS_SCHEMA_VERSION;
            doc["a"] = av;
            doc["b"] = bv;
            doc["method"] = method;
            auto interval = [](const tws_interval& i) {
                nlohmann::ordered_json j;
                j["empty"] = bool(i.empty);
                if (i.empty) j["reason"] = i.reason;
                else j["lo"] = i.lo, j["hi"] = i.hi;
                return j;
            };
            doc["interval"] = interval(iv);
            doc["necessary"] = interval(nec);
            if (!iv.empty && !nec.empty) doc["margin"] = {{"lo", iv.lo - nec.lo}, {"hi", nec.hi - iv.hi}};
            if (has_est)
                doc["estimate"] = {{"q", est.q}, {"beta_star", est.beta_star}, {"witness", est.witness},
                                   {"source", est.source == TWS_SOURCE_PERIODIC ? "periodic" : "dirichlet"}};
            os << doc.dump(2) << '\n';
        } else {
            os << "method: " << method << '\n';
            if (iv.empty) os << "interval: empty (" << iv.reason << ")\n";
            else os << "interval: (" << sig12(iv.lo) << ", " << sig12(iv.hi) << ")\n";
            if (nec.empty) os << "necessary: empty (" << nec.reason << ")\n";
            else os << "necessary: (" << sig12(nec.lo) << ", " << sig12(nec.hi) << ")\n";
            if (!iv.empty && !nec.empty)
                os << "margin: lower " << sig12(iv.lo - nec.lo) << ", upper " << sig12(nec.hi - iv.hi) << '\n';
            if (has_est)
                os << "estimate: beta*(" << sig12(est.q) << ") = " << sig12(est.beta_star) << " ("
                   << (est.source == TWS_SOURCE_PERIODIC ? "periodic, T = " : "dirichlet, r = ") << sig12(est.witness)
                   << ")\n";
        }
        return iv.empty ? kEmpty : kOk;
    }
};

// ---- curve --------------------------------------------------------------

const std::map<std::string, tws_curve_kind> kCurveKinds{
    {"mu-T", TWS_CURVE_MU_T},
    {"mu", TWS_CURVE_MU},
    {"P", TWS_CURVE_P},
    {"eta-T", TWS_CURVE_ETA_T},
    {"eta", TWS_CURVE_ETA},
    {"dirichlet-eig", TWS_CURVE_DIRICHLET_EIG},
    {"periodic-fucik", TWS_CURVE_PERIODIC_FUCIK},
    {"dirichlet-fucik", TWS_CURVE_DIRICHLET_FUCIK},
    {"envelope", TWS_CURVE_ENVELOPE},
    {"interval-length", TWS_CURVE_INTERVAL_LENGTH},
};

struct CurveCmd {
    std::string kind, sign = "+", format = "csv", out, plot;
    Num *samples, *from, *to, *alpha_min, *alpha_max, *alpha, *T, *p1, *p2, *x1, *n, *k, *r, *step;

    void add(CLI::App& app, Flags& f) {
        auto* sub = app.add_subcommand("curve", "Sample a curve as a table (defaults depend on --kind)");
        std::vector<std::string> names;
        for (const auto& [name, _] : kCurveKinds) names.push_back(name);
        sub->add_option("--kind", kind, "curve kind")->required()->check(CLI::IsMember(names));
        samples = &f.num(sub, "--samples", "", "sweep points");
        from = &f.num(sub, "--from", "", "sweep start (x1, alpha, r, q or b/a)");
        to = &f.num(sub, "--to", "", "sweep end");
        alpha_min = &f.num(sub, "--alpha-min", "", "sweep start for P");
        alpha_max = &f.num(sub, "--alpha-max", "", "sweep end for P; continuation cap for Fucik curves");
        alpha = &f.num(sub, "--alpha", "", "alpha the continuation must land on");
        T = &f.num(sub, "--T", "", "period");
        p1 = &f.num(sub, "--p1", "", "positive shape parameter");
        p2 = &f.num(sub, "--p2", "", "negative shape parameter");
        x1 = &f.num(sub, "--x1", "", "positive half-width (interval-length)");
        n = &f.num(sub, "--n", "", "eigenvalue branch");
        k = &f.num(sub, "--k", "", "Dirichlet Fucik curve index");
        r = &f.num(sub, "--r", "", "Dirichlet half-length (overrides --k)");
        step = &f.num(sub, "--step", "", "continuation step in alpha");
        sub->add_option("--sign", sign, "sign of v(0): + or -")
            ->check(CLI::IsMember({"+", "-", "1", "-1"}))
            ->capture_default_str();
        sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
        sub->add_option("--out", out, "output file (default stdout)");
        sub->add_option("--plot", plot, "SVG plot path");
        sub->footer(
            "Defaults by kind (sweep range, samples):\n"
            "  mu-T            x1 in [0.7, 1.6], 400, T=20/3\n"
            "  mu              x1 in [0.4, sqrt(3)], 400\n"
            "  P               alpha in [1, 6], 400\n"
            "  eta-T           x1 in [0.75, 1.7], 400, T=20/3, p1=1/10, p2=3/20\n"
            "  eta             x1 in [1, 1.6], 61\n"
            "  dirichlet-eig   r in [0.5, 20], 400, n=1\n"
            "  periodic-fucik  T=sqrt(4.6)*pi, alpha cap 6, step 0.05\n"
            "  dirichlet-fucik k=2, sign +, alpha cap 4, step 0.05\n"
            "  envelope        q in [1.05, 10] geometric, 60\n"
            "  interval-length b/a in [0.02, 0.98], 49, x1=6/5, T=20/3, p1=1/10, p2=3/20\n"
            "Fucik curves stop at beta <= 0.01 or at the alpha cap.");
    }

    int run() {
        tws_curve_kind ck = kCurveKinds.at(kind);
        tws_curve_request req;
        tws_curve_request_init(&req, ck);
        auto set = [](const Num* num, double& dst) {
            if (num->given()) dst = num->value();
        };
        if (samples->given()) req.samples = to_int(*samples);
        set(from, req.lo);
        set(to, req.hi);
        bool fucik = ck == TWS_CURVE_PERIODIC_FUCIK || ck == TWS_CURVE_DIRICHLET_FUCIK;
        if (fucik) {
            set(alpha_max, req.alpha_max);
        } else {
            set(alpha_min, req.lo);
            set(alpha_max, req.hi);
        }
        if (alpha->given()) {
            req.stop = alpha->value();
            if (!alpha_max->given() && req.stop > req.alpha_max) req.alpha_max = req.stop;
        }
        set(T, req.T);
        set(p1, req.p1);
        set(p2, req.p2);
        set(x1, req.x1);
        set(r, req.r);
        set(step, req.step);
        if (n->given()) req.n = to_int(*n);
        if (k->given()) req.k = to_int(*k);
        req.sign = (sign == "-" || sign == "-1") ? -1 : 1;

        tws_curve* raw = nullptr;
        check(tws_curve_compute(&req, &raw));
        std::unique_ptr<tws_curve, void (*)(tws_curve*)> curve(raw, tws_curve_destroy);

        Table t;
        std::size_t nc = tws_curve_columns(raw), nr = tws_curve_rows(raw);
        for (std::size_t j = 0; j < nc; ++j) t.columns.emplace_back(tws_curve_column_name(raw, j));
        for (std::size_t i = 0; i < nr; ++i) {
            std::vector<double> row(nc);
            for (std::size_t j = 0; j < nc; ++j) row[j] = tws_curve_value(raw, i, j);
            t.rows.push_back(std::move(row));
            t.status.emplace_back(tws_curve_row_status(raw, i));
        }
        std::string termination = tws_curve_termination(raw);

        Sink sink(out);
        if (format == "json") {
            nlohmann::ordered_json meta;
            meta["kind"] = kind;
            if (!termination.empty()) meta["termination"] = termination;
            twcli::write_json(sink.stream(), t, meta);
        } else {
            twcli::write_csv(sink.stream(), t);
        }
        if (!termination.empty() && format == "csv") std::cerr << "termination: " << termination << '\n';

        std::vector<std::size_t> ys;
        if (ck == TWS_CURVE_INTERVAL_LENGTH) ys = {1, 2, 3, 4};
        else if (ck == TWS_CURVE_DIRICHLET_EIG) ys = {1};
        else {
            // plot beta against alpha
            Table ab;
            auto ia = std::find(t.columns.begin(), t.columns.end(), "alpha") - t.columns.begin();
            auto ib = std::find(t.columns.begin(), t.columns.end(), "beta") - t.columns.begin();
            ab.columns = {"alpha", "beta"};
            for (const auto& row : t.rows) ab.rows.push_back({row[ia], row[ib]});
            write_plot(plot, ab, {1}, kind);
            return nr == 0 ? kEmpty : kOk;
        }
        write_plot(plot, t, ys, kind);
        return nr == 0 ? kEmpty : kOk;
    }
};

// ---- verify -------------------------------------------------------------

struct VerifyCmd {
    std::string suite, format = "text", out;

    void add(CLI::App& app) {
        auto* sub = app.add_subcommand("verify", "Run a verification suite; exit 0 iff all hard checks pass");
        std::vector<std::string> names{"all"};
        for (std::size_t i = 0; i < tws_suite_count(); ++i) names.emplace_back(tws_suite_name(i));
        sub->add_option("--suite", suite, "suite name or all")->required()->check(CLI::IsMember(names));
        sub->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
        sub->add_option("--out", out, "output file (default stdout)");
    }

    int run() {
        std::vector<std::string> suites;
        if (suite == "all")
            for (std::size_t i = 0; i < tws_suite_count(); ++i) suites.emplace_back(tws_suite_name(i));
        else suites.push_back(suite);

        Sink sink(out);
        auto& os = sink.stream();
        bool ok = true;
        nlohmann::ordered_json doc;
        doc["schema_version"] = TWS_SCHEMA_VERSION;
        doc["suites"] = nlohmann::ordered_json::array();
        for (const auto& name : suites) {
            tws_report* raw = nullptr;
            check(tws_verify_run(name.c_str(), &raw));
            std::unique_ptr<tws_report, void (*)(tws_report*)> rep(raw, tws_report_destroy);
            ok = ok && tws_report_passed(raw);
            nlohmann::ordered_json js;
            js["suite"] = name;
            js["passed"] = bool(tws_report_passed(raw));
            js["checks"] = nlohmann::ordered_json::array();
            if (format == "text") os << "suite " << name << '\n';
            for (std::size_t i = 0; i < tws_report_size(raw); ++i) {
                bool pass = tws_report_check_pass(raw, i), hard = tws_report_check_hard(raw, i);
                double v = tws_report_check_value(raw, i), ref = tws_report_check_reference(raw, i),
                       tol = tws_report_check_tolerance(raw, i);
                std::string detail = tws_report_check_detail(raw, i);
                if (format == "text") {
                    os << (pass ? "  [PASS] " : hard ? "  [FAIL] " : "  [INFO] ") << tws_report_check_name(raw, i);
                    if (std::isfinite(v)) {
                        os << "  value=" << twcli::format_double(v);
                        if (std::isfinite(ref)) os << " ref=" << twcli::format_double(ref);
                        if (std::isfinite(ref)) os << " diff=" << twcli::format_double(std::abs(v - ref));
                        if (std::isfinite(tol)) os << " tol=" << twcli::format_double(tol);
                    }
                    if (!detail.empty()) os << "  (" << detail << ')';
                    os << '\n';
                }
                auto num = [](double x) { return std::isfinite(x) ? nlohmann::ordered_json(x) : nullptr; };
                js["checks"].push_back({{"name", tws_report_check_name(raw, i)},
                                        {"pass", pass},
                                        {"hard", hard},
                                        {"value", num(v)},
                                        {"reference", num(ref)},
                                        {"tolerance", num(tol)},
                                        {"detail", detail}});
            }
            doc["suites"].push_back(std::move(js));
        }
        if (format == "json") os << doc.dump(2) << '\n';
        else os << (ok ? "all hard checks passed\n" : "hard check failures\n");
        return ok ? kOk : kNoConvergence;
    }
};

// ---- region -------------------------------------------------------------

struct RegionCmd {
    std::string method = "P", format = "csv", out;
    Num *c, *a_min, *a_max, *a_steps, *b_min, *b_max, *b_steps, *x1, *x2, *p1, *p2, *T;

    void add(CLI::App& app, Flags& f) {
        auto* sub = app.add_subcommand("region", "Verdicts for (alpha, beta) over a grid of (a, b) at speed c");
        sub->add_option("--method", method, "P | eta | poly | pade | spectra")
            ->check(CLI::IsMember({"P", "eta", "poly", "pade", "spectra"}))
            ->capture_default_str();
        c = &f.num(sub, "--c", "1", "wave speed");
        a_min = &f.num(sub, "--a-min", "0.5", "smallest a");
        a_max = &f.num(sub, "--a-max", "1.5", "largest a");
        a_steps = &f.num(sub, "--a-steps", "11", "grid points in a");
        b_min = &f.num(sub, "--b-min", "0.02", "smallest b");
        b_max = &f.num(sub, "--b-max", "0.24", "largest b");
        b_steps = &f.num(sub, "--b-steps", "12", "grid points in b");
        x1 = &f.num(sub, "--x1", "6/5", "positive half-width (poly, pade)");
        x2 = &f.num(sub, "--x2", "10/3-6/5", "negative half-width (poly, pade)");
        p1 = &f.num(sub, "--p1", "1/10", "positive shape parameter (pade, eta)");
        p2 = &f.num(sub, "--p2", "3/20", "negative shape parameter (pade, eta)");
        T = &f.num(sub, "--T", "20/3", "period (eta)");
        sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
        sub->add_option("--out", out, "output file (default stdout)");
    }

    static std::vector<double> grid(double lo, double hi, int steps) {
        if (steps < 1 || hi < lo) throw Failure{kUsage, "grid needs steps >= 1 and min <= max"};
        std::vector<double> g;
        for (int i = 0; i < steps; ++i) g.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
        return g;
    }

    int run() {
        static const std::map<std::string, tws_verdict_method> methods{{"P", TWS_VERDICT_P},
                                                                       {"eta", TWS_VERDICT_ETA},
                                                                       {"poly", TWS_VERDICT_POLY},
                                                                       {"pade", TWS_VERDICT_PADE},
                                                                       {"spectra", TWS_VERDICT_SPECTRA}};
        tws_verdict_params params{x1->value(), x2->value(), p1->value(), p2->value(), T->value()};
        double speed = c->value();
        Table t;
        t.columns = {"a", "b", "alpha", "beta", "verdict", "margin", "matched_x1", "estimate_based"};
        static const char* verdicts[] = {"in-omega-minus", "in-omega-plus", "undecided"};
        for (double a : grid(a_min->value(), a_max->value(), to_int(*a_steps)))
            for (double b : grid(b_min->value(), b_max->value(), to_int(*b_steps))) {
                tws_verdict v{};
                tws_status s = tws_region_verdict(methods.at(method), speed, a, b, &params, &v);
                if (s == TWS_ERR_INVALID_INPUT) check(s);
                if (s != TWS_OK) {
                    double nan = std::nan("");
                    t.rows.push_back({a, b, nan, nan, nan, nan, nan, nan});
                    t.status.push_back(std::string(tws_status_name(s)) + ": " + tws_last_error());
                    continue;
                }
                t.rows.push_back({a, b, v.alpha, v.beta, double(v.verdict), v.margin, v.matched_x1,
                                  double(v.estimate_based)});
                t.status.push_back(std::string(verdicts[v.verdict]) + " via " + v.source);
            }
        Sink sink(out);
        if (format == "json") {
            nlohmann::ordered_json meta;
            meta["method"] = method;
            meta["c"] = speed;
            meta["verdict_codes"] = {"in-omega-minus", "in-omega-plus", "undecided"};
            twcli::write_json(sink.stream(), t, meta);
        } else {
            twcli::write_csv(sink.stream(), t);
        }
        return kOk;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Travelling-wave speed intervals for a beam equation with jumping nonlinearity.\n"
                 "Numeric flags accept expressions such as sqrt(4.6)*pi.\n"
                 "Precedence: flags > --config file (key=value lines) > defaults.\n"
                 "Exit codes: 0 ok, 1 usage, 2 empty result, 3 numerical failure."};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config;
    app.add_option("--config", config, "flat key=value file supplying flags not given on the command line");

    Flags flags;
    WavespeedCmd wavespeed;
    CurveCmd curve;
    VerifyCmd verify;
    RegionCmd region;
    wavespeed.add(app, flags);
    curve.add(app, flags);
    verify.add(app);
    region.add(app, flags);

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = inject_config(std::move(args), app);
        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return kUsage;
        }
        if (app.got_subcommand("wavespeed")) return wavespeed.run();
        if (app.got_subcommand("curve")) return curve.run();
        if (app.got_subcommand("verify")) return verify.run();
        if (app.got_subcommand("region")) return region.run();
        return kUsage;
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
}
