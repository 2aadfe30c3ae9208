#include <qdunkl/experiments.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>

#include <qdunkl/moments.hpp>
#include <qdunkl/operators.hpp>
#include <qdunkl/parallel.hpp>

namespace qdunkl
{

// --- QnScheme -----------------------------------------------------------------

QnScheme QnScheme::one_minus_inv(double offset)
{
    if (!(offset > 0)) {
        throw std::invalid_argument("one_minus_inv: offset must be > 0");
    }
    return {Kind::one_minus_inv, offset};
}

QnScheme QnScheme::one_minus_inv_sqrt()
{
    return {Kind::one_minus_inv_sqrt, 0};
}

QnScheme QnScheme::fixed(double q)
{
    check_q(q);
    return {Kind::fixed, q};
}

QnScheme QnScheme::parse(const std::string &spec)
{
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto number = [&](double fallback) {
        if (arg.empty()) {
            return fallback;
        }
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(arg, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != arg.size()) {
            throw std::invalid_argument("scheme '" + spec + "': bad parameter '" + arg + "'");
        }
        return v;
    };
    if (head == "one_minus_inv") {
        return one_minus_inv(number(1));
    }
    if (head == "one_minus_inv_sqrt" && arg.empty()) {
        return one_minus_inv_sqrt();
    }
    if (head == "fixed" && !arg.empty()) {
        try {
            return fixed(number(0));
        } catch (const std::domain_error &e) {
            throw std::invalid_argument("scheme '" + spec + "': " + e.what());
        }
    }
    throw std::invalid_argument("unknown q_n scheme '" + spec +
                                "' (expected one_minus_inv[:c], one_minus_inv_sqrt or fixed:q)");
}

double QnScheme::q(unsigned n) const
{
    switch (m_kind) {
    case Kind::one_minus_inv:
        return 1 - 1 / (n + m_param);
    case Kind::one_minus_inv_sqrt:
        return 1 - 1 / std::sqrt(n + 1.0);
    case Kind::fixed:
        return m_param;
    }
    return m_param;
}

double QnScheme::limit_a() const
{
    switch (m_kind) {
    case Kind::one_minus_inv:
        return std::exp(-1.0);
    case Kind::one_minus_inv_sqrt:
        return 0;
    case Kind::fixed:
        break;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::string QnScheme::label() const
{
    char buf[64];
    switch (m_kind) {
    case Kind::one_minus_inv:
        std::snprintf(buf, sizeof buf, "one_minus_inv:%.17g", m_param);
        return buf;
    case Kind::one_minus_inv_sqrt:
        return "one_minus_inv_sqrt";
    case Kind::fixed:
        std::snprintf(buf, sizeof buf, "fixed:%.17g", m_param);
        return buf;
    }
    return "";
}

// --- sweeps -------------------------------------------------------------------

namespace
{

// Operator data for one n on one grid: weights per x (shared by every f) and
// cell integrals per f (shared by every x).
class Sweep
{
public:
    Sweep(const ExperimentConfig &cfg, unsigned n, const DomainGrid &grid)
        : m_q(cfg.scheme.q(n)), m_params(QContext(m_q, cfg.mu), n, cfg.alpha, cfg.beta), m_op(m_params, cfg.tol),
          m_threads(cfg.threads), m_grid(grid.clipped(cfg.domain_fraction * m_params.domain_limit())),
          m_clipped(m_grid.points() < grid.points())
    {
        m_x = m_grid.values();
        m_w.resize(m_x.size());
        parallel_for(m_x.size(), m_threads, [&](std::size_t i) { m_w[i] = m_op.weights(m_x[i]); });
        for (const auto &w : m_w) {
            m_kmax = std::max(m_kmax, w.w.size());
        }
    }

    unsigned n() const noexcept { return m_params.n(); }
    double q() const noexcept { return m_q; }
    const StancuParams &params() const noexcept { return m_params; }
    const std::vector<double> &x() const noexcept { return m_x; }
    const DomainGrid &grid() const noexcept { return m_grid; }
    bool clipped() const noexcept { return m_clipped; }

    std::vector<double> apply(const RealFunction &f) const
    {
        std::vector<double> cells(m_kmax);
        parallel_for(m_kmax, m_threads, [&](std::size_t k) { cells[k] = m_op.cell_integral(f, k); });
        std::vector<double> out(m_x.size());
        for (std::size_t i = 0; i < m_x.size(); ++i) {
            out[i] = m_op.combine(m_w[i], cells);
        }
        return out;
    }

    const std::vector<double> &moment(unsigned j) const
    {
        auto &slot = m_moments.at(j);
        if (!slot) {
            slot = apply([j](double t) { return std::pow(t, static_cast<double>(j)); });
        }
        return *slot;
    }

    // lambda_n(x) = T*((t-x)^2; x) from the series values of T*(t), T*(t^2).
    std::vector<double> lambda() const
    {
        const auto &t1 = moment(1);
        const auto &t2 = moment(2);
        std::vector<double> out(m_x.size());
        for (std::size_t i = 0; i < m_x.size(); ++i) {
            const double x = m_x[i];
            out[i] = std::max(t2[i] - 2 * x * t1[i] + x * x, 0.0);
        }
        return out;
    }

    double central1(std::size_t i) const { return central_moment_T1(m_x[i], m_params); }
    double phi(std::size_t i) const { return phi_n(m_x[i], m_params); }

private:
    double m_q;
    StancuParams m_params;
    KantorovichOperator m_op;
    unsigned m_threads;
    DomainGrid m_grid;
    bool m_clipped;
    std::vector<double> m_x;
    std::vector<WeightVector> m_w;
    std::size_t m_kmax = 0;
    mutable std::array<std::optional<std::vector<double>>, 5> m_moments;
};

RealFunction as_real(const TestFunction &f)
{
    return [f](double t) { return f(t); };
}

std::vector<double> as_reals(const std::vector<unsigned> &v)
{
    return {v.begin(), v.end()};
}

ExperimentReport start(const std::string &name, bool bound, const ExperimentConfig &cfg, const TestFunction *f)
{
    if (cfg.n_list.empty()) {
        throw std::invalid_argument(name + ": n_list is empty");
    }
    if (!(cfg.domain_fraction > 0 && cfg.domain_fraction < 1)) {
        throw std::invalid_argument(name + ": domain_fraction must lie in (0,1)");
    }
    ExperimentReport r;
    r.name = name;
    r.bound_experiment = bound;
    r.config = {
        {"experiment", name},
        {"scheme", cfg.scheme.label()},
        {"scheme_limit_a", cfg.scheme.limit_a()},
        {"n_list", as_reals(cfg.n_list)},
        {"mu", cfg.mu},
        {"alpha", cfg.alpha},
        {"beta", cfg.beta},
        {"grid", cfg.grid.label()},
        {"weighted_grid", cfg.weighted_grid.label()},
        {"tol", cfg.tol},
        {"domain_fraction", cfg.domain_fraction},
        {"modulus_refine", static_cast<std::int64_t>(cfg.modulus_refine)},
    };
    if (f != nullptr) {
        r.config.emplace_back("function", f->label());
        r.config.emplace_back("function_nondecreasing", f->metadata().nondecreasing);
    }
    return r;
}

// Domain bookkeeping shared by every experiment.
struct DomainLog {
    std::vector<double> x_limit;
    std::vector<double> x_eval_max;
    bool clipped = false;

    void add(const Sweep &s)
    {
        x_limit.push_back(s.params().domain_limit());
        x_eval_max.push_back(s.grid().x_max());
        clipped = clipped || s.clipped();
    }

    void write(ExperimentReport &r) const
    {
        r.config.emplace_back("x_limit", x_limit);
        r.config.emplace_back("x_eval_max", x_eval_max);
        r.config.emplace_back("domain_clipped", clipped);
    }
};

// Grid for moduli on the large side of a bound: covers the operator grid and
// the whole convergence domain, `refine` times finer.
DomainGrid modulus_grid(const ExperimentConfig &cfg, const Sweep &s)
{
    const double top = std::max(cfg.grid.x_max(), s.params().domain_limit());
    return DomainGrid(cfg.grid.x_min(), top, cfg.grid.points()).refined(cfg.modulus_refine);
}

// Constant relative to the first n: max/min of the finite positive entries
// (1 when all entries vanish).
double stability(const std::vector<double> &v)
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0;
    bool any = false;
    for (double c : v) {
        if (!std::isfinite(c)) {
            return std::numeric_limits<double>::infinity();
        }
        if (c > 0) {
            lo = std::min(lo, c);
            hi = std::max(hi, c);
            any = true;
        }
    }
    if (!any) {
        return 1;
    }
    return hi / lo;
}

void add_trend(ExperimentReport &r, const std::string &quantity, const std::vector<double> &seq, bool required,
               bool &trend_ok)
{
    const double decrease = seq.front() > 0 ? 1 - seq.back() / seq.front() : 0;
    bool monotone = true;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        monotone = monotone && seq[i] <= 1.1 * seq[i - 1];
    }
    r.summary.extra.emplace_back(quantity + "_sequence", seq);
    r.summary.extra.emplace_back(quantity + "_relative_decrease", decrease);
    r.summary.extra.emplace_back(quantity + "_monotone", monotone);
    if (required) {
        trend_ok = trend_ok && monotone;
    }
}

} // namespace

// --- experiments ----------------------------------------------------------------

ExperimentReport korovkin_run(const ExperimentConfig &cfg)
{
    ExperimentReport r = start("korovkin", true, cfg, nullptr);
    if (!std::is_sorted(cfg.n_list.begin(), cfg.n_list.end())) {
        throw std::invalid_argument("korovkin: n_list must be increasing");
    }
    DomainLog dom;
    std::vector<double> e0, e1, e2, w2, ws;
    for (unsigned n : cfg.n_list) {
        const Sweep s(cfg, n, cfg.grid);
        dom.add(s);
        const auto &t0 = s.moment(0);
        const auto &t1 = s.moment(1);
        const auto &t2 = s.moment(2);
        double l0 = 0, l1 = 0, l2 = 0, r1 = 0, r2 = 0;
        for (std::size_t i = 0; i < s.x().size(); ++i) {
            const double x = s.x()[i];
            const double c1 = std::abs(s.central1(i));
            l0 = std::max(l0, std::abs(t0[i] - 1));
            l1 = std::max(l1, std::abs(t1[i] - x));
            l2 = std::max(l2, std::abs(t2[i] - x * x));
            r1 = std::max(r1, c1 + 1e-9 * (1 + x));
            // T*(t^2) - x^2 = lambda_n + 2x T*(t-x)
            r2 = std::max(r2, s.phi(i) + 2 * x * c1);
        }
        r.add(n, s.q(), std::nullopt, "t^0_sup_err", l0, 1e-10);
        r.add(n, s.q(), std::nullopt, "t^1_sup_err", l1, r1);
        r.add(n, s.q(), std::nullopt, "t^2_sup_err", l2, r2);

        const Sweep sw(cfg, n, cfg.weighted_grid);
        const auto &u2 = sw.moment(2);
        const auto us = sw.apply([](double t) { return std::sin(t); });
        double lw2 = 0, rw2 = 0, lws = 0, rws = 0;
        for (std::size_t i = 0; i < sw.x().size(); ++i) {
            const double x = sw.x()[i];
            const double rho = 1 + x * x;
            const double c1 = std::abs(sw.central1(i));
            lw2 = std::max(lw2, std::abs(u2[i] - x * x) / rho);
            rw2 = std::max(rw2, (sw.phi(i) + 2 * x * c1) / rho);
            // sine has sup |g'| = sup |g''| = 1
            lws = std::max(lws, std::abs(us[i] - std::sin(x)) / rho);
            rws = std::max(rws, (c1 + sw.phi(i) / 2) / rho);
        }
        r.add(n, sw.q(), std::nullopt, "rho_t^2_err", lw2, rw2);
        r.add(n, sw.q(), std::nullopt, "rho_sine_err", lws, rws);
        e0.push_back(l0);
        e1.push_back(l1);
        e2.push_back(l2);
        w2.push_back(lw2);
        ws.push_back(lws);
    }
    dom.write(r);
    r.finalize();
    bool trend_ok = true;
    add_trend(r, "t^1_sup_err", e1, true, trend_ok);
    add_trend(r, "t^2_sup_err", e2, true, trend_ok);
    add_trend(r, "rho_t^2_err", w2, false, trend_ok);
    add_trend(r, "rho_sine_err", ws, false, trend_ok);
    r.summary.extra.emplace_back("trend_ok", trend_ok);
    r.summary.all_pass = r.summary.all_pass && trend_ok;
    return r;
}

ExperimentReport rate_bound_modulus(const TestFunction &f, const ExperimentConfig &cfg)
{
    if (!f.metadata().uniformly_continuous) {
        throw std::invalid_argument("modulus: " + f.label() + " is not known to be uniformly continuous");
    }
    ExperimentReport r = start("modulus", true, cfg, &f);
    DomainLog dom;
    const RealFunction fr = as_real(f);
    std::vector<double> omegas;
    for (unsigned n : cfg.n_list) {
        const Sweep s(cfg, n, cfg.grid);
        dom.add(s);
        const double omega = modulus(fr, 1 / std::sqrt(s.params().bracket_n()), modulus_grid(cfg, s));
        omegas.push_back(omega);
        const auto tf = s.apply(fr);
        for (std::size_t i = 0; i < s.x().size(); ++i) {
            const double x = s.x()[i];
            r.add(n, s.q(), x, "abs_err", std::abs(tf[i] - f(x)), (1 + std::sqrt(std::max(s.phi(i), 0.0))) * omega);
        }
    }
    dom.write(r);
    r.finalize();
    r.summary.extra.emplace_back("omega", omegas);
    return r;
}

ExperimentReport rate_bound_lipschitz(const TestFunction &f, const ExperimentConfig &cfg)
{
    const auto lip = f.metadata().lipschitz;
    if (!lip) {
        throw std::invalid_argument("lipschitz: " + f.label() + " has no known Lipschitz class");
    }
    ExperimentReport r = start("lipschitz", true, cfg, &f);
    r.config.emplace_back("lipschitz_nu", lip->nu);
    r.config.emplace_back("lipschitz_M", lip->M);
    DomainLog dom;
    const RealFunction fr = as_real(f);
    for (unsigned n : cfg.n_list) {
        const Sweep s(cfg, n, cfg.grid);
        dom.add(s);
        const auto tf = s.apply(fr);
        const auto lam = s.lambda();
        for (std::size_t i = 0; i < s.x().size(); ++i) {
            const double x = s.x()[i];
            r.add(n, s.q(), x, "abs_err", std::abs(tf[i] - f(x)), lip->M * std::pow(lam[i], lip->nu / 2));
            r.add(n, s.q(), x, "lambda_le_phi", lam[i], s.phi(i));
        }
    }
    dom.write(r);
    r.finalize();
    r.summary.extra.emplace_back("lipschitz_estimate", lipschitz_estimate(fr, lip->nu, cfg.grid.refined(5)));
    return r;
}

ExperimentReport rate_bound_smooth(const TestFunction &g, const ExperimentConfig &cfg)
{
    const auto norms = g.metadata().cb2_norms;
    if (!norms) {
        throw std::invalid_argument("smooth: " + g.label() + " is not known to lie in C_B^2");
    }
    const double norm = (*norms)[0] + (*norms)[1] + (*norms)[2];
    ExperimentReport r = start("smooth", true, cfg, &g);
    r.config.emplace_back("cb2_norm", norm);
    DomainLog dom;
    const RealFunction gr = as_real(g);
    for (unsigned n : cfg.n_list) {
        const Sweep s(cfg, n, cfg.grid);
        dom.add(s);
        const auto tg = s.apply(gr);
        for (std::size_t i = 0; i < s.x().size(); ++i) {
            const double x = s.x()[i];
            r.add(n, s.q(), x, "abs_err", std::abs(tg[i] - g(x)),
                  (std::abs(s.central1(i)) + s.phi(i) / 2) * norm);
        }
    }
    dom.write(r);
    r.finalize();
    return r;
}

ExperimentReport rate_bound_second_order(const TestFunction &f, const ExperimentConfig &cfg)
{
    // The estimate is stated for bounded f. Unbounded but uniformly continuous f
    // are accepted with ||f|| taken over the modulus grid, and flagged.
    if (!f.metadata().bounded && !f.metadata().uniformly_continuous) {
        throw std::invalid_argument("second_order: " + f.label() + " is neither bounded nor uniformly continuous");
    }
    ExperimentReport r = start("second_order", false, cfg, &f);
    r.config.emplace_back("function_bounded", f.metadata().bounded);
    DomainLog dom;
    const RealFunction fr = as_real(f);
    std::vector<double> m_star;
    for (unsigned n : cfg.n_list) {
        const Sweep s(cfg, n, cfg.grid);
        dom.add(s);
        const DomainGrid mg = modulus_grid(cfg, s);
        double sup_f = 0;
        for (double t : mg.values()) {
            sup_f = std::max(sup_f, std::abs(f(t)));
        }
        const auto tf = s.apply(fr);
        const auto lam = s.lambda();
        std::vector<double> delta(s.x().size());
        double max_h = 0;
        for (std::size_t i = 0; i < delta.size(); ++i) {
            delta[i] = (2 * std::abs(s.central1(i)) + lam[i]) / 4;
            max_h = std::max(max_h, std::sqrt(delta[i]));
        }
        std::vector<double> profile = max_h > 0 ? modulus2_profile(fr, max_h, mg) : std::vector<double>{0};
        for (std::size_t j = 1; j < profile.size(); ++j) {
            profile[j] = std::max(profile[j], profile[j - 1]);
        }
        double best_ratio = -1, best_lhs = 0, best_rhs = 0;
        for (std::size_t i = 0; i < s.x().size(); ++i) {
            const double x = s.x()[i];
            const double h = std::sqrt(delta[i]);
            double w2 = 0;
            if (h > 0) {
                const auto j = std::min<std::size_t>(static_cast<std::size_t>(std::floor(h / mg.spacing())),
                                                     profile.size() - 1);
                w2 = profile[j];
                for (double t : mg.values()) {
                    w2 = std::max(w2, std::abs(f(t + 2 * h) - 2 * f(t + h) + f(t)));
                }
            }
            const double kernel = 2 * (w2 + std::min(1.0, delta[i]) * sup_f);
            const double lhs = std::abs(tf[i] - f(x));
            const ReportRow &row = r.add(n, s.q(), x, "M_ratio", lhs, kernel);
            if (row.ratio > best_ratio) {
                best_ratio = row.ratio;
                best_lhs = lhs;
                best_rhs = kernel;
            }
        }
        r.add(n, s.q(), std::nullopt, "M_star", best_lhs, best_rhs);
        m_star.push_back(best_ratio);
    }
    dom.write(r);
    r.finalize();
    const double stab = stability(m_star);
    r.summary.extra.emplace_back("M_star", m_star);
    r.summary.extra.emplace_back("stability", stab);
    r.summary.extra.emplace_back("stable", stab <= 2);
    return r;
}

ExperimentReport rate_bound_weighted(const TestFunction &f, const ExperimentConfig &cfg)
{
    if (!f.metadata().weight_bound) {
        throw std::invalid_argument("weighted: " + f.label() + " is not known to satisfy |f| <= M (1 + x^2)");
    }
    ExperimentReport r = start("weighted", false, cfg, &f);
    DomainLog dom;
    const RealFunction fr = as_real(f);
    std::vector<double> c_star;
    for (unsigned n : cfg.n_list) {
        const Sweep s(cfg, n, cfg.weighted_grid);
        dom.add(s);
        const double bn = s.params().bracket_n();
        const double kernel = (1 + 1 / bn) * weighted_modulus(fr, 1 / std::sqrt(bn), cfg.weighted_grid.refined(cfg.modulus_refine));
        const auto tf = s.apply(fr);
        double sup = 0;
        for (std::size_t i = 0; i < s.x().size(); ++i) {
            const double x = s.x()[i];
            const double e = std::abs(tf[i] - f(x)) / (1 + x * x);
            r.add(n, s.q(), x, "rho_err", e, kernel);
            sup = std::max(sup, e);
        }
        const ReportRow &row = r.add(n, s.q(), std::nullopt, "C_star", sup, kernel);
        c_star.push_back(row.ratio);
    }
    dom.write(r);
    r.finalize();
    const double stab = stability(c_star);
    bool nonincreasing = true;
    for (std::size_t i = 1; i < c_star.size(); ++i) {
        nonincreasing = nonincreasing && c_star[i] <= 1.2 * c_star[i - 1];
    }
    r.summary.extra.emplace_back("C_star", c_star);
    r.summary.extra.emplace_back("stability", stab);
    r.summary.extra.emplace_back("stable", stab <= 2);
    // non-increasing along n_list up to 20%
    r.summary.extra.emplace_back("nonincreasing", nonincreasing);
    return r;
}

bool is_estimate_experiment(const std::string &name)
{
    return name == "second_order" || name == "weighted";
}

ExperimentReport run_experiment(const std::string &name, const TestFunction &f, const ExperimentConfig &cfg)
{
    if (name == "korovkin") {
        return korovkin_run(cfg);
    }
    if (name == "modulus") {
        return rate_bound_modulus(f, cfg);
    }
    if (name == "lipschitz") {
        return rate_bound_lipschitz(f, cfg);
    }
    if (name == "smooth") {
        return rate_bound_smooth(f, cfg);
    }
    if (name == "second_order") {
        return rate_bound_second_order(f, cfg);
    }
    if (name == "weighted") {
        return rate_bound_weighted(f, cfg);
    }
    throw std::invalid_argument("unknown experiment '" + name +
                                "' (expected korovkin, modulus, lipschitz, smooth, second_order or weighted)");
}

} // namespace qdunkl
