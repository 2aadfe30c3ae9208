#include <qdunkl/verify.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include <qdunkl/dunkl.hpp>
#include <qdunkl/operators.hpp>
#include <qdunkl/parallel.hpp>
#include <qdunkl/qintegral.hpp>

namespace qdunkl
{

void VerifyResult::add(std::string property, std::string where, double error, double tolerance)
{
    VerifyCheck c;
    c.property = std::move(property);
    c.where = std::move(where);
    c.error = error;
    c.tolerance = tolerance;
    c.pass = error <= tolerance;
    checks.push_back(std::move(c));
}

bool VerifyResult::all_pass() const noexcept
{
    return failures() == 0;
}

std::size_t VerifyResult::failures() const noexcept
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto &c) { return !c.pass; }));
}

double VerifyResult::worst(const std::string &prefix) const
{
    double w = 0;
    for (const auto &c : checks) {
        if (c.property.rfind(prefix, 0) == 0) {
            const double r = c.tolerance > 0 ? c.error / c.tolerance : (c.error > 0 ? INFINITY : 0);
            w = std::max(w, std::isnan(r) ? INFINITY : r);
        }
    }
    return w;
}

bool VerifyResult::passed(const std::string &prefix) const
{
    return std::all_of(checks.begin(), checks.end(),
                       [&](const auto &c) { return c.property.rfind(prefix, 0) != 0 || c.pass; });
}

namespace
{

std::string fmt(const char *pattern, double a, double b = 0, double c = 0, double d = 0, double e = 0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d, e);
    return buf;
}

double rel_err(double v, double ref)
{
    return std::abs(v - ref) / std::max(std::abs(ref), 1e-300);
}

// Violation of lower <= v <= upper (0 when inside).
double violation(double v, const MomentBounds &b)
{
    return std::max({0.0, b.lower - v, v - b.upper});
}

// Merges per-case results in case order.
void merge(VerifyResult &into, std::vector<VerifyResult> &parts)
{
    for (auto &p : parts) {
        into.checks.insert(into.checks.end(), p.checks.begin(), p.checks.end());
        into.warnings.insert(into.warnings.end(), p.warnings.begin(), p.warnings.end());
    }
}

} // namespace

VerifyResult verify_gamma(const VerifyOptions &opts)
{
    VerifyResult res;
    res.suite = "gamma";
    const auto qs = opts.q_list.value_or(std::vector<double>{0.3, 0.5, 0.9});
    const auto mus = opts.mu_list.value_or(std::vector<double>{0.75, 1, 2});
    for (double q : qs) {
        for (double mu : mus) {
            const QContext ctx(q, mu);
            const std::string where = fmt("q=%g mu=%g", q, mu);
            GammaTable table(ctx, 64);
            // printed special cases gamma(0..4)
            const double g1 = (1 - std::pow(q, 2 * mu + 1)) / (1 - q);
            const double f2 = (1 - q * q) / (1 - q);
            const double f3 = (1 - std::pow(q, 2 * mu + 3)) / (1 - q);
            const double f4 = (1 - std::pow(q, 4)) / (1 - q);
            const double printed[5] = {1, g1, g1 * f2, g1 * f2 * f3, g1 * f2 * f3 * f4};
            double err = 0;
            for (std::size_t k = 0; k < 5; ++k) {
                err = std::max(err, rel_err(gamma_q(k, table), printed[k]));
            }
            res.add("special_cases", where, err, 1e-12);
            err = 0;
            for (std::size_t k = 0; k <= 60; ++k) {
                const double ratio = std::exp(table.log_gamma(k + 1) - table.log_gamma(k));
                err = std::max(err, rel_err(ratio, q_bracket(k + 1 + 2 * mu * theta(k + 1), q)));
            }
            res.add("recursion_ratio", where, err, 1e-13);
            err = 0;
            for (std::size_t k = 0; k <= 30; ++k) {
                err = std::max(err, rel_err(gamma_q_explicit(k, ctx), gamma_q(k, table)));
            }
            res.add("explicit_formula", where, err, 1e-10);
        }
    }
    for (double mu : mus) {
        const std::string where = fmt("mu=%g", mu);
        const QContext ctx(1 - 1e-7, mu);
        GammaTable table(ctx, 32);
        double err = 0, cerr = 0;
        for (std::size_t k = 0; k <= 20; ++k) {
            err = std::max(err, rel_err(gamma_q(k, table), gamma_classical(k, mu)));
            cerr = std::max(cerr, rel_err(gamma_classical_closed(k, mu), gamma_classical(k, mu)));
        }
        res.add("q_to_1_bridge", where, err, 1e-4);
        res.add("classical_closed_form", where, cerr, 1e-12);
    }
    // weights sum to one and reproduce x (the first node moment)
    for (double q : {0.5, 0.9}) {
        for (double mu : {0.75, 1.0}) {
            for (unsigned n : {5U, 20U}) {
                const StancuParams p(QContext(q, mu), n);
                const KantorovichOperator op(p, opts.tol);
                const DomainGrid g = opts.grid.clipped(opts.domain_fraction * p.domain_limit());
                double e0 = 0, e1 = 0;
                for (double x : g.values()) {
                    const WeightVector w = op.weights(x);
                    double s = 0;
                    for (double v : w.w) {
                        s += v;
                    }
                    e0 = std::max(e0, std::abs(s - 1));
                    e1 = std::max(e1, std::abs(op.weighted_node_power(1, w) - x));
                }
                const std::string where = fmt("q=%g mu=%g n=%g", q, mu, n);
                res.add("normalization", where, e0, 1e-12);
                res.add("first_node_moment", where, e1, 1e-9);
            }
        }
    }
    return res;
}

VerifyResult verify_integrals(const VerifyOptions &opts)
{
    VerifyResult res;
    res.suite = "integrals";
    const auto qs = opts.q_list.value_or(std::vector<double>{0.3, 0.5, 0.9});
    const auto mus = opts.mu_list.value_or(std::vector<double>{0.75, 1});
    const auto ns = opts.n_list.value_or(std::vector<unsigned>{1, 5, 20});
    for (double q : qs) {
        for (double mu : mus) {
            const QContext ctx(q, mu);
            for (unsigned n : ns) {
                double err = 0, neg = 0;
                for (std::size_t k = 0; k <= 30; ++k) {
                    const QCell cell = QCell::make(k, ctx, n);
                    for (unsigned p = 0; p <= 4; ++p) {
                        const double closed = monomial_cell_integral(p, cell);
                        const double numeric = jackson_integral(
                            [p](double t) { return std::pow(t, static_cast<double>(p)); }, cell, opts.tol * 1e-2);
                        err = std::max(err, std::abs(closed - numeric) / (1 + std::abs(closed)));
                    }
                    const double e = jackson_integral([](double t) { return std::exp(-t); }, cell, opts.tol);
                    const double a = jackson_integral([](double t) { return std::abs(t - 1); }, cell, opts.tol);
                    neg = std::max({neg, -e, -a});
                }
                const std::string where = fmt("q=%g mu=%g n=%g", q, mu, n);
                res.add("closed_form_vs_jackson", where, err, 1e-10);
                res.add("positivity", where, neg, 1e-15);
            }
        }
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> uq(0.05, 0.99), umu(-0.45, 3.0), u01(0.0, 1.0);
    std::uniform_int_distribution<unsigned> uk(0, 200), un(1, 200);
    double width = 0;
    double additivity = 0;
    for (int draw = 0; draw < 1000; ++draw) {
        const QContext ctx(uq(rng), umu(rng));
        const QCell cell = QCell::make(uk(rng), ctx, un(rng));
        width = std::max(width, std::abs((cell.upper - cell.lower) - 1 / cell.bracket_n));
        if (draw < 100) {
            const double a = 5 * u01(rng);
            const double b = a + (5 - a) * u01(rng);
            auto f = [](double t) { return std::sin(t) + t * t; };
            const double two_sided = jackson_integral(f, a, b, ctx.q(), opts.tol);
            const double diff = jackson_integral_zero(f, b, ctx.q(), opts.tol) - jackson_integral_zero(f, a, ctx.q(), opts.tol);
            additivity = std::max(additivity, std::abs(two_sided - diff));
        }
    }
    res.add("cell_width", fmt("1000 draws seed=%g", static_cast<double>(opts.seed)), width, 1e-13);
    res.add("additivity", fmt("100 draws seed=%g", static_cast<double>(opts.seed)), additivity, 1e-11);
    // reference values
    res.add("jackson_const", "a=0.7 q=0.5", std::abs(jackson_integral_zero([](double) { return 1.0; }, 0.7, 0.5, 1e-15) - 0.7),
            1e-12);
    res.add("jackson_t", "a=1 q=0.5",
            std::abs(jackson_integral_zero([](double t) { return t; }, 1, 0.5, 1e-15) - 1 / q_bracket(2, 0.5)), 1e-12);
    res.add("jackson_t2", "a=1 q=0.5",
            std::abs(jackson_integral_zero([](double t) { return t * t; }, 1, 0.5, 1e-15) - 1 / q_bracket(3, 0.5)), 1e-12);
    return res;
}

VerifyResult verify_moments(const VerifyOptions &opts)
{
    VerifyResult res;
    res.suite = "moments";
    const auto qs = opts.q_list.value_or(std::vector<double>{0.5, 0.9});
    const auto mus = opts.mu_list.value_or(std::vector<double>{0.75, 1});
    const auto ns = opts.n_list.value_or(std::vector<unsigned>{5, 20, 100});
    const auto as = opts.alpha_list.value_or(std::vector<double>{0, 1});
    const auto bs = opts.beta_list.value_or(std::vector<double>{0, 2});
    struct Case {
        double q, mu;
        unsigned n;
        double a, b;
    };
    std::vector<Case> cases;
    for (double q : qs) {
        for (double mu : mus) {
            for (unsigned n : ns) {
                for (double a : as) {
                    for (double b : bs) {
                        cases.push_back({q, mu, n, a, b});
                    }
                }
            }
        }
    }
    for (double mu : mus) {
        if (mu <= 0.5) {
            res.warnings.push_back(fmt("mu=%g: the operator is stated for mu > 1/2", mu));
        } else if (mu < 0.75) {
            // inside the stated range but below the validated matrix mu in {0.75, 1}
            res.warnings.push_back(fmt("mu=%g: close to the mu > 1/2 boundary, below the validated range mu >= 0.75", mu));
        }
        if (mu < 0) {
            res.warnings.push_back(fmt("mu=%g: the node-sum bounds assume mu >= 0", mu));
        }
    }
    const char *form = opts.form == BoundForm::printed ? "printed" : "composed";
    std::vector<VerifyResult> parts(cases.size());
    parallel_for(cases.size(), opts.threads, [&](std::size_t ci) {
        const Case &c = cases[ci];
        VerifyResult &out = parts[ci];
        const StancuParams p(QContext(c.q, c.mu), c.n, c.a, c.b);
        const KantorovichOperator op(p, opts.tol);
        const std::string where = fmt("q=%g mu=%g n=%g alpha=%g beta=%g", c.q, c.mu, c.n, c.a, c.b);
        const double limit = opts.domain_fraction * p.domain_limit();
        std::vector<double> xs;
        std::size_t outside = 0;
        for (double x : opts.grid.values()) {
            if (x < limit) {
                xs.push_back(x);
            } else {
                ++outside;
            }
        }
        if (opts.strict_domain) {
            out.add("domain", where + fmt(" x_limit=%.6g", p.domain_limit()), static_cast<double>(outside), 0);
        }
        std::vector<WeightVector> ws;
        std::size_t kmax = 0;
        for (double x : xs) {
            ws.push_back(op.weights(x));
            kmax = std::max(kmax, ws.back().w.size());
        }
        std::array<std::vector<double>, 5> cells;
        for (unsigned j = 0; j <= 4; ++j) {
            cells[j] = op.cell_integrals([j](double t) { return std::pow(t, static_cast<double>(j)); }, kmax);
        }
        double e_t0 = 0, e_t1 = 0, v_t2 = 0, v_t3l = 0, v_t3u = 0, v_t4 = 0, e_c1 = 0, v_c2 = 0, v_c4 = 0;
        double e_d0 = 0, e_d1 = 0, v_d2 = 0, v_d3 = 0, v_d4 = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double x = xs[i];
            const WeightVector &w = ws[i];
            double t[5];
            for (unsigned j = 0; j <= 4; ++j) {
                t[j] = op.combine(w, cells[j]);
            }
            e_t0 = std::max(e_t0, std::abs(t[0] - 1));
            e_t1 = std::max(e_t1, std::abs(t[1] - moment_T1(x, p)) / (1 + x));
            v_t2 = std::max(v_t2, violation(t[2], moment_T_bounds(2, x, op, opts.form)));
            const MomentBounds b3 = moment_T_bounds(3, x, op, opts.form);
            v_t3l = std::max(v_t3l, std::max(0.0, b3.lower - t[3]));
            v_t3u = std::max(v_t3u, std::max(0.0, t[3] - b3.upper));
            v_t4 = std::max(v_t4, std::max(0.0, t[4] - moment_T_bounds(4, x, op, opts.form).upper));
            e_c1 = std::max(e_c1, std::abs((t[1] - x * t[0]) - central_moment_T1(x, p)));
            const double lam2 = t[2] - 2 * x * t[1] + x * x * t[0];
            const double lam4 =
                t[4] - 4 * x * t[3] + 6 * x * x * t[2] - 4 * x * x * x * t[1] + x * x * x * x * t[0];
            v_c2 = std::max(v_c2, lam2 - central_moment_bound(2, x, op));
            v_c4 = std::max(v_c4, lam4 - central_moment_bound(4, x, op));
            double s = 0;
            for (double v : w.w) {
                s += v;
            }
            e_d0 = std::max(e_d0, std::abs(s - 1));
            e_d1 = std::max(e_d1, std::abs(op.weighted_node_power(1, w) - x));
            v_d2 = std::max(v_d2, violation(op.weighted_node_power(2, w), dunkl_moment_bounds(2, x, op)));
            v_d3 = std::max(v_d3, violation(op.weighted_node_power(3, w), dunkl_moment_bounds(3, x, op)));
            v_d4 = std::max(v_d4, violation(op.weighted_node_power(4, w), dunkl_moment_bounds(4, x, op)));
        }
        out.add("T1_partition_of_unity", where, e_t0, 1e-10);
        out.add("T2_first_moment", where, e_t1, 1e-9);
        out.add(std::string("T3_t2_bracket_") + form, where, v_t2, 1e-9);
        out.add(std::string("T4_t3_lower_") + form, where, v_t3l, 1e-9);
        out.add("T5_t3_upper_composed", where, v_t3u, 1e-9);
        out.add("T6_t4_upper_composed", where, v_t4, 1e-9);
        out.add("C1_central_first", where, e_c1, 1e-9);
        out.add("C2_central_second_phi", where, std::max(v_c2, 0.0), 1e-9);
        out.add("C4_central_fourth_composed", where, std::max(v_c4, 0.0), 1e-9);
        out.add("D1_unity", where, e_d0, 1e-9);
        out.add("D2_first", where, e_d1, 1e-9);
        out.add("D3_t2_bracket", where, v_d2, 1e-9);
        out.add("D4_t3_bracket", where, v_d3, 1e-9);
        out.add("D5_t4_upper", where, v_d4, 1e-9);
    });
    merge(res, parts);
    return res;
}

VerifyResult verify_moduli(const VerifyOptions &)
{
    VerifyResult res;
    res.suite = "moduli";
    const DomainGrid g4(0, 4, 401);
    const DomainGrid fine = g4.refined(10);
    auto one = [](double) { return 1.0; };
    auto id = [](double t) { return t; };
    auto sq = [](double t) { return t * t; };
    auto sn = [](double t) { return std::sin(t); };

    res.add("omega_constant", "delta=0.3", modulus(one, 0.3, g4), 0);
    res.add("omega_linear", "f=t delta=0.1", std::abs(modulus(id, 0.1, g4) - 0.1), 1e-12);
    const double w_coarse = modulus(sn, 0.5, g4);
    const double w_fine = modulus(sn, 0.5, fine);
    res.add("omega_sine_ceiling", "delta=0.5", std::max(0.0, w_fine - std::min(2.0, 0.5)), 1e-12);
    res.add("omega_sine_vs_fine_grid", "delta=0.5", std::abs(w_coarse - w_fine), 1e-4);
    double mono = 0, sub = 0;
    for (double d = 0.05; d < 1.0; d += 0.05) {
        mono = std::max(mono, modulus(sn, d, g4) - modulus(sn, d + 0.05, g4));
        sub = std::max(sub, modulus(sn, 2 * d, g4) - 2 * modulus(sn, d, g4));
    }
    res.add("omega_monotone", "f=sin", std::max(mono, 0.0), 0);
    res.add("omega_subadditive", "f=sin", std::max(sub, 0.0), 1e-9);
    {
        // |f(y) - f(x)| <= (|y-x|/delta + 1) omega(f, delta), all grid pairs
        const DomainGrid g(0, 4, 201);
        const double delta = 0.3;
        const double w = modulus(sn, delta, g);
        double v = 0;
        const auto xs = g.values();
        for (double a : xs) {
            for (double b : xs) {
                v = std::max(v, std::abs(std::sin(b) - std::sin(a)) - (std::abs(b - a) / delta + 1) * w);
            }
        }
        res.add("omega_pair_inequality", "f=sin delta=0.3", std::max(v, 0.0), 1e-9);
    }
    res.add("omega2_affine", "f=3t+1", modulus2([](double t) { return 3 * t + 1; }, 0.4, g4), 1e-12);
    res.add("omega2_square", "f=t^2 h=0.2", std::abs(modulus2(sq, 0.2, g4) - 0.08), 1e-12);
    res.add("omega2_sine_ceiling", "h=0.3", std::max(0.0, modulus2(sn, 0.3, g4) - 0.09), 1e-12);

    const DomainGrid g10(0, 10, 1001);
    res.add("Omega_constant", "delta=0.1", weighted_modulus(one, 0.1, g10), 0);
    {
        double oracle = 0;
        const DomainGrid dense = g10.refined(10);
        for (double x : g10.values()) {
            for (double h = 0; h <= 0.1 + 1e-15; h += dense.spacing()) {
                oracle = std::max(oracle, std::abs(2 * x * h + h * h) / ((1 + h * h) * (1 + x * x)));
            }
        }
        res.add("Omega_square", "delta=0.1 x_max=10", std::abs(weighted_modulus(sq, 0.1, g10) - oracle), 1e-3);
    }
    res.add("Omega_monotone", "f=t^2",
            std::max(0.0, weighted_modulus(sq, 0.05, g10) - weighted_modulus(sq, 0.1, g10)), 0);
    {
        // |f(t) - f(x)| <= 2 (1 + |t-x|/delta)(1 + delta^2)(1 + x^2)(1 + (t-x)^2) Omega(f, delta)
        const DomainGrid g(0, 10, 201);
        const double delta = 0.2;
        const double om = weighted_modulus(sq, delta, g);
        double v = 0;
        const auto xs = g.values();
        for (double x : xs) {
            for (double t : xs) {
                const double h = std::abs(t - x);
                const double rhs = 2 * (1 + h / delta) * (1 + delta * delta) * (1 + x * x) * (1 + h * h) * om;
                v = std::max(v, std::abs(t * t - x * x) - rhs);
            }
        }
        res.add("Omega_pair_inequality", "f=t^2 delta=0.2", std::max(v, 0.0), 1e-9);
    }
    const DomainGrid g1001(0, 4, 1001);
    res.add("lipschitz_linear", "f=t nu=1", std::abs(lipschitz_estimate(id, 1, g1001) - 1), 1e-9);
    res.add("lipschitz_cusp", "f=|t-0.5|^0.5 nu=0.5",
            std::abs(lipschitz_estimate([](double t) { return std::sqrt(std::abs(t - 0.5)); }, 0.5, g1001) - 1), 0.02);
    res.add("lipschitz_constant", "nu=0.5", lipschitz_estimate(one, 0.5, g1001), 0);
    return res;
}

VerifyResult verify_suite(const std::string &name, const VerifyOptions &opts)
{
    if (name == "gamma") {
        return verify_gamma(opts);
    }
    if (name == "integrals") {
        return verify_integrals(opts);
    }
    if (name == "moments") {
        return verify_moments(opts);
    }
    if (name == "moduli") {
        return verify_moduli(opts);
    }
    throw std::invalid_argument("unknown verify suite '" + name + "' (expected moments, integrals, gamma or moduli)");
}

} // namespace qdunkl
