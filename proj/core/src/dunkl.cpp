#include <qdunkl/dunkl.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <qdunkl/errors.hpp>

namespace qdunkl
{

namespace
{

constexpr std::size_t max_terms = 5'000'000;

struct LogSum {
    double log_value = 0;
    std::size_t terms = 0;
    // Tail bound relative to the value.
    double rel_tail = 0;
};

// Sums exp(lt_k) where lt_k - lt_{k-1} = step(k) (k >= 1, lt_0 = 0) in scaled
// form. rho(k) bounds every later term ratio t_{j+1}/t_j, j >= k.
template <typename Step, typename Rho>
LogSum log_series(Step step, Rho rho, GammaTable &table, double tol, const char *what)
{
    double lt = 0;
    double ref = 0;
    double scaled = 1;
    for (std::size_t k = 0; k < max_terms; ++k) {
        const double r = rho(k);
        if (r < 1) {
            const double rel_term = std::exp(lt - ref) / scaled;
            const double rel_tail = rel_term * r / (1 - r);
            if (rel_tail <= tol) {
                return {ref + std::log(scaled), k + 1, rel_tail};
            }
        }
        if (k + 1 > table.capacity()) {
            table = table.extended(k + 1);
        }
        lt += step(k + 1);
        if (lt > ref) {
            scaled = scaled * std::exp(ref - lt) + 1;
            ref = lt;
        } else {
            scaled += std::exp(lt - ref);
        }
    }
    throw convergence_error(std::string(what) + ": no convergence within term budget");
}

// Smallest node [j + 2 mu theta_j]_q over j > k.
double min_node_after(std::size_t k, const QContext &ctx)
{
    return q_number(static_cast<double>(k + 1) + std::min(0.0, 2 * ctx.mu()), ctx.q());
}

void check_radius(double x, const QContext &ctx, const char *what)
{
    if (!(x >= 0)) {
        throw domain_error(std::string(what) + ": argument must be >= 0");
    }
    if (!(x * (1 - ctx.q()) < 1)) {
        throw domain_error(std::string(what) + ": argument " + std::to_string(x) +
                           " is outside the radius of convergence 1/(1-q) = " + std::to_string(1 / (1 - ctx.q())));
    }
}

} // namespace

double dunkl_bracket(std::size_t k, const QContext &ctx) noexcept
{
    return q_number(static_cast<double>(k) + 2 * ctx.mu() * theta(k), ctx.q());
}

GammaTable::GammaTable(const QContext &ctx, std::size_t capacity) : m_ctx(ctx)
{
    m_gamma.push_back(1);
    m_log_gamma.push_back(0);
    m_node.push_back(0);
    m_log_node.push_back(-std::numeric_limits<double>::infinity());
    grow_to(capacity);
}

GammaTable::GammaTable(const GammaTable &base, std::size_t capacity) : GammaTable(base)
{
    grow_to(capacity);
}

void GammaTable::grow_to(std::size_t capacity)
{
    m_gamma.reserve(capacity + 1);
    m_log_gamma.reserve(capacity + 1);
    m_node.reserve(capacity + 1);
    m_log_node.reserve(capacity + 1);
    for (std::size_t k = m_gamma.size(); k <= capacity; ++k) {
        const double a = dunkl_bracket(k, m_ctx);
        m_node.push_back(a);
        m_log_node.push_back(std::log(a));
        m_gamma.push_back(m_gamma.back() * a);
        m_log_gamma.push_back(m_log_gamma.back() + m_log_node.back());
    }
}

GammaTable GammaTable::extended(std::size_t min_capacity) const
{
    if (min_capacity <= capacity()) {
        return *this;
    }
    return GammaTable(*this, std::max(min_capacity, 2 * capacity()));
}

double gamma_q(std::size_t k, GammaTable &table)
{
    if (k > table.capacity()) {
        table = table.extended(k);
    }
    const double v = table.value(k);
    if (!std::isfinite(v)) {
        throw overflow_error("gamma_q: gamma_{mu,q}(" + std::to_string(k) + ") exceeds the double range");
    }
    return v;
}

double gamma_q_explicit(std::size_t k, const QContext &ctx)
{
    const double q = ctx.q();
    const double q2 = q * q;
    const double odd = q_pochhammer(std::pow(q, 2 * ctx.mu() + 1), (k + 1) / 2, q2).value;
    const double even = q_pochhammer(q2, k / 2, q2).value;
    return odd * even / std::pow(1 - q, static_cast<double>(k));
}

double gamma_classical(std::size_t k, double mu)
{
    double g = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        g *= static_cast<double>(j) + 2 * mu * theta(j);
    }
    return g;
}

double gamma_classical_closed(std::size_t k, double mu)
{
    const std::size_t m = k / 2;
    const double md = static_cast<double>(m);
    const double shift = (k % 2 == 0) ? 0.5 : 1.5;
    const double log_g = static_cast<double>(k) * std::log(2.0) + std::lgamma(md + 1) + std::lgamma(md + mu + shift) -
                         std::lgamma(mu + 0.5);
    return std::exp(log_g);
}

SeriesValue log_e_mu_q(double x, GammaTable &table, double tol)
{
    const QContext &ctx = table.context();
    check_radius(x, ctx, "e_mu_q");
    if (x == 0) {
        return {0, 1, 0};
    }
    const double lx = std::log(x);
    const LogSum s = log_series([&](std::size_t k) { return lx - table.log_node(k); },
                                [&](std::size_t k) { return x / min_node_after(k, ctx); }, table, tol, "e_mu_q");
    return {s.log_value, s.terms, s.rel_tail};
}

SeriesValue e_mu_q(double x, GammaTable &table, double tol)
{
    const SeriesValue lg = log_e_mu_q(x, table, tol);
    const double v = std::exp(lg.value);
    if (!std::isfinite(v)) {
        throw overflow_error("e_mu_q: value at x=" + std::to_string(x) + " exceeds the double range");
    }
    return {v, lg.terms, lg.tail_bound * v};
}

SeriesValue E_mu_q(double x, GammaTable &table, double tol)
{
    const QContext &ctx = table.context();
    if (!(x >= 0)) {
        throw domain_error("E_mu_q: argument must be >= 0");
    }
    if (x == 0) {
        return {1, 1, 0};
    }
    const double lx = std::log(x);
    const double lq = std::log(ctx.q());
    const LogSum s = log_series(
        [&](std::size_t k) { return static_cast<double>(k - 1) * lq + lx - table.log_node(k); },
        [&](std::size_t k) { return std::exp(static_cast<double>(k) * lq) * x / min_node_after(k, ctx); }, table, tol,
        "E_mu_q");
    const double v = std::exp(s.log_value);
    if (!std::isfinite(v)) {
        throw overflow_error("E_mu_q: value at x=" + std::to_string(x) + " exceeds the double range");
    }
    return {v, s.terms, s.rel_tail * v};
}

double e_mu_q_ratio(double c, double x, GammaTable &table, double tol)
{
    if (!(c >= 0 && c <= 1)) {
        throw domain_error("e_mu_q_ratio: scale must lie in [0,1]");
    }
    const double num = log_e_mu_q(c * x, table, tol).value;
    const double den = log_e_mu_q(x, table, tol).value;
    return std::exp(num - den);
}

} // namespace qdunkl
