#include <qdunkl/operators.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <qdunkl/errors.hpp>

namespace qdunkl
{

namespace
{

constexpr std::size_t max_weights = 5'000'000;
constexpr std::size_t sub_tol_run = 5;

} // namespace

StancuParams::StancuParams(const QContext &ctx, unsigned n, double alpha, double beta)
    : m_ctx(ctx), m_n(n), m_alpha(alpha), m_beta(beta), m_bracket_n(0)
{
    if (n == 0) {
        throw domain_error("StancuParams: n must be >= 1");
    }
    if (!(alpha >= 0)) {
        throw domain_error("StancuParams: alpha must be >= 0");
    }
    if (!(beta >= 0)) {
        throw domain_error("StancuParams: beta must be >= 0");
    }
    m_bracket_n = q_number(static_cast<double>(n), ctx.q());
}

KantorovichOperator::KantorovichOperator(const StancuParams &params, double tol)
    : m_params(params), m_tol(tol), m_table(std::make_shared<const GammaTable>(params.context(), 256))
{
    if (!(tol > 0 && tol < 1)) {
        throw domain_error("KantorovichOperator: tol must lie in (0,1)");
    }
}

std::shared_ptr<const GammaTable> KantorovichOperator::table(std::size_t capacity) const
{
    std::lock_guard<std::mutex> lock(m_mutex);
    if (m_table->capacity() < capacity) {
        m_table = std::make_shared<const GammaTable>(m_table->extended(capacity));
    }
    return m_table;
}

WeightVector KantorovichOperator::weights(double x) const
{
    if (!(x >= 0)) {
        throw domain_error("weights: x must be >= 0");
    }
    if (!(x < m_params.domain_limit())) {
        throw domain_error("weights: x = " + std::to_string(x) + " is outside the convergence domain [0, " +
                           std::to_string(m_params.domain_limit()) + ") of e_{mu,q}([n]_q x)");
    }
    WeightVector out;
    out.x = x;
    if (x == 0) {
        out.w = {1.0};
        return out;
    }
    const QContext &ctx = m_params.context();
    const double z = m_params.bracket_n() * x;
    const double lz = std::log(z);
    const double shift = std::min(0.0, 2 * ctx.mu());

    // log of the unnormalised terms z^k / gamma(k), with a running log-sum
    std::vector<double> lt{0.0};
    double ref = 0;
    double scaled = 1;
    std::size_t run = 0;
    double tail = 0;
    auto tab = table(256);
    for (std::size_t k = 0;; ++k) {
        if (k + 1 >= max_weights) {
            throw convergence_error("weights: no truncation within term budget at x=" + std::to_string(x));
        }
        const double rel = std::exp(lt[k] - ref) / scaled;
        run = rel < m_tol ? run + 1 : 0;
        // every later term ratio z / [j + 2 mu theta_j]_q is below rho
        const double rho = z / q_number(static_cast<double>(k + 1) + shift, ctx.q());
        if (rho < 1 && run >= sub_tol_run) {
            tail = rel * rho / (1 - rho);
            if (tail < m_tol) {
                break;
            }
        }
        if (k + 1 > tab->capacity()) {
            tab = table(2 * (k + 1));
        }
        const double next = lt[k] + lz - tab->log_node(k + 1);
        lt.push_back(next);
        if (next > ref) {
            scaled = scaled * std::exp(ref - next) + 1;
            ref = next;
        } else {
            scaled += std::exp(next - ref);
        }
    }
    const double log_norm = ref + std::log(scaled);
    out.w.resize(lt.size());
    for (std::size_t k = 0; k < lt.size(); ++k) {
        out.w[k] = std::exp(lt[k] - log_norm);
    }
    out.tail_mass = tail;
    return out;
}

double KantorovichOperator::combine(const WeightVector &w, std::span<const double> cells) const
{
    if (cells.size() < w.w.size()) {
        throw domain_error("combine: " + std::to_string(cells.size()) + " cell integrals for " +
                           std::to_string(w.w.size()) + " weights");
    }
    long double s = 0;
    for (std::size_t k = 0; k < w.w.size(); ++k) {
        s += static_cast<long double>(w.w[k]) * cells[k];
    }
    return static_cast<double>(s * m_params.bracket_n());
}

double KantorovichOperator::weighted_node_power(unsigned j, const WeightVector &w) const
{
    const double bn = m_params.bracket_n();
    long double s = 0;
    for (std::size_t k = 0; k < w.w.size(); ++k) {
        s += static_cast<long double>(w.w[k]) * std::pow(node(k) / bn, static_cast<double>(j));
    }
    return static_cast<double>(s);
}

double KantorovichOperator::e_ratio(double c, double x) const
{
    if (x == 0) {
        return 1;
    }
    GammaTable local = *table(256);
    return e_mu_q_ratio(c, m_params.bracket_n() * x, local, m_tol);
}

WeightVector weights(double x, const StancuParams &params, double tol)
{
    return KantorovichOperator(params, tol).weights(x);
}

} // namespace qdunkl
