#ifndef QDUNKL_OPERATORS_HPP
#define QDUNKL_OPERATORS_HPP

#include <cmath>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include <qdunkl/dunkl.hpp>
#include <qdunkl/qcore.hpp>
#include <qdunkl/qintegral.hpp>

namespace qdunkl
{

// Operator parameters (n, alpha, beta) on top of a QContext.
class StancuParams
{
public:
    StancuParams(const QContext &ctx, unsigned n, double alpha = 0, double beta = 0);

    const QContext &context() const noexcept { return m_ctx; }
    double q() const noexcept { return m_ctx.q(); }
    double mu() const noexcept { return m_ctx.mu(); }
    unsigned n() const noexcept { return m_n; }
    double alpha() const noexcept { return m_alpha; }
    double beta() const noexcept { return m_beta; }
    // [n]_q
    double bracket_n() const noexcept { return m_bracket_n; }

    // alpha > beta: outside the customary 0 <= alpha <= beta.
    bool alpha_warning() const noexcept { return m_alpha > m_beta; }

    // t -> (n t + alpha) / (n + beta)
    double shift(double t) const noexcept { return (m_n * t + m_alpha) / (m_n + m_beta); }

    // The weights involve e_{mu,q}([n]_q x), whose series only converges for
    // [n]_q x < 1/(1-q). The operators therefore exist for 0 <= x < 1/(1-q^n).
    double domain_limit() const noexcept { return 1 / (1 - std::pow(m_ctx.q(), static_cast<double>(m_n))); }
    bool in_domain(double x) const noexcept { return x >= 0 && x < domain_limit(); }

private:
    QContext m_ctx;
    unsigned m_n;
    double m_alpha;
    double m_beta;
    double m_bracket_n;
};

// Normalised weights ([n]_q x)^k / (gamma_{mu,q}(k) e_{mu,q}([n]_q x)), k = 0..K.
struct WeightVector {
    double x = 0;
    std::vector<double> w;
    // Bound on the omitted mass sum_{k>K} w_k.
    double tail_mass = 0;

    std::size_t truncation_index() const noexcept { return w.empty() ? 0 : w.size() - 1; }
};

// The Dunkl-Szasz operator D_{n,q} and its Stancu-Kantorovich modification T*_{n,q}.
//
//   D(f; x) = sum_k w_k f([k + 2 mu theta_k]_q / [n]_q)
//   T(f; x) = [n]_q sum_k w_k  int_{cell k} f((n t + alpha)/(n + beta)) d_q t
//
// Weights and cell integrals are separate so a sweep can reuse both: the
// weights depend on x only, the cell integrals on f only.
//
// All const members are safe to call concurrently.
class KantorovichOperator
{
public:
    explicit KantorovichOperator(const StancuParams &params, double tol = default_tol);

    const StancuParams &params() const noexcept { return m_params; }
    double tol() const noexcept { return m_tol; }

    // Truncation: smallest K whose tail bound is below tol and whose last five
    // weights are each below tol. domain_error outside [0, domain_limit()).
    WeightVector weights(double x) const;

    QCell cell(std::size_t k) const { return QCell::make(k, m_params.context(), m_params.n()); }

    // int_{cell k} f(shift(t)) d_q t for k = 0..count-1.
    template <typename F>
    std::vector<double> cell_integrals(const F &f, std::size_t count) const
    {
        std::vector<double> out(count);
        for (std::size_t k = 0; k < count; ++k) {
            out[k] = cell_integral(f, k);
        }
        return out;
    }

    template <typename F>
    double cell_integral(const F &f, std::size_t k) const
    {
        const QCell c = cell(k);
        auto g = [&](double t) { return f(m_params.shift(t)); };
        return jackson_integral(g, c, m_tol);
    }

    // [n]_q sum_k w_k cells[k]; cells must cover the truncation index.
    double combine(const WeightVector &w, std::span<const double> cells) const;

    template <typename F>
    double apply(const F &f, double x) const
    {
        const WeightVector w = weights(x);
        const std::vector<double> cells = cell_integrals(f, w.w.size());
        return combine(w, cells);
    }

    // D_{n,q}(f; x), nodes [k + 2 mu theta_k]_q / [n]_q.
    template <typename F>
    double apply_dunkl(const F &f, double x) const
    {
        const WeightVector w = weights(x);
        long double s = 0;
        for (std::size_t k = 0; k < w.w.size(); ++k) {
            s += static_cast<long double>(w.w[k]) * f(node(k) / m_params.bracket_n());
        }
        return static_cast<double>(s);
    }

    // sum_k w_k [k + 2 mu theta_k]_q^j / [n]_q^j, the weighted sums behind the
    // moments of both operators (and D(t^j; x) itself).
    double weighted_node_power(unsigned j, const WeightVector &w) const;

    // e_{mu,q}(c [n]_q x) / e_{mu,q}([n]_q x)
    double e_ratio(double c, double x) const;

    double node(std::size_t k) const noexcept { return dunkl_bracket(k, m_params.context()); }

    // Current shared gamma table, at least `capacity` entries.
    std::shared_ptr<const GammaTable> table(std::size_t capacity) const;

private:
    StancuParams m_params;
    double m_tol;
    mutable std::mutex m_mutex;
    mutable std::shared_ptr<const GammaTable> m_table;
};

// Free-function forms.
WeightVector weights(double x, const StancuParams &params, double tol = default_tol);

template <typename F>
double eval_T(const F &f, double x, const StancuParams &params, double tol = default_tol)
{
    return KantorovichOperator(params, tol).apply(f, x);
}

template <typename F>
double eval_D(const F &f, double x, const QContext &ctx, unsigned n, double tol = default_tol)
{
    return KantorovichOperator(StancuParams(ctx, n), tol).apply_dunkl(f, x);
}

} // namespace qdunkl

#endif
