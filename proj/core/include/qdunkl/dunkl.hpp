#ifndef QDUNKL_DUNKL_HPP
#define QDUNKL_DUNKL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <qdunkl/qcore.hpp>

namespace qdunkl
{

// Parity indicator: 0 for even k, 1 for odd k.
constexpr int theta(std::size_t k) noexcept { return static_cast<int>(k & 1U); }

// [k + 2 mu theta_k]_q. This is both the ratio gamma_{mu,q}(k)/gamma_{mu,q}(k-1)
// and, divided by [n]_q, the evaluation node of the Dunkl-Szasz operator.
double dunkl_bracket(std::size_t k, const QContext &ctx) noexcept;

// Cached gamma_{mu,q}(k), k = 0..capacity(), built from
//
//   gamma(0) = 1,  gamma(k+1) = [k + 1 + 2 mu theta_{k+1}]_q gamma(k).
//
// Values are kept both directly and as logarithms. gamma grows like
// (1-q)^{-k}, so the direct values overflow long before the series that use
// them stop needing terms; the series work from log_gamma.
//
// A table never changes after construction. extended() returns a new, larger
// table, so a table shared between threads is safe to read.
class GammaTable
{
public:
    explicit GammaTable(const QContext &ctx, std::size_t capacity = 64);

    const QContext &context() const noexcept { return m_ctx; }
    std::size_t capacity() const noexcept { return m_log_gamma.size() - 1; }

    // k <= capacity(); the direct value may be +inf past the double range.
    double value(std::size_t k) const { return m_gamma.at(k); }
    double log_gamma(std::size_t k) const { return m_log_gamma.at(k); }
    // dunkl_bracket(k)
    double node(std::size_t k) const { return m_node.at(k); }
    double log_node(std::size_t k) const { return m_log_node.at(k); }

    std::span<const double> values() const noexcept { return m_gamma; }

    // A table holding at least min_capacity entries; grows at least geometrically.
    GammaTable extended(std::size_t min_capacity) const;

private:
    GammaTable(const GammaTable &base, std::size_t capacity);
    void grow_to(std::size_t capacity);

    QContext m_ctx;
    std::vector<double> m_gamma;
    std::vector<double> m_log_gamma;
    std::vector<double> m_node;
    std::vector<double> m_log_node;
};

// gamma_{mu,q}(k). Replaces `table` with an extended copy when k is past its
// capacity. Throws overflow_error when the value leaves the double range.
double gamma_q(std::size_t k, GammaTable &table);

// Closed form gamma(n) = (q^{2mu+1}; q^2)_{floor((n+1)/2)} (q^2; q^2)_{floor(n/2)} / (1-q)^n.
// The usual statement of this formula repeats gamma(n) on the right-hand
// side; that factor is a misprint and is dropped here. Cross-check only.
double gamma_q_explicit(std::size_t k, const QContext &ctx);

// Classical (q = 1) Dunkl coefficient via gamma(k+1) = (k + 1 + 2 mu theta_{k+1}) gamma(k).
double gamma_classical(std::size_t k, double mu);

// Same quantity from the Gamma-function formulas
//   gamma(2m)   = 2^{2m}   m! Gamma(m + mu + 1/2) / Gamma(mu + 1/2)
//   gamma(2m+1) = 2^{2m+1} m! Gamma(m + mu + 3/2) / Gamma(mu + 1/2)
double gamma_classical_closed(std::size_t k, double mu);

// e_{mu,q}(x) = sum x^k / gamma_{mu,q}(k). Converges only for x < 1/(1-q);
// domain_error past that, overflow_error if the value leaves the double range.
SeriesValue e_mu_q(double x, GammaTable &table, double tol = default_tol);

// log e_{mu,q}(x), same domain. Does not overflow.
SeriesValue log_e_mu_q(double x, GammaTable &table, double tol = default_tol);

// E_{mu,q}(x) = sum q^{k(k-1)/2} x^k / gamma_{mu,q}(k). Entire in x.
SeriesValue E_mu_q(double x, GammaTable &table, double tol = default_tol);

// e_{mu,q}(c x) / e_{mu,q}(x) for 0 <= c <= 1, computed without forming
// either exponential.
double e_mu_q_ratio(double c, double x, GammaTable &table, double tol = default_tol);

} // namespace qdunkl

#endif
