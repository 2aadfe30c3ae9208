#ifndef QDUNKL_QCORE_HPP
#define QDUNKL_QCORE_HPP

#include <cstddef>
#include <limits>

namespace qdunkl
{

inline constexpr double default_tol = 1e-12;

// Use for the infinite q-Pochhammer product.
inline constexpr std::size_t infinite_order = std::numeric_limits<std::size_t>::max();

// The (q, mu) bundle every series evaluation starts from.
//
// Requires 0 < q < 1 and mu > -1/2. Operators built on top of this are stated
// for mu > 1/2 only; below that the context is still valid but flagged.
class QContext
{
public:
    QContext(double q, double mu);

    double q() const noexcept { return m_q; }
    double mu() const noexcept { return m_mu; }

    // True when mu <= 1/2, outside the range the Kantorovich operator is stated for.
    bool mu_warning() const noexcept { return m_mu <= 0.5; }

private:
    double m_q;
    double m_mu;
};

// Throws qdunkl::domain_error unless 0 < q < 1.
void check_q(double q);

struct SeriesValue {
    double value = 0;
    // Number of terms summed.
    std::size_t terms = 0;
    // Upper bound on the absolute value of the omitted tail.
    double tail_bound = 0;
};

struct ProductValue {
    double value = 1;
    std::size_t factors = 0;
    double error_estimate = 0;
};

// [x]_q = (1 - q^x) / (1 - q) for real x >= 0.
double q_bracket(double x, double q);

// Same formula without the sign restriction. The moment bounds need [1 - 2mu]_q,
// which has a negative argument whenever mu > 1/2.
double q_number(double x, double q) noexcept;

double q_factorial(std::size_t n, double q);
double q_binomial(std::size_t n, std::size_t k, double q);

// (x; q)_n, or (x; q)_inf when n == infinite_order. The infinite product is
// truncated once |q^j x| < tol; error_estimate bounds the dropped factors.
ProductValue q_pochhammer(double x, std::size_t n, double q, double tol = default_tol);

// e(z) = sum z^k / [k]_q!, valid for |z| < 1/(1-q).
SeriesValue q_exp_small(double z, double q, double tol = default_tol);

// E(z) = prod_{j>=0} (1 + (1-q) q^j z), evaluated as the product.
double q_exp_big(double z, double q, double tol = default_tol);

// E(z) = sum q^{k(k-1)/2} z^k / [k]_q!, the series form of q_exp_big.
SeriesValue q_exp_big_series(double z, double q, double tol = default_tol);

} // namespace qdunkl

#endif
