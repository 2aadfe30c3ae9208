#include <qdunkl/qcore.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <qdunkl/errors.hpp>

namespace qdunkl
{

namespace
{

constexpr std::size_t max_series_terms = 2'000'000;

// Shared truncation loop for power series whose term ratio
// t_{k+1}/t_k = ratio(k) decreases in magnitude once it drops below one.
template <typename Ratio>
SeriesValue sum_ratio_series(Ratio ratio, double tol, const char *what)
{
    SeriesValue out;
    double term = 1;
    double sum = 1;
    double comp = 0;
    for (std::size_t k = 0; k < max_series_terms; ++k) {
        const double r = ratio(k);
        const double rho = std::abs(r);
        if (term == 0) {
            out.value = sum;
            out.terms = k + 1;
            out.tail_bound = 0;
            return out;
        }
        if (rho < 1) {
            const double tail = std::abs(term) * rho / (1 - rho);
            if (tail <= tol * std::abs(sum) || tail == 0) {
                out.value = sum;
                out.terms = k + 1;
                out.tail_bound = tail;
                return out;
            }
        }
        term *= r;
        if (!std::isfinite(term)) {
            throw overflow_error(std::string(what) + ": term overflow at k=" + std::to_string(k + 1));
        }
        // Kahan summation keeps the alternating cases accurate.
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    throw convergence_error(std::string(what) + ": no convergence within term budget");
}

} // namespace

QContext::QContext(double q, double mu) : m_q(q), m_mu(mu)
{
    check_q(q);
    if (!(mu > -0.5)) {
        throw domain_error("QContext: mu must be > -1/2, got " + std::to_string(mu));
    }
}

void check_q(double q)
{
    if (!(q > 0 && q < 1)) {
        throw domain_error("q must lie in (0,1), got " + std::to_string(q));
    }
}

double q_number(double x, double q) noexcept
{
    if (x == 0) {
        return 0;
    }
    const double lq = std::log(q);
    return std::expm1(x * lq) / std::expm1(lq);
}

double q_bracket(double x, double q)
{
    check_q(q);
    if (!(x >= 0)) {
        throw domain_error("q_bracket: argument must be >= 0, got " + std::to_string(x));
    }
    return q_number(x, q);
}

double q_factorial(std::size_t n, double q)
{
    check_q(q);
    double out = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        out *= q_number(static_cast<double>(i), q);
    }
    return out;
}

double q_binomial(std::size_t n, std::size_t k, double q)
{
    check_q(q);
    if (k > n) {
        throw domain_error("q_binomial: k > n");
    }
    // Same loop for k and n-k, so the symmetry holds bit for bit.
    const std::size_t m = std::min(k, n - k);
    double out = 1;
    for (std::size_t i = 1; i <= m; ++i) {
        out *= q_number(static_cast<double>(n - m + i), q) / q_number(static_cast<double>(i), q);
    }
    return out;
}

ProductValue q_pochhammer(double x, std::size_t n, double q, double tol)
{
    check_q(q);
    ProductValue out;
    if (n != infinite_order) {
        double qj = 1;
        for (std::size_t j = 0; j < n; ++j) {
            out.value *= 1 - qj * x;
            qj *= q;
        }
        out.factors = n;
        return out;
    }

    double qj = 1;
    std::size_t j = 0;
    for (; j < max_series_terms; ++j) {
        const double u = qj * x;
        if (std::abs(u) < tol) {
            break;
        }
        out.value *= 1 - u;
        qj *= q;
    }
    if (j == max_series_terms) {
        throw convergence_error("q_pochhammer: product did not reach tolerance");
    }
    out.factors = j;
    // |log prod_{i>=j}(1 - q^i x)| <= u/((1-q)(1-u)) with u = |q^j x| < tol.
    const double u = std::abs(qj * x);
    const double log_bound = u / ((1 - q) * (1 - u));
    out.error_estimate = std::abs(out.value) * std::expm1(log_bound);
    return out;
}

SeriesValue q_exp_small(double z, double q, double tol)
{
    check_q(q);
    if (!(std::abs(z) < 1 / (1 - q))) {
        throw domain_error("q_exp_small: |z| must be < 1/(1-q) = " + std::to_string(1 / (1 - q)));
    }
    return sum_ratio_series([&](std::size_t k) { return z / q_number(static_cast<double>(k + 1), q); }, tol,
                            "q_exp_small");
}

double q_exp_big(double z, double q, double tol)
{
    check_q(q);
    double out = 1;
    double u = (1 - q) * z;
    for (std::size_t j = 0; j < max_series_terms; ++j) {
        // The remaining factors change the product by about q^j |z| = |u|/(1-q).
        if (std::abs(u) < tol * (1 - q)) {
            return out;
        }
        out *= 1 + u;
        if (out == 0) {
            return 0;
        }
        u *= q;
    }
    throw convergence_error("q_exp_big: product did not reach tolerance");
}

SeriesValue q_exp_big_series(double z, double q, double tol)
{
    check_q(q);
    // t_{k+1}/t_k = q^k z / [k+1]_q
    return sum_ratio_series(
        [&](std::size_t k) { return std::pow(q, static_cast<double>(k)) * z / q_number(static_cast<double>(k + 1), q); },
        tol, "q_exp_big_series");
}

} // namespace qdunkl
