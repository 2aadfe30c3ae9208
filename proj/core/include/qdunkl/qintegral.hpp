#ifndef QDUNKL_QINTEGRAL_HPP
#define QDUNKL_QINTEGRAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include <qdunkl/dunkl.hpp>
#include <qdunkl/errors.hpp>
#include <qdunkl/qcore.hpp>

namespace qdunkl
{

// Integration cell of the Kantorovich operator for index k:
//
//   [ q [k + 2 mu theta_k]_q / [n]_q , [k + 1 + 2 mu theta_k]_q / [n]_q ]
//
// Since [k + 1 + 2 mu theta_k]_q = q [k + 2 mu theta_k]_q + 1 the width is 1/[n]_q.
struct QCell {
    std::size_t k = 0;
    double q = 0;
    // [k + 2 mu theta_k]_q
    double node = 0;
    // [n]_q
    double bracket_n = 0;
    double lower = 0;
    double upper = 0;

    static QCell make(std::size_t k, const QContext &ctx, unsigned n);
};

namespace detail
{
inline constexpr std::size_t max_jackson_terms = 10'000'000;
}

// Jackson integral (1-q) a sum_{j>=0} q^j f(a q^j) of f over [0, a].
//
// The sum stops once the geometric tail estimate a q^{j+1} max|f| drops below
// tol (1 + |sum|), with max|f| taken over the last three samples. That is a
// heuristic: it assumes |f| near 0 is no larger than those samples, which holds
// for the continuous functions used here.
template <typename F>
double jackson_integral_zero(F &&f, double a, double q, double tol = default_tol)
{
    check_q(q);
    if (!(a >= 0)) {
        throw domain_error("jackson_integral_zero: upper limit must be >= 0");
    }
    if (a == 0) {
        return 0;
    }
    long double sum = 0;
    double scale = (1 - q) * a;
    double point = a;
    double recent[3] = {0, 0, 0};
    for (std::size_t j = 0; j < detail::max_jackson_terms; ++j) {
        const double fv = f(point);
        recent[j % 3] = std::abs(fv);
        sum += static_cast<long double>(scale) * fv;
        if (j >= 2) {
            const double fmax = std::max({recent[0], recent[1], recent[2]});
            if (scale * q / (1 - q) * fmax < tol * (1 + std::abs(static_cast<double>(sum)))) {
                return static_cast<double>(sum);
            }
        }
        scale *= q;
        point *= q;
    }
    throw convergence_error("jackson_integral_zero: no convergence within term budget");
}

// Jackson integral over [lower, upper]: the difference of the two [0, .] integrals.
// Both are cut at a tolerance scaled by the width, so the error stays relative to
// the (small) difference rather than to the two large partial sums.
template <typename F>
double jackson_integral(F &&f, double lower, double upper, double q, double tol = default_tol)
{
    const double width = std::abs(upper - lower);
    const double t = tol * std::min(1.0, width / (1 + std::max(std::abs(lower), std::abs(upper))));
    return jackson_integral_zero(f, upper, q, t) - jackson_integral_zero(f, lower, q, t);
}

template <typename F>
double jackson_integral(F &&f, const QCell &cell, double tol = default_tol)
{
    return jackson_integral(f, cell.lower, cell.upper, cell.q, tol);
}

// Closed form of the Jackson integral of t^p over a cell, p <= 4:
//
//   sum_{i=0}^{p} C(p+1, i) q^i A^i / ([p+1]_q [n]_q^{p+1}),   A = [k + 2 mu theta_k]_q.
double monomial_cell_integral(unsigned p, const QCell &cell);

} // namespace qdunkl

#endif
