#include <qdunkl/moments.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <qdunkl/errors.hpp>

namespace qdunkl
{

namespace
{

struct Coeffs {
    double q, mu, n, a, B, bn, b2, b3, b4, c, d;

    explicit Coeffs(const StancuParams &p)
        : q(p.q()), mu(p.mu()), n(p.n()), a(p.alpha()), B(p.n() + p.beta()), bn(p.bracket_n()),
          b2(q_number(2, q)), b3(q_number(3, q)), b4(q_number(4, q)), c(q_number(1 + 2 * mu, q)),
          d(q_number(1 - 2 * mu, q))
    {
    }
};

constexpr std::array<std::array<double, 6>, 6> binom = {{
    {1, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0},
    {1, 2, 1, 0, 0, 0},
    {1, 3, 3, 1, 0, 0},
    {1, 4, 6, 4, 1, 0},
    {1, 5, 10, 10, 5, 1},
}};

// T*(t^p; x) as a function of the weighted node sums s[0..p]. Every
// coefficient is nonnegative, so bounds on s carry over directly.
double compose(unsigned p, const std::array<double, 5> &s, const Coeffs &k)
{
    double total = 0;
    for (unsigned m = 0; m <= p; ++m) {
        const double outer = binom[p][m] * std::pow(k.n, m) * std::pow(k.a, p - m) / std::pow(k.B, p);
        if (outer == 0) {
            continue;
        }
        double inner = 0;
        for (unsigned i = 0; i <= m; ++i) {
            inner += binom[m + 1][i] * std::pow(k.q, i) * s[i] / std::pow(k.bn, m - i);
        }
        total += outer * inner / q_number(m + 1.0, k.q);
    }
    return total;
}

struct Ratios {
    double r1;
    double r2;
};

Ratios ratios(double x, const KantorovichOperator &op)
{
    const double q = op.params().q();
    return {op.e_ratio(q, x), op.e_ratio(q * q, x)};
}

MomentBounds node_bounds(unsigned j, double x, const Coeffs &k, const Ratios &r)
{
    MomentBounds b;
    const double c = k.c, d = k.d, bn = k.bn, q = k.q, mu = k.mu;
    switch (j) {
    case 0:
        b.lower = b.upper = 1;
        b.exact = 1.0;
        break;
    case 1:
        b.lower = b.upper = x;
        b.exact = x;
        break;
    case 2:
        b.lower = x * x + std::pow(q, 2 * mu) * d * r.r1 * x / bn;
        b.upper = x * x + c * x / bn;
        break;
    case 3:
        b.lower = x * x * x + (2 * q + 1) * d * r.r1 * x * x / bn + std::pow(q, 4 * mu) * d * d * r.r2 * x / (bn * bn);
        b.upper = x * x * x + 3 * c * x * x / bn + c * c * x / (bn * bn);
        break;
    case 4:
        b.upper = std::pow(x, 4) + 6 * c * std::pow(x, 3) / bn + 7 * c * c * x * x / (bn * bn) +
                  c * c * c * x / (bn * bn * bn);
        break;
    default:
        throw domain_error("dunkl_moment_bounds: order " + std::to_string(j) + " not in 0..4");
    }
    return b;
}

MomentBounds composed_bounds(unsigned j, double x, const Coeffs &k, const Ratios &r)
{
    std::array<double, 5> lo{}, hi{};
    for (unsigned i = 0; i <= j; ++i) {
        const MomentBounds b = node_bounds(i, x, k, r);
        // S_i >= 0 always
        lo[i] = std::max(b.lower, 0.0);
        hi[i] = b.upper;
    }
    MomentBounds out;
    out.lower = compose(j, lo, k);
    out.upper = compose(j, hi, k);
    if (j == 4) {
        out.lower = -std::numeric_limits<double>::infinity();
    }
    return out;
}

double printed_const2(const Coeffs &k)
{
    return k.n * k.n / (k.B * k.B * k.b3 * k.bn * k.bn) + 2 * k.n * k.a / (k.B * k.B * k.b2 * k.bn) +
           k.a * k.a / (k.B * k.B);
}

MomentBounds printed_t2(double x, const Coeffs &k, const Ratios &r)
{
    const double B2 = k.B * k.B;
    const double n2 = k.n * k.n;
    const double c0 = printed_const2(k);
    const double dterm = 3 * std::pow(k.q, 2 * (k.mu + 1)) / (k.b3 * k.bn) * k.d * r.r1;
    MomentBounds b;
    b.lower = c0 + (n2 / B2 * 3 * k.q / (k.b3 * k.bn) + 2 * k.n * k.a / B2 * 2 * k.q / k.b2 + dterm) * x +
              n2 / B2 * 3 * k.q * k.q / k.b3 * x * x;
    b.upper = c0 + (n2 / B2 * 3 / (k.b3 * k.bn) + 2 * k.n * k.a / B2 * 2 / k.b2 + dterm) * x + n2 / B2 * 3 / k.b3 * x * x;
    return b;
}

double printed_t3_lower(double x, const Coeffs &k, const Ratios &r)
{
    const double n = k.n, a = k.a, B3 = k.B * k.B * k.B, bn = k.bn, q = k.q;
    const double qq = std::pow(q, 2 * (k.mu + 1));
    const double c0 = n / (B3 * bn) * (n * n / (k.b4 * bn * bn) + 3 * n * a / (k.b3 * bn) + 3 * a * a / k.b2) +
                      a * a * a / B3;
    const double c1 = (n * (4 * n * n * q / (k.b4 * bn * bn) + 3 * n * a / bn * 3 * q / k.b3 + 6 * a * a * q / k.b2) +
                       (2 * n / (k.b4 * bn) + 3 * a / k.b3) * 3 * n * n * qq / bn * k.d * r.r1 +
                       4 * n * n * n / (k.b4 * bn * bn) * k.d * k.d * r.r2) /
                      B3;
    const double c2 = n * n / B3 *
                      (6 * n * q * q / (k.b4 * bn) + 9 * a * q * q / k.b3 +
                       4 * n * q * q * q / (k.b4 * bn) * (2 * q + 1) * k.d * r.r1);
    const double c3 = 4 * n * n * n * q * q * q / (B3 * k.b4);
    return c0 + c1 * x + c2 * x * x + c3 * x * x * x;
}

} // namespace

double moment_T1(double x, const StancuParams &p)
{
    const Coeffs k(p);
    return 2 * k.q * k.n / (k.B * k.b2) * x + k.n / (k.B * k.b2 * k.bn) + k.a / k.B;
}

double central_moment_T1(double x, const StancuParams &p)
{
    const Coeffs k(p);
    return (2 * k.q * k.n / (k.B * k.b2) - 1) * x + k.n / (k.B * k.b2 * k.bn) + k.a / k.B;
}

MomentBounds dunkl_moment_bounds(unsigned j, double x, const KantorovichOperator &op)
{
    const Coeffs k(op.params());
    const Ratios r = j >= 2 && j <= 3 ? ratios(x, op) : Ratios{1, 1};
    return node_bounds(j, x, k, r);
}

MomentBounds moment_T_bounds(unsigned j, double x, const KantorovichOperator &op, BoundForm form)
{
    if (j < 2 || j > 4) {
        throw domain_error("moment_T_bounds: order " + std::to_string(j) + " not in 2..4");
    }
    const Coeffs k(op.params());
    const Ratios r = ratios(x, op);
    MomentBounds b = composed_bounds(j, x, k, r);
    if (form == BoundForm::printed) {
        if (j == 2) {
            b = printed_t2(x, k, r);
        } else if (j == 3) {
            b.lower = printed_t3_lower(x, k, r);
        }
    }
    return b;
}

double phi_n(double x, const StancuParams &p)
{
    const Coeffs k(p);
    const double n = k.n, a = k.a, B = k.B, bn = k.bn;
    const double c0 = n / (B * B * bn) * (n / (k.b3 * bn) + 2 * a / k.b2) + a * a / (B * B);
    const double c1 =
        n * n / (B * B) * 3 / (k.b3 * bn) * (1 + k.c) + 2 * n / (B * k.b2) * (2 * a - 1 / bn) - 2 * a / B;
    const double c2 = n / B * (3 * n / (B * k.b3) - 4 * n / (B * k.b2)) + 1;
    return c0 + c1 * x + c2 * x * x;
}

double central_moment_bound(unsigned j, double x, const KantorovichOperator &op)
{
    if (j == 2) {
        return phi_n(x, op.params());
    }
    if (j != 4) {
        throw domain_error("central_moment_bound: order " + std::to_string(j) + " not in {2,4}");
    }
    const Coeffs k(op.params());
    const Ratios r = ratios(x, op);
    const double U4 = composed_bounds(4, x, k, r).upper;
    const double L3 = composed_bounds(3, x, k, r).lower;
    const double U2 = composed_bounds(2, x, k, r).upper;
    const double T1 = moment_T1(x, op.params());
    return U4 - 4 * x * L3 + 6 * x * x * U2 - 4 * x * x * x * T1 + std::pow(x, 4);
}

} // namespace qdunkl
