#include <qdunkl/qintegral.hpp>

#include <array>

namespace qdunkl
{

QCell QCell::make(std::size_t k, const QContext &ctx, unsigned n)
{
    if (n == 0) {
        throw domain_error("QCell: n must be >= 1");
    }
    QCell c;
    c.k = k;
    c.q = ctx.q();
    c.node = dunkl_bracket(k, ctx);
    c.bracket_n = q_number(static_cast<double>(n), ctx.q());
    c.lower = c.q * c.node / c.bracket_n;
    c.upper = (c.q * c.node + 1) / c.bracket_n;
    return c;
}

double monomial_cell_integral(unsigned p, const QCell &cell)
{
    static constexpr std::array<std::array<double, 5>, 5> binom = {{
        {1, 0, 0, 0, 0},
        {1, 2, 0, 0, 0},
        {1, 3, 3, 0, 0},
        {1, 4, 6, 4, 0},
        {1, 5, 10, 10, 5},
    }};
    if (p > 4) {
        throw domain_error("monomial_cell_integral: degree " + std::to_string(p) + " > 4");
    }
    const double qa = cell.q * cell.node;
    double poly = 0;
    double pw = 1;
    for (unsigned i = 0; i <= p; ++i) {
        poly += binom[p][i] * pw;
        pw *= qa;
    }
    return poly / (q_number(p + 1.0, cell.q) * std::pow(cell.bracket_n, p + 1.0));
}

} // namespace qdunkl
