#ifndef QDUNKL_MODULI_HPP
#define QDUNKL_MODULI_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace qdunkl
{

using RealFunction = std::function<double(double)>;

// Uniform grid x_min, ..., x_max with `points` nodes.
class DomainGrid
{
public:
    DomainGrid(double x_min, double x_max, std::size_t points);
    DomainGrid(double x_max, std::size_t points) : DomainGrid(0, x_max, points) {}

    // "a:b:N"; throws std::invalid_argument on malformed input.
    static DomainGrid parse(const std::string &spec);

    double x_min() const noexcept { return m_x_min; }
    double x_max() const noexcept { return m_x_max; }
    std::size_t points() const noexcept { return m_points; }
    double spacing() const noexcept { return (m_x_max - m_x_min) / static_cast<double>(m_points - 1); }
    double at(std::size_t i) const noexcept;
    std::vector<double> values() const;

    // Same interval, (points-1)*factor + 1 nodes.
    DomainGrid refined(std::size_t factor) const;
    // Grid over [x_min, min(x_max, limit)] with the original spacing; the
    // endpoint is the last original node not past the limit.
    DomainGrid clipped(double limit) const;

    std::string label() const;

private:
    double m_x_min;
    double m_x_max;
    std::size_t m_points;
};

// The suprema below run over the grid nodes x and offsets h that are multiples
// of the grid spacing, plus the offset equal to delta itself. They understate
// the continuous suprema; refine the grid when a modulus sits on the large
// side of an inequality.

// omega(f, delta) = sup_{|y - x| <= delta} |f(y) - f(x)|, x on the grid, y >= x.
double modulus(const RealFunction &f, double delta, const DomainGrid &grid);

// omega_2(f, delta_sqrt) = sup_{0 < h <= delta_sqrt} sup_x |f(x+2h) - 2f(x+h) + f(x)|.
double modulus2(const RealFunction &f, double delta_sqrt, const DomainGrid &grid);

// profile[j] = sup_x |f(x+2h) - 2f(x+h) + f(x)| at h = j * spacing, j = 0..J with
// J = floor(max_h / spacing). A running maximum of it gives omega_2 at every
// multiple of the spacing in one pass.
std::vector<double> modulus2_profile(const RealFunction &f, double max_h, const DomainGrid &grid);

// Omega(f, delta) = sup_{x, 0 < h <= delta} |f(x+h) - f(x)| / ((1+h^2)(1+x^2)).
// Only h > 0 is probed: for a pair a < b the quotient based at a dominates the
// one based at b, so negative offsets never raise the supremum.
double weighted_modulus(const RealFunction &f, double delta, const DomainGrid &grid);

// max over grid pairs of |f(a) - f(b)| / |a - b|^nu: an empirical lower bound
// for the Lipschitz/Hoelder constant M.
double lipschitz_estimate(const RealFunction &f, double nu, const DomainGrid &grid);

} // namespace qdunkl

#endif
