#include <qdunkl/moduli.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qdunkl
{

namespace
{

// f at x_min + i*spacing for i = 0..count-1.
std::vector<double> sample(const RealFunction &f, const DomainGrid &grid, std::size_t count)
{
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) {
        v[i] = f(grid.x_min() + static_cast<double>(i) * grid.spacing());
    }
    return v;
}

std::size_t steps_within(double delta, const DomainGrid &grid)
{
    return static_cast<std::size_t>(std::floor(delta / grid.spacing() * (1 + 1e-12)));
}

void check_delta(double delta, const char *what)
{
    if (!(delta > 0) || !std::isfinite(delta)) {
        throw std::invalid_argument(std::string(what) + ": delta must be a positive finite number");
    }
}

} // namespace

DomainGrid::DomainGrid(double x_min, double x_max, std::size_t points) : m_x_min(x_min), m_x_max(x_max), m_points(points)
{
    if (!(x_min >= 0) || !(x_max > x_min) || !std::isfinite(x_max)) {
        throw std::invalid_argument("DomainGrid: need 0 <= x_min < x_max");
    }
    if (points < 2) {
        throw std::invalid_argument("DomainGrid: need at least 2 points");
    }
}

DomainGrid DomainGrid::parse(const std::string &spec)
{
    double a = 0, b = 0;
    unsigned long n = 0;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lu%c", &a, &b, &n, &tail) != 3) {
        throw std::invalid_argument("grid '" + spec + "' is not of the form a:b:N");
    }
    return DomainGrid(a, b, n);
}

double DomainGrid::at(std::size_t i) const noexcept
{
    if (i + 1 == m_points) {
        return m_x_max;
    }
    return m_x_min + static_cast<double>(i) * spacing();
}

std::vector<double> DomainGrid::values() const
{
    std::vector<double> v(m_points);
    for (std::size_t i = 0; i < m_points; ++i) {
        v[i] = at(i);
    }
    return v;
}

DomainGrid DomainGrid::refined(std::size_t factor) const
{
    return DomainGrid(m_x_min, m_x_max, (m_points - 1) * std::max<std::size_t>(factor, 1) + 1);
}

DomainGrid DomainGrid::clipped(double limit) const
{
    if (limit >= m_x_max) {
        return *this;
    }
    const std::size_t last = static_cast<std::size_t>(std::floor((limit - m_x_min) / spacing()));
    if (limit < m_x_min || last < 1) {
        throw std::invalid_argument("DomainGrid: clipping at " + std::to_string(limit) + " leaves fewer than 2 points");
    }
    return DomainGrid(m_x_min, m_x_min + static_cast<double>(last) * spacing(), last + 1);
}

std::string DomainGrid::label() const
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g:%.17g:%zu", m_x_min, m_x_max, m_points);
    return buf;
}

double modulus(const RealFunction &f, double delta, const DomainGrid &grid)
{
    check_delta(delta, "modulus");
    const std::size_t n = grid.points();
    const std::size_t m = steps_within(delta, grid);
    const std::vector<double> v = sample(f, grid, n + m);
    double best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            best = std::max(best, std::abs(v[i + j] - v[i]));
        }
        const double x = grid.x_min() + static_cast<double>(i) * grid.spacing();
        best = std::max(best, std::abs(f(x + delta) - v[i]));
    }
    return best;
}

double modulus2(const RealFunction &f, double delta_sqrt, const DomainGrid &grid)
{
    check_delta(delta_sqrt, "modulus2");
    const std::size_t n = grid.points();
    const std::size_t m = steps_within(delta_sqrt, grid);
    const std::vector<double> v = sample(f, grid, n + 2 * m);
    double best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            best = std::max(best, std::abs(v[i + 2 * j] - 2 * v[i + j] + v[i]));
        }
        const double x = grid.x_min() + static_cast<double>(i) * grid.spacing();
        best = std::max(best, std::abs(f(x + 2 * delta_sqrt) - 2 * f(x + delta_sqrt) + v[i]));
    }
    return best;
}

std::vector<double> modulus2_profile(const RealFunction &f, double max_h, const DomainGrid &grid)
{
    check_delta(max_h, "modulus2_profile");
    const std::size_t n = grid.points();
    const std::size_t m = steps_within(max_h, grid);
    const std::vector<double> v = sample(f, grid, n + 2 * m);
    std::vector<double> profile(m + 1, 0.0);
    for (std::size_t j = 1; j <= m; ++j) {
        double best = 0;
        for (std::size_t i = 0; i < n; ++i) {
            best = std::max(best, std::abs(v[i + 2 * j] - 2 * v[i + j] + v[i]));
        }
        profile[j] = best;
    }
    return profile;
}

double weighted_modulus(const RealFunction &f, double delta, const DomainGrid &grid)
{
    check_delta(delta, "weighted_modulus");
    const std::size_t n = grid.points();
    const std::size_t m = steps_within(delta, grid);
    const std::vector<double> v = sample(f, grid, n + m);
    const double s = grid.spacing();
    double best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = grid.x_min() + static_cast<double>(i) * s;
        const double wx = 1 + x * x;
        for (std::size_t j = 1; j <= m; ++j) {
            const double h = static_cast<double>(j) * s;
            best = std::max(best, std::abs(v[i + j] - v[i]) / ((1 + h * h) * wx));
        }
        best = std::max(best, std::abs(f(x + delta) - v[i]) / ((1 + delta * delta) * wx));
    }
    return best;
}

double lipschitz_estimate(const RealFunction &f, double nu, const DomainGrid &grid)
{
    if (!(nu > 0 && nu <= 1)) {
        throw std::invalid_argument("lipschitz_estimate: nu must lie in (0,1]");
    }
    const std::vector<double> x = grid.values();
    std::vector<double> v(x.size());
    std::transform(x.begin(), x.end(), v.begin(), [&](double t) { return f(t); });
    double best = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            best = std::max(best, std::abs(v[j] - v[i]) / std::pow(x[j] - x[i], nu));
        }
    }
    return best;
}

} // namespace qdunkl
