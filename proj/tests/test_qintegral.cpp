#include <doctest.h>

#include <cmath>
#include <random>

#include <qdunkl/errors.hpp>
#include <qdunkl/qintegral.hpp>

using namespace qdunkl;

namespace
{
// Closed forms written out term by term, A = [k + 2 mu theta_k]_q.
double closed(unsigned p, double q, double A, double bn)
{
    const double qa = q * A;
    const double num[] = {
        1,
        1 + 2 * qa,
        1 + 3 * qa + 3 * qa * qa,
        1 + 4 * qa + 6 * qa * qa + 4 * qa * qa * qa,
        1 + 5 * qa + 10 * qa * qa + 10 * qa * qa * qa + 5 * qa * qa * qa * qa,
    };
    return num[p] / (q_bracket(p + 1, q) * std::pow(bn, p + 1));
}

auto power(unsigned p)
{
    return [p](double t) { return std::pow(t, static_cast<double>(p)); };
}
} // namespace

TEST_CASE("jackson_integral_zero")
{
    CHECK(jackson_integral_zero([](double) { return 1.0; }, 0.7, 0.5) == doctest::Approx(0.7).epsilon(1e-11));
    CHECK(jackson_integral_zero([](double t) { return t; }, 1, 0.5) == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(jackson_integral_zero([](double t) { return t * t; }, 1, 0.5) == doctest::Approx(4.0 / 7).epsilon(1e-12));
    CHECK(jackson_integral_zero([](double) { return 1.0; }, 0, 0.5) == 0);
    CHECK_THROWS_AS(jackson_integral_zero([](double) { return 1.0; }, -1, 0.5), domain_error);
}

TEST_CASE("jackson integral over cells")
{
    const QContext ctx(0.5, 1);
    for (unsigned n : {1U, 5U, 20U}) {
        const double bn = q_bracket(n, 0.5);
        for (std::size_t k = 0; k < 10; ++k) {
            const QCell c = QCell::make(k, ctx, n);
            CHECK(std::abs(jackson_integral([](double) { return 1.0; }, c) - 1 / bn) < 1e-12);
        }
        const QCell c0 = QCell::make(0, ctx, n);
        const double expect = 1 / (q_bracket(2, 0.5) * bn * bn);
        CHECK(std::abs(jackson_integral([](double t) { return t; }, c0) - expect) < 1e-12);
    }
    const QCell c = QCell::make(2, ctx, 5);
    const double j3 = jackson_integral(power(3), c);
    CHECK(std::abs(j3 - monomial_cell_integral(3, c)) < 1e-11);
    CHECK(std::abs(j3 - closed(3, 0.5, c.node, c.bracket_n)) < 1e-11);
}

TEST_CASE("monomial_cell_integral")
{
    for (double q : {0.3, 0.5, 0.9}) {
        const QContext ctx(q, 1);
        const QCell c = QCell::make(3, ctx, 7);
        CHECK(monomial_cell_integral(0, c) == doctest::Approx(1 / c.bracket_n).epsilon(1e-15));
        const QCell c0 = QCell::make(0, ctx, 7);
        CHECK(monomial_cell_integral(2, c0) ==
              doctest::Approx(1 / (q_bracket(3, q) * std::pow(c0.bracket_n, 3))).epsilon(1e-14));
    }
    const QCell c = QCell::make(1, QContext(0.5, 1), 4);
    CHECK(std::abs(monomial_cell_integral(4, c) - jackson_integral(power(4), c)) < 1e-11);
    CHECK_THROWS_AS(monomial_cell_integral(5, c), domain_error);
}

TEST_CASE("closed forms agree with numeric Jackson integrals")
{
    for (double q : {0.3, 0.5, 0.9}) {
        for (double mu : {0.75, 1.0}) {
            const QContext ctx(q, mu);
            for (unsigned n : {1U, 5U, 20U}) {
                for (std::size_t k = 0; k <= 30; ++k) {
                    const QCell c = QCell::make(k, ctx, n);
                    for (unsigned p = 0; p <= 4; ++p) {
                        const double m = monomial_cell_integral(p, c);
                        CHECK(std::abs(m - closed(p, q, c.node, c.bracket_n)) <= 1e-13 * (1 + std::abs(m)));
                        CHECK(std::abs(m - jackson_integral(power(p), c)) <= 1e-10 * (1 + std::abs(m)));
                    }
                }
            }
        }
    }
}

TEST_CASE("cell geometry")
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> uq(0.05, 0.99);
    std::uniform_real_distribution<double> umu(-0.49, 3);
    std::uniform_int_distribution<int> uk(0, 200);
    std::uniform_int_distribution<int> un(1, 100);
    for (int i = 0; i < 1000; ++i) {
        const double q = uq(rng);
        const QContext ctx(q, umu(rng));
        const unsigned n = static_cast<unsigned>(un(rng));
        const QCell c = QCell::make(static_cast<std::size_t>(uk(rng)), ctx, n);
        CHECK(std::abs((c.upper - c.lower) - 1 / q_bracket(n, q)) <= 1e-13);
        CHECK(c.lower >= 0);
    }
    const QContext ctx(0.7, 1);
    // theta_k alternates, so cells advance monotonically within each parity
    for (std::size_t k = 0; k < 30; ++k) {
        CHECK(QCell::make(k + 2, ctx, 5).lower > QCell::make(k, ctx, 5).lower);
    }
    CHECK_THROWS_AS(QCell::make(0, ctx, 0), domain_error);
}

TEST_CASE("positivity and additivity")
{
    const QContext ctx(0.6, 0.75);
    auto cusp = [](double t) { return std::sqrt(std::abs(t - 0.5)); };
    for (std::size_t k = 0; k < 30; ++k) {
        CHECK(jackson_integral(cusp, QCell::make(k, ctx, 3)) >= -1e-15);
    }
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 5);
    auto f = [](double t) { return std::exp(-t) + t * t; };
    for (int i = 0; i < 100; ++i) {
        double a = u(rng);
        double b = u(rng);
        if (a > b) {
            std::swap(a, b);
        }
        const double two = jackson_integral(f, a, b, 0.6);
        const double diff = jackson_integral_zero(f, b, 0.6) - jackson_integral_zero(f, a, 0.6);
        CHECK(std::abs(two - diff) < 1e-10 * (1 + std::abs(diff)));
    }
}
