#include <doctest.h>

#include <cmath>
#include <random>

#include <qdunkl/errors.hpp>
#include <qdunkl/qcore.hpp>

using namespace qdunkl;

namespace
{
double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}
} // namespace

TEST_CASE("QContext validates q and mu")
{
    CHECK_NOTHROW(QContext(0.5, 1));
    CHECK_THROWS_AS(QContext(0, 1), domain_error);
    CHECK_THROWS_AS(QContext(1, 1), domain_error);
    CHECK_THROWS_AS(QContext(0.5, -0.5), domain_error);
    CHECK(QContext(0.5, 0.5).mu_warning());
    CHECK(QContext(0.5, -0.25).mu_warning());
    CHECK_FALSE(QContext(0.5, 0.75).mu_warning());
}

TEST_CASE("q_bracket values")
{
    CHECK(q_bracket(0, 0.5) == 0);
    CHECK(q_bracket(3, 0.5) == doctest::Approx(1.75).epsilon(1e-15));
    CHECK(std::abs(q_bracket(5, 1 - 1e-9) - 5) < 1e-6);
    CHECK_THROWS_AS(q_bracket(-0.1, 0.5), domain_error);
}

TEST_CASE("q_bracket matches the geometric sum at integers")
{
    for (double q : {0.3, 0.5, 0.9, 0.999}) {
        double sum = 0;
        double pw = 1;
        for (int n = 1; n <= 40; ++n) {
            sum += pw;
            pw *= q;
            CHECK(rel(q_bracket(n, q), sum) < 1e-14);
        }
    }
}

TEST_CASE("q_bracket shift identity and monotonicity")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ux(0, 50);
    for (double q : {0.3, 0.5, 0.9, 0.99}) {
        for (int i = 0; i < 200; ++i) {
            const double x = ux(rng);
            const double lhs = q_bracket(x + 1, q);
            CHECK(std::abs(lhs - (q * q_bracket(x, q) + 1)) <= 1e-13 * (1 + lhs));
            // nondecreasing everywhere; strictly so until q^x underflows the spacing
            CHECK(q_bracket(x + 0.01, q) >= q_bracket(x, q));
            if (x < 10) {
                CHECK(q_bracket(x + 0.01, q) > q_bracket(x, q));
            }
        }
    }
}

TEST_CASE("q_bracket tends to n as q -> 1")
{
    const double eps = 1e-8;
    for (int n = 1; n <= 50; ++n) {
        CHECK(std::abs(q_bracket(n, 1 - eps) - n) <= 10 * eps * n * n);
    }
}

TEST_CASE("q_factorial")
{
    CHECK(q_factorial(0, 0.5) == 1);
    CHECK(q_factorial(2, 0.5) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(q_factorial(3, 0.5) == doctest::Approx(2.625).epsilon(1e-15));
}

TEST_CASE("q_binomial")
{
    CHECK(q_binomial(4, 0, 0.3) == 1);
    CHECK(q_binomial(4, 4, 0.3) == 1);
    CHECK(q_binomial(2, 1, 0.5) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(q_binomial(4, 2, 0.5) == doctest::Approx(2.1875).epsilon(1e-14));
    for (double q : {0.3, 0.5, 0.9}) {
        for (std::size_t n = 0; n <= 12; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                CHECK(q_binomial(n, k, q) == q_binomial(n, n - k, q));
            }
        }
    }
    CHECK_THROWS_AS(q_binomial(2, 3, 0.5), domain_error);
}

TEST_CASE("q_pochhammer")
{
    CHECK(q_pochhammer(0, 5, 0.5).value == 1);
    CHECK(q_pochhammer(1, infinite_order, 0.5).value == 0);
    CHECK(q_pochhammer(0.5, 2, 0.5).value == doctest::Approx(0.375).epsilon(1e-15));
    // (x;q)_inf against a long finite product
    double prod = 1;
    for (int j = 0; j < 2000; ++j) {
        prod *= 1 - std::pow(0.9, j) * 0.3;
    }
    CHECK(rel(q_pochhammer(0.3, infinite_order, 0.9).value, prod) < 1e-11);
}

TEST_CASE("q_exp_small")
{
    CHECK(q_exp_small(0, 0.5).value == 1);
    const double e1 = q_exp_small(1, 0.5, 1e-12).value;
    CHECK(std::abs(e1 * q_exp_big(-1, 0.5) - 1) < 1e-10);
    CHECK_THROWS_AS(q_exp_small(2.5, 0.5), domain_error);
}

TEST_CASE("e(z) E(-z) = 1 inside the radius")
{
    for (double q : {0.3, 0.5, 0.9}) {
        for (double z : {0.1, 0.5, 1.0, 1.5}) {
            if (z >= 1 / (1 - q)) {
                // z = 1.5 at q = 0.3 lies past the radius 1/(1-q) = 1.43
                CHECK_THROWS_AS(q_exp_small(z, q), domain_error);
                continue;
            }
            CHECK(std::abs(q_exp_small(z, q).value * q_exp_big(-z, q) - 1) < 1e-10);
        }
    }
}

TEST_CASE("q_exp_big")
{
    CHECK(q_exp_big(0, 0.5) == 1);
    double prod = 1;
    for (int j = 0; j < 200; ++j) {
        prod *= 1 + (1 - 0.5) * std::pow(0.5, j);
    }
    CHECK(rel(q_exp_big(1, 0.5), prod) < 1e-11);
    CHECK(std::abs(q_exp_big(-1 / (1 - 0.5), 0.5)) < 1e-15);
}

TEST_CASE("q_exp_big series and product agree")
{
    for (double q : {0.3, 0.5, 0.9}) {
        for (double z : {-3.0, -1.0, -0.5, 0.5, 1.0, 3.0, 10.0}) {
            const double p = q_exp_big(z, q);
            const double s = q_exp_big_series(z, q).value;
            CHECK(std::abs(s - p) <= 1e-10 * std::max(1.0, std::abs(p)));
        }
    }
}
