#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <qdunkl/errors.hpp>
#include <qdunkl/moments.hpp>
#include <qdunkl/operators.hpp>
#include <qdunkl/test_function.hpp>

using namespace qdunkl;
using big = boost::multiprecision::cpp_dec_float_50;

namespace
{

auto sq = [](double t) { return t * t; };
auto ident = [](double t) { return t; };
auto one = [](double) { return 1.0; };

// Weights z^k / (gamma(k) e(z)) in 50 digits, gamma by its recursion.
std::vector<double> big_weights(double x, double q, double mu, unsigned n, int K)
{
    const big bq(q);
    const big z = big(x) * (1 - pow(bq, big(n))) / (1 - bq);
    std::vector<big> terms;
    big term = 1;
    big sum = 0;
    for (int k = 0; k < K; ++k) {
        if (k > 0) {
            term *= z / ((1 - pow(bq, big(k + 2 * mu * (k % 2)))) / (1 - bq));
        }
        terms.push_back(term);
        sum += term;
    }
    std::vector<double> w;
    for (const auto &t : terms) {
        w.push_back(static_cast<double>(t / sum));
    }
    return w;
}

double bracket_signed(double x, double q)
{
    return (1 - std::pow(q, x)) / (1 - q);
}

} // namespace

TEST_CASE("StancuParams")
{
    const QContext ctx(0.9, 1);
    CHECK_THROWS_AS(StancuParams(ctx, 0), domain_error);
    CHECK_THROWS_AS(StancuParams(ctx, 5, -1, 0), domain_error);
    CHECK_THROWS_AS(StancuParams(ctx, 5, 0, -1), domain_error);
    const StancuParams p(ctx, 10, 1, 2);
    CHECK_FALSE(p.alpha_warning());
    CHECK(StancuParams(ctx, 10, 2, 1).alpha_warning());
    CHECK(p.shift(0) == doctest::Approx(1.0 / 12));
    CHECK(p.shift(1) == doctest::Approx(11.0 / 12));
    CHECK(p.bracket_n() == doctest::Approx(q_bracket(10, 0.9)));
    CHECK(p.domain_limit() == doctest::Approx(1 / (1 - std::pow(0.9, 10))));
    CHECK(p.in_domain(1.5));
    CHECK_FALSE(p.in_domain(1.6));
}

TEST_CASE("weights")
{
    const StancuParams p(QContext(0.5, 1), 5);
    const WeightVector w0 = weights(0, p);
    CHECK(w0.w.at(0) == 1);
    for (std::size_t k = 1; k < w0.w.size(); ++k) {
        CHECK(w0.w[k] == 0);
    }

    const WeightVector w1 = weights(1, p, 1e-12);
    double sum = 0;
    for (double v : w1.w) {
        CHECK(v >= 0);
        sum += v;
    }
    CHECK(std::abs(sum - 1) < 1e-12);
    const auto ref = big_weights(1, 0.5, 1, 5, 3000);
    for (std::size_t k = 0; k < w1.w.size(); ++k) {
        CHECK(std::abs(w1.w[k] - ref[k]) < 1e-12);
    }
}

TEST_CASE("weights near the edge of the domain")
{
    const StancuParams p(QContext(0.9, 1), 50);
    // x = 4 lies past 1/(1 - q^n) = 1.005...: e_{mu,q}([n]_q x) diverges
    CHECK_THROWS_AS(weights(4, p), domain_error);
    const double x = 0.95 * p.domain_limit();
    const WeightVector w = weights(x, p, 1e-12);
    CHECK(w.truncation_index() > 0);
    CHECK(w.w.back() < 1e-12);
    CHECK(w.tail_mass < 1e-12);
}

TEST_CASE("eval_D")
{
    const QContext ctx(0.9, 1);
    CHECK(std::abs(eval_D(one, 1.3, ctx, 10) - 1) < 1e-10);
    CHECK(std::abs(eval_D(ident, 0.8, ctx, 10) - 0.8) < 1e-9);

    const double x = 1;
    const double q = 0.9;
    const double mu = 1;
    const double bn = q_bracket(10, q);
    GammaTable t(ctx);
    const double ratio = e_mu_q(q * bn * x, t).value / e_mu_q(bn * x, t).value;
    const double lo = x * x + bracket_signed(1 - 2 * mu, q) * std::pow(q, 2 * mu) * ratio * x / bn;
    const double hi = x * x + bracket_signed(1 + 2 * mu, q) * x / bn;
    const double d2 = eval_D(sq, x, ctx, 10);
    CHECK(d2 >= lo - 1e-9);
    CHECK(d2 <= hi + 1e-9);
}

TEST_CASE("eval_T: constants and the first moment")
{
    // x = 2 needs 1/(1 - q^n) > 2
    const StancuParams wide(QContext(0.95, 1), 10, 1, 2);
    CHECK(std::abs(eval_T(one, 2.0, wide) - 1) < 1e-10);
    CHECK_THROWS_AS(eval_T(one, 2.0, StancuParams(QContext(0.9, 1), 10, 1, 2)), domain_error);

    const double q = 0.9;
    const double n = 10;
    const double a = 1;
    const double b = 2;
    const StancuParams p(QContext(q, 1), 10, a, b);
    const double b2 = 1 + q;
    const double bn = q_bracket(10, q);
    const double printed = 2 * q * n / ((n + b) * b2) * 1 + n / ((n + b) * b2 * bn) + a / (n + b);
    CHECK(std::abs(eval_T(ident, 1.0, p) - printed) < 1e-9);
    CHECK(std::abs(moment_T1(1.0, p) - printed) < 1e-14);

    const StancuParams p0(QContext(q, 1), 10);
    CHECK(std::abs(eval_T(ident, 0.0, p0) - 1 / (b2 * bn)) < 1e-9);
}

TEST_CASE("eval_T: direct summation with alpha = beta = 0")
{
    for (double q : {0.5, 0.9}) {
        const QContext ctx(q, 0.75);
        const StancuParams p(ctx, 7);
        const double bn = p.bracket_n();
        for (double x : {0.1, 0.4, 0.9 * p.domain_limit()}) {
            const auto w = big_weights(x, q, 0.75, 7, 3000);
            double direct = 0;
            for (std::size_t k = 0; k < w.size(); ++k) {
                direct += w[k] * bn * monomial_cell_integral(2, QCell::make(k, ctx, 7));
            }
            CHECK(std::abs(eval_T(sq, x, p) - direct) < 1e-10 * (1 + direct));
        }
    }
}

TEST_CASE("eval_T: linearity and positivity")
{
    const StancuParams p(QContext(0.9, 0.75), 20, 1, 2);
    const KantorovichOperator op(p);
    const TestFunction e = TestFunction::exp_decay(1);
    const TestFunction s = TestFunction::sine();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 10; ++i) {
        const double a = u(rng);
        const double b = u(rng);
        const double x = 0.1 * i;
        const double lhs = op.apply([&](double t) { return a * e(t) + b * s(t); }, x);
        const double rhs = a * op.apply(e, x) + b * op.apply(s, x);
        CHECK(std::abs(lhs - rhs) < 1e-10);
        CHECK(op.apply(sq, x) >= -1e-12);
        CHECK(op.apply(TestFunction::monomial(3), x) >= -1e-12);
    }
}

TEST_CASE("KantorovichOperator is safe to share between threads")
{
    const StancuParams p(QContext(0.9, 1), 25);
    const KantorovichOperator op(p);
    std::vector<double> xs;
    for (int i = 0; i < 16; ++i) {
        xs.push_back(0.06 * i);
    }
    std::vector<double> serial;
    {
        const KantorovichOperator fresh(p);
        for (double x : xs) {
            serial.push_back(fresh.apply(sq, x));
        }
    }
    std::vector<double> par(xs.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < xs.size(); i += 4) {
                par[i] = op.apply(sq, xs[i]);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    CHECK(par == serial);
}
