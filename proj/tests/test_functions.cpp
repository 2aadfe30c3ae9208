#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <qdunkl/test_function.hpp>

using namespace qdunkl;

TEST_CASE("values")
{
    CHECK(TestFunction::constant(2)(5) == 2);
    CHECK(TestFunction::monomial(3)(2) == 8);
    CHECK(TestFunction::exp_decay(2)(1) == doctest::Approx(std::exp(-2)));
    CHECK(TestFunction::sine()(1) == doctest::Approx(std::sin(1)));
    CHECK(TestFunction::abs_shift(1)(0.25) == doctest::Approx(0.75));
    CHECK(TestFunction::holder_cusp(0.5, 0.5)(0.75) == doctest::Approx(0.5));
}

TEST_CASE("metadata matches the formulas")
{
    const auto cusp = TestFunction::holder_cusp(0.3, 0.5).metadata();
    REQUIRE(cusp.lipschitz);
    CHECK(cusp.lipschitz->nu == 0.3);
    CHECK(cusp.lipschitz->M == 1);
    CHECK(cusp.uniformly_continuous);
    CHECK_FALSE(cusp.nondecreasing);

    const auto lin = TestFunction::monomial(1).metadata();
    REQUIRE(lin.lipschitz);
    CHECK(lin.lipschitz->nu == 1);
    CHECK(lin.nondecreasing);
    CHECK_FALSE(lin.bounded);

    CHECK_FALSE(TestFunction::monomial(2).metadata().uniformly_continuous);
    CHECK(TestFunction::monomial(2).metadata().weight_bound == 1.0);
    CHECK_FALSE(TestFunction::monomial(3).metadata().weight_bound);

    const auto e = TestFunction::exp_decay(2).metadata();
    REQUIRE(e.cb2_norms);
    CHECK((*e.cb2_norms)[0] == 1);
    CHECK((*e.cb2_norms)[1] == 2);
    CHECK((*e.cb2_norms)[2] == 4);
    CHECK(e.bounded);

    const auto s = TestFunction::sine().metadata();
    REQUIRE(s.cb2_norms);
    CHECK(*s.cb2_norms == std::array<double, 3>{1, 1, 1});

    CHECK(TestFunction::abs_shift(1).metadata().uniformly_continuous);
    CHECK(TestFunction::constant(1).metadata().nondecreasing);
}

TEST_CASE("from_spec and labels")
{
    TestFunction::Spec s;
    s.name = "holder_cusp";
    s.nu = 0.5;
    s.x0 = 0.5;
    CHECK(TestFunction::from_spec(s).label() == "holder_cusp(nu=0.5,x0=0.5)");
    s.name = "monomial";
    s.p = 2;
    CHECK(TestFunction::from_spec(s).label() == "monomial(p=2)");
    s.name = "nope";
    CHECK_THROWS_AS(TestFunction::from_spec(s), std::invalid_argument);
}
