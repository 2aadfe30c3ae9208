#include <qdunkl/test_function.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qdunkl
{

TestFunction TestFunction::constant(double c)
{
    FunctionMetadata m;
    m.bounded = true;
    m.uniformly_continuous = true;
    m.nondecreasing = true;
    m.lipschitz = LipschitzClass{1, 1};
    m.cb2_norms = std::array<double, 3>{std::abs(c), 0, 0};
    m.weight_bound = std::abs(c);
    TestFunction f(FunctionKind::constant, m);
    f.m_c = c;
    return f;
}

TestFunction TestFunction::monomial(unsigned p)
{
    FunctionMetadata m;
    m.bounded = p == 0;
    m.uniformly_continuous = p <= 1;
    m.nondecreasing = true;
    if (p <= 1) {
        m.lipschitz = LipschitzClass{1, 1};
    }
    if (p == 0) {
        m.cb2_norms = std::array<double, 3>{1, 0, 0};
    }
    if (p <= 2) {
        m.weight_bound = 1;
    }
    TestFunction f(FunctionKind::monomial, m);
    f.m_p = p;
    return f;
}

TestFunction TestFunction::exp_decay(double c)
{
    if (!(c > 0)) {
        throw std::invalid_argument("exp_decay: rate must be > 0");
    }
    FunctionMetadata m;
    m.bounded = true;
    m.uniformly_continuous = true;
    m.lipschitz = LipschitzClass{1, c};
    m.cb2_norms = std::array<double, 3>{1, c, c * c};
    m.weight_bound = 1;
    TestFunction f(FunctionKind::exp_decay, m);
    f.m_c = c;
    return f;
}

TestFunction TestFunction::sine()
{
    FunctionMetadata m;
    m.bounded = true;
    m.uniformly_continuous = true;
    m.lipschitz = LipschitzClass{1, 1};
    m.cb2_norms = std::array<double, 3>{1, 1, 1};
    m.weight_bound = 1;
    return TestFunction(FunctionKind::sine, m);
}

TestFunction TestFunction::abs_shift(double x0)
{
    if (!(x0 >= 0)) {
        throw std::invalid_argument("abs_shift: x0 must be >= 0");
    }
    FunctionMetadata m;
    m.uniformly_continuous = true;
    m.nondecreasing = x0 == 0;
    m.lipschitz = LipschitzClass{1, 1};
    // |t - x0| <= x0 + t <= (x0 + 1)(1 + t^2)
    m.weight_bound = x0 + 1;
    TestFunction f(FunctionKind::abs_shift, m);
    f.m_x0 = x0;
    return f;
}

TestFunction TestFunction::holder_cusp(double nu, double x0)
{
    if (!(nu > 0 && nu <= 1)) {
        throw std::invalid_argument("holder_cusp: nu must lie in (0,1]");
    }
    if (!(x0 >= 0)) {
        throw std::invalid_argument("holder_cusp: x0 must be >= 0");
    }
    FunctionMetadata m;
    m.uniformly_continuous = true;
    m.nondecreasing = x0 == 0;
    m.lipschitz = LipschitzClass{nu, 1};
    m.weight_bound = 1 + std::pow(x0, nu);
    TestFunction f(FunctionKind::holder_cusp, m);
    f.m_nu = nu;
    f.m_x0 = x0;
    return f;
}

TestFunction TestFunction::from_spec(const Spec &spec)
{
    if (spec.name == "const" || spec.name == "constant") {
        return constant(spec.c);
    }
    if (spec.name == "monomial") {
        return monomial(spec.p);
    }
    if (spec.name == "exp_decay") {
        return exp_decay(spec.c);
    }
    if (spec.name == "sine") {
        return sine();
    }
    if (spec.name == "abs_shift") {
        return abs_shift(spec.x0);
    }
    if (spec.name == "holder_cusp") {
        return holder_cusp(spec.nu, spec.x0);
    }
    throw std::invalid_argument("unknown function name '" + spec.name + "'");
}

double TestFunction::operator()(double t) const noexcept
{
    switch (m_kind) {
    case FunctionKind::constant:
        return m_c;
    case FunctionKind::monomial: {
        double r = 1;
        for (unsigned i = 0; i < m_p; ++i) {
            r *= t;
        }
        return r;
    }
    case FunctionKind::exp_decay:
        return std::exp(-m_c * t);
    case FunctionKind::sine:
        return std::sin(t);
    case FunctionKind::abs_shift:
        return std::abs(t - m_x0);
    case FunctionKind::holder_cusp:
        return std::pow(std::abs(t - m_x0), m_nu);
    }
    return 0;
}

std::string TestFunction::label() const
{
    std::ostringstream os;
    switch (m_kind) {
    case FunctionKind::constant:
        os << "const(c=" << m_c << ")";
        break;
    case FunctionKind::monomial:
        os << "monomial(p=" << m_p << ")";
        break;
    case FunctionKind::exp_decay:
        os << "exp_decay(c=" << m_c << ")";
        break;
    case FunctionKind::sine:
        os << "sine";
        break;
    case FunctionKind::abs_shift:
        os << "abs_shift(x0=" << m_x0 << ")";
        break;
    case FunctionKind::holder_cusp:
        os << "holder_cusp(nu=" << m_nu << ",x0=" << m_x0 << ")";
        break;
    }
    return os.str();
}

} // namespace qdunkl
