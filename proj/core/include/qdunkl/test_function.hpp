#ifndef QDUNKL_TEST_FUNCTION_HPP
#define QDUNKL_TEST_FUNCTION_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace qdunkl
{

enum class FunctionKind { constant, monomial, exp_decay, sine, abs_shift, holder_cusp };

// |f(a) - f(b)| <= M |a - b|^nu on [0, inf)
struct LipschitzClass {
    double nu = 1;
    double M = 1;
};

struct FunctionMetadata {
    bool bounded = false;
    bool uniformly_continuous = false;
    bool nondecreasing = false;
    std::optional<LipschitzClass> lipschitz;
    // sup|g|, sup|g'|, sup|g''| on [0, inf) for members of C_B^2
    std::optional<std::array<double, 3>> cb2_norms;
    // M_f with |f(x)| <= M_f (1 + x^2)
    std::optional<double> weight_bound;
};

// Closed family of test functions with known regularity:
//
//   constant(c)        c
//   monomial(p)        t^p
//   exp_decay(c)       exp(-c t)
//   sine               sin t
//   abs_shift(x0)      |t - x0|
//   holder_cusp(nu,x0) |t - x0|^nu
class TestFunction
{
public:
    static TestFunction constant(double c = 1);
    static TestFunction monomial(unsigned p);
    static TestFunction exp_decay(double c = 1);
    static TestFunction sine();
    static TestFunction abs_shift(double x0 = 1);
    static TestFunction holder_cusp(double nu = 0.5, double x0 = 0.5);

    // Names as accepted by the CLI: const, monomial, exp_decay, sine,
    // abs_shift, holder_cusp. Throws std::invalid_argument for anything else.
    struct Spec {
        std::string name = "const";
        double c = 1;
        unsigned p = 1;
        double x0 = 0.5;
        double nu = 0.5;
    };
    static TestFunction from_spec(const Spec &spec);

    double operator()(double t) const noexcept;

    FunctionKind kind() const noexcept { return m_kind; }
    const FunctionMetadata &metadata() const noexcept { return m_meta; }
    // e.g. "holder_cusp(nu=0.5,x0=0.5)"
    std::string label() const;

    double c() const noexcept { return m_c; }
    unsigned p() const noexcept { return m_p; }
    double x0() const noexcept { return m_x0; }
    double nu() const noexcept { return m_nu; }

private:
    TestFunction(FunctionKind kind, FunctionMetadata meta) : m_kind(kind), m_meta(std::move(meta)) {}

    FunctionKind m_kind;
    FunctionMetadata m_meta;
    double m_c = 0;
    unsigned m_p = 0;
    double m_x0 = 0;
    double m_nu = 1;
};

} // namespace qdunkl

#endif
