#ifndef QDUNKL_EXPERIMENTS_HPP
#define QDUNKL_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include <qdunkl/moduli.hpp>
#include <qdunkl/qcore.hpp>
#include <qdunkl/report.hpp>
#include <qdunkl/test_function.hpp>

namespace qdunkl
{

// q_n sequences with q_n -> 1:
//   one_minus_inv(c)     q_n = 1 - 1/(n + c),   q_n^n -> e^{-1}
//   one_minus_inv_sqrt   q_n = 1 - 1/sqrt(n+1), q_n^n -> 0
//   fixed(q)             q_n = q (no limit; for single-q runs)
class QnScheme
{
public:
    enum class Kind { one_minus_inv, one_minus_inv_sqrt, fixed };

    static QnScheme one_minus_inv(double offset = 1);
    static QnScheme one_minus_inv_sqrt();
    static QnScheme fixed(double q);
    // "one_minus_inv", "one_minus_inv:2", "one_minus_inv_sqrt", "fixed:0.9".
    static QnScheme parse(const std::string &spec);

    double q(unsigned n) const;
    // lim q_n^n; NaN for fixed (q^n -> 0 but q_n does not tend to 1).
    double limit_a() const;
    Kind kind() const noexcept { return m_kind; }
    double param() const noexcept { return m_param; }
    std::string label() const;

private:
    QnScheme(Kind kind, double param) : m_kind(kind), m_param(param) {}

    Kind m_kind;
    double m_param;
};

struct ExperimentConfig {
    QnScheme scheme = QnScheme::one_minus_inv();
    std::vector<unsigned> n_list{10, 25, 50, 100, 200};
    double mu = 1;
    double alpha = 0;
    double beta = 0;
    DomainGrid grid{0, 4, 201};
    DomainGrid weighted_grid{0, 40, 801};
    double tol = default_tol;
    // Grid points past domain_fraction / (1 - q_n^n) are dropped: the operator
    // is only defined for x < 1/(1 - q_n^n).
    double domain_fraction = 0.95;
    // Moduli on the large side of a bound use a grid this many times finer.
    unsigned modulus_refine = 10;
    unsigned threads = 1;
};

// Sup errors |T*(t^j) - x^j| for j = 0,1,2 and rho-weighted errors of t^2 and
// sine. Each row carries a closed-form majorant as rhs; the summary records
// the decrease along n_list.
ExperimentReport korovkin_run(const ExperimentConfig &cfg);

// |T*f - f| <= (1 + sqrt(phi_n)) omega(f, 1/sqrt([n]_q)). Needs uniform continuity.
ExperimentReport rate_bound_modulus(const TestFunction &f, const ExperimentConfig &cfg);

// |T*f - f| <= M lambda_n^{nu/2}. Needs Lipschitz metadata.
ExperimentReport rate_bound_lipschitz(const TestFunction &f, const ExperimentConfig &cfg);

// |T*g - g| <= (|T*(t-x)| + phi_n/2) ||g||_{C_B^2}. Needs C_B^2 norms.
ExperimentReport rate_bound_smooth(const TestFunction &g, const ExperimentConfig &cfg);

// Empirical M* = max_x |T*f - f| / (2 {omega_2(f, sqrt(d_x)) + min(1, d_x) ||f||}),
// d_x = (2|T*(t-x)| + lambda_n)/4. Meant for bounded f; an unbounded, uniformly
// continuous f is accepted with ||f|| taken as the sup over the modulus grid.
ExperimentReport rate_bound_second_order(const TestFunction &f, const ExperimentConfig &cfg);

// Empirical C* = sup_x |T*f - f|/(1+x^2) / ((1 + 1/[n]_q) Omega(f, 1/sqrt([n]_q))).
// Needs the weight bound |f| <= M_f (1 + x^2).
ExperimentReport rate_bound_weighted(const TestFunction &f, const ExperimentConfig &cfg);

// Names: korovkin, modulus, lipschitz, smooth, second_order, weighted.
// Throws std::invalid_argument for an unknown name or unsuitable f.
ExperimentReport run_experiment(const std::string &name, const TestFunction &f, const ExperimentConfig &cfg);
bool is_estimate_experiment(const std::string &name);

} // namespace qdunkl

#endif
