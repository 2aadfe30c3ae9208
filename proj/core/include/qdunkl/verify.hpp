#ifndef QDUNKL_VERIFY_HPP
#define QDUNKL_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <qdunkl/moduli.hpp>
#include <qdunkl/moments.hpp>
#include <qdunkl/qcore.hpp>

namespace qdunkl
{

// Parameter sweep for the invariant suites. Unset lists fall back to each
// suite's own matrix:
//   gamma      q {0.3,0.5,0.9} x mu {0.75,1,2}
//   integrals  q {0.3,0.5,0.9} x mu {0.75,1} x n {1,5,20}
//   moments    q {0.5,0.9} x mu {0.75,1} x n {5,20,100} x alpha {0,1} x beta {0,2}
struct VerifyOptions {
    std::optional<std::vector<double>> q_list;
    std::optional<std::vector<double>> mu_list;
    std::optional<std::vector<unsigned>> n_list;
    std::optional<std::vector<double>> alpha_list;
    std::optional<std::vector<double>> beta_list;
    DomainGrid grid{0, 4, 201};
    double tol = default_tol;
    // Points at or past domain_fraction / (1 - q^n) are skipped. With
    // strict_domain the skipped points are reported as a failed check.
    double domain_fraction = 0.95;
    bool strict_domain = false;
    BoundForm form = BoundForm::printed;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

// One property over one parameter case; error is the worst deviation (or
// bound violation) seen, pass iff error <= tolerance.
struct VerifyCheck {
    std::string property;
    std::string where;
    double error = 0;
    double tolerance = 0;
    bool pass = true;
};

struct VerifyResult {
    std::string suite;
    std::vector<VerifyCheck> checks;
    std::vector<std::string> warnings;

    void add(std::string property, std::string where, double error, double tolerance);
    bool all_pass() const noexcept;
    std::size_t failures() const noexcept;
    // Worst error / tolerance among checks whose property starts with `prefix`.
    double worst(const std::string &prefix) const;
    bool passed(const std::string &prefix) const;
};

VerifyResult verify_gamma(const VerifyOptions &opts = {});
VerifyResult verify_integrals(const VerifyOptions &opts = {});
VerifyResult verify_moments(const VerifyOptions &opts = {});
VerifyResult verify_moduli(const VerifyOptions &opts = {});

// "gamma", "integrals", "moments" or "moduli"; std::invalid_argument otherwise.
VerifyResult verify_suite(const std::string &name, const VerifyOptions &opts = {});

} // namespace qdunkl

#endif
