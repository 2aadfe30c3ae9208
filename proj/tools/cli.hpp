#ifndef QDUNKL_TOOLS_CLI_HPP
#define QDUNKL_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qdunkl::cli
{

enum ExitCode : int {
    exit_ok = 0,
    exit_bound_failure = 1,
    exit_config_error = 2,
    exit_numeric_error = 3,
};

// Everything a run can be configured with. JSON keys use the field names;
// each has a flag with '_' spelled '-'.
struct RunConfig {
    // Fixed q; when unset the q_n scheme decides (q = q_n(n) for eval).
    std::optional<double> q;
    std::string scheme = "one_minus_inv";
    // unset: mu 1, n 10, alpha = beta = 0 (the verify suites sweep instead)
    std::optional<double> mu;
    std::optional<unsigned> n;
    // experiments default to {10, 25, 50, 100, 200}
    std::optional<std::vector<unsigned>> n_list;
    std::optional<double> alpha;
    std::optional<double> beta;

    // verify sweeps; unset means the single value when given, else the
    // suite's own matrix
    std::optional<std::vector<double>> q_list;
    std::optional<std::vector<double>> mu_list;
    std::optional<std::vector<double>> alpha_list;
    std::optional<std::vector<double>> beta_list;

    // test function; unset f picks a per-command default
    std::optional<std::string> f;
    double c = 1;
    std::optional<unsigned> p;
    std::optional<double> x0;
    double nu = 0.5;

    std::string grid = "0:4:201";
    std::string weighted_grid = "0:40:801";
    double tol = 1e-12;
    double domain_fraction = 0.95;
    unsigned modulus_refine = 10;
    std::string bounds = "printed";
    bool strict_domain = false;

    // eval extras: moment_T1 / phi_n / lambda_n columns, D column
    bool moments = false;
    bool dunkl = false;

    std::optional<std::string> out;
    std::string format = "csv";
    // 0: QDUNKL_THREADS, else 1
    unsigned threads = 0;
    std::uint64_t seed = 1;
};

// Overlays the keys of a JSON object onto cfg. std::invalid_argument on
// malformed JSON, unknown keys or mistyped values.
void apply_json_config(RunConfig &cfg, const std::string &json_text);

// Entry point shared by the executable and the tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qdunkl::cli

#endif
