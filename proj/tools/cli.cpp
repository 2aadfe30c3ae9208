#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include <qdunkl/errors.hpp>
#include <qdunkl/experiments.hpp>
#include <qdunkl/moments.hpp>
#include <qdunkl/operators.hpp>
#include <qdunkl/parallel.hpp>
#include <qdunkl/report.hpp>
#include <qdunkl/verify.hpp>

namespace qdunkl::cli
{

using ojson = nlohmann::ordered_json;

namespace
{

const std::vector<unsigned> default_n_list{10, 25, 50, 100, 200};

[[noreturn]] void bad(const std::string &key, const std::string &why)
{
    throw std::invalid_argument("invalid " + key + ": " + why);
}

std::string num(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15e", v);
    return buf;
}

std::string short_num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return out + "\"";
}

ojson json_num(double v)
{
    return std::isfinite(v) ? ojson(v) : ojson(num(v));
}

// ---- JSON config ------------------------------------------------------------

double want_double(const ojson &v, const std::string &key)
{
    if (!v.is_number()) {
        bad(key, "expected a number");
    }
    return v.get<double>();
}

unsigned want_unsigned(const ojson &v, const std::string &key)
{
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffULL) {
        bad(key, "expected a non-negative integer");
    }
    return v.get<unsigned>();
}

bool want_bool(const ojson &v, const std::string &key)
{
    if (!v.is_boolean()) {
        bad(key, "expected true or false");
    }
    return v.get<bool>();
}

std::string want_string(const ojson &v, const std::string &key)
{
    if (!v.is_string()) {
        bad(key, "expected a string");
    }
    return v.get<std::string>();
}

std::vector<double> want_doubles(const ojson &v, const std::string &key)
{
    if (!v.is_array()) {
        bad(key, "expected an array of numbers");
    }
    std::vector<double> out;
    for (const auto &e : v) {
        out.push_back(want_double(e, key));
    }
    return out;
}

std::vector<unsigned> want_unsigneds(const ojson &v, const std::string &key)
{
    if (!v.is_array()) {
        bad(key, "expected an array of integers");
    }
    std::vector<unsigned> out;
    for (const auto &e : v) {
        out.push_back(want_unsigned(e, key));
    }
    return out;
}

// ---- validation -------------------------------------------------------------

void check_q(double q, const std::string &key)
{
    if (!(q > 0 && q < 1)) {
        bad(key, short_num(q) + " is outside (0, 1)");
    }
}

void check_mu(double mu, const std::string &key)
{
    if (!(mu > -0.5) || !std::isfinite(mu)) {
        bad(key, short_num(mu) + " must exceed -1/2");
    }
}

void check_shift(double v, const std::string &key)
{
    if (!(v >= 0) || !std::isfinite(v)) {
        bad(key, short_num(v) + " must be a finite number >= 0");
    }
}

void check_n(unsigned n, const std::string &key)
{
    if (n == 0) {
        bad(key, "must be >= 1");
    }
}

DomainGrid parse_grid(const std::string &spec, const std::string &key)
{
    try {
        return DomainGrid::parse(spec);
    } catch (const std::exception &e) {
        bad(key, "'" + spec + "': " + e.what());
    }
}

void check_common(const RunConfig &c)
{
    if (c.q) {
        check_q(*c.q, "q");
    }
    if (c.mu) {
        check_mu(*c.mu, "mu");
    }
    if (c.n) {
        check_n(*c.n, "n");
    }
    if (c.alpha) {
        check_shift(*c.alpha, "alpha");
    }
    if (c.beta) {
        check_shift(*c.beta, "beta");
    }
    if (c.n_list) {
        if (c.n_list->empty()) {
            bad("n_list", "is empty");
        }
        for (unsigned n : *c.n_list) {
            check_n(n, "n_list");
        }
    }
    for (const auto *list : {&c.q_list, &c.mu_list, &c.alpha_list, &c.beta_list}) {
        if (*list && (*list)->empty()) {
            bad("verify list", "is empty");
        }
    }
    if (c.q_list) {
        for (double q : *c.q_list) {
            check_q(q, "q_list");
        }
    }
    if (c.mu_list) {
        for (double mu : *c.mu_list) {
            check_mu(mu, "mu_list");
        }
    }
    if (c.alpha_list) {
        for (double a : *c.alpha_list) {
            check_shift(a, "alpha_list");
        }
    }
    if (c.beta_list) {
        for (double b : *c.beta_list) {
            check_shift(b, "beta_list");
        }
    }
    if (!(c.tol > 0 && c.tol < 1e-3)) {
        bad("tol", short_num(c.tol) + " is outside (0, 1e-3)");
    }
    if (!(c.domain_fraction > 0 && c.domain_fraction <= 1)) {
        bad("domain_fraction", short_num(c.domain_fraction) + " is outside (0, 1]");
    }
    if (c.modulus_refine == 0) {
        bad("modulus_refine", "must be >= 1");
    }
    if (c.format != "csv" && c.format != "json") {
        bad("format", "'" + c.format + "' (expected csv or json)");
    }
    if (c.bounds != "printed" && c.bounds != "composed") {
        bad("bounds", "'" + c.bounds + "' (expected printed or composed)");
    }
    if (!(c.nu > 0 && c.nu <= 1)) {
        bad("nu", short_num(c.nu) + " is outside (0, 1]");
    }
    if (!std::isfinite(c.c)) {
        bad("c", "must be finite");
    }
    if (c.x0 && !std::isfinite(*c.x0)) {
        bad("x0", "must be finite");
    }
    if (c.p && *c.p > 16) {
        bad("p", "monomial degree above 16");
    }
    parse_grid(c.grid, "grid");
    parse_grid(c.weighted_grid, "weighted_grid");
    if (!c.q) {
        try {
            QnScheme::parse(c.scheme);
        } catch (const std::exception &e) {
            bad("scheme", e.what());
        }
    }
    if (c.out) {
        namespace fs = std::filesystem;
        const fs::path dir = fs::path(*c.out).parent_path();
        if (c.out->empty() || (!dir.empty() && !fs::is_directory(dir))) {
            bad("out", "'" + *c.out + "': directory does not exist");
        }
    }
}

TestFunction make_function(const RunConfig &c, const std::string &fallback, unsigned fallback_p = 1)
{
    TestFunction::Spec s;
    s.name = c.f.value_or(fallback);
    s.c = c.c;
    s.p = c.p.value_or(c.f ? 1 : fallback_p);
    s.x0 = c.x0.value_or(s.name == "abs_shift" ? 1.0 : 0.5);
    s.nu = c.nu;
    try {
        return TestFunction::from_spec(s);
    } catch (const std::invalid_argument &e) {
        bad("f", e.what());
    }
}

QContext make_context(double q, double mu)
{
    try {
        return QContext(q, mu);
    } catch (const qdunkl::domain_error &e) {
        throw std::invalid_argument(std::string("invalid parameters: ") + e.what());
    }
}

void warn_params(double mu, double alpha, double beta, std::ostream &err)
{
    if (mu <= 0.5) {
        err << "warning: mu = " << short_num(mu) << " <= 1/2; the operator is stated for mu > 1/2\n";
    }
    if (alpha > beta) {
        err << "warning: alpha = " << short_num(alpha) << " > beta = " << short_num(beta)
            << "; outside the customary 0 <= alpha <= beta\n";
    }
}

void warn_function(const TestFunction &f, std::ostream &err)
{
    if (!f.metadata().nondecreasing) {
        err << "warning: f = " << f.label() << " is not nondecreasing; the operator is stated for nondecreasing f\n";
    }
}

void emit(const RunConfig &c, const std::string &text, std::ostream &out)
{
    if (c.out) {
        write_text_file(*c.out, text);
    } else {
        out << text;
    }
}

std::string config_csv(const ojson &config)
{
    std::string s;
    for (const auto &[k, v] : config.items()) {
        std::string val;
        if (v.is_string()) {
            val = v.get<std::string>();
        } else if (v.is_boolean()) {
            val = v.get<bool>() ? "true" : "false";
        } else if (v.is_number_integer()) {
            val = v.dump();
        } else if (v.is_number()) {
            val = num(v.get<double>());
        } else if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                val += (i ? ";" : "") + (v[i].is_number_integer() ? v[i].dump() : num(v[i].get<double>()));
            }
        }
        s += "# config." + k + "=" + val + "\n";
    }
    return s;
}

// ---- commands ---------------------------------------------------------------

int cmd_eval(const RunConfig &c, std::ostream &out, std::ostream &err)
{
    check_common(c);
    const unsigned n = c.n.value_or(10);
    const double mu = c.mu.value_or(1);
    const double alpha = c.alpha.value_or(0);
    const double beta = c.beta.value_or(0);
    const double q = c.q ? *c.q : QnScheme::parse(c.scheme).q(n);
    const StancuParams params(make_context(q, mu), n, alpha, beta);
    const TestFunction f = make_function(c, "const");
    const DomainGrid grid = parse_grid(c.grid, "grid");

    const double limit = params.domain_limit();
    std::vector<double> xs;
    for (double x : grid.values()) {
        if (x < c.domain_fraction * limit) {
            xs.push_back(x);
        }
    }
    if (xs.empty()) {
        bad("grid", "no point lies below " + short_num(c.domain_fraction * limit) +
                        " (domain limit 1/(1-q^n) = " + short_num(limit) + ")");
    }
    warn_params(mu, alpha, beta, err);
    warn_function(f, err);
    if (xs.size() < grid.points()) {
        err << "warning: " << grid.points() - xs.size() << " grid points at or beyond "
            << short_num(c.domain_fraction * limit) << " skipped (the operator exists for x < 1/(1-q^n) = "
            << short_num(limit) << ")\n";
    }

    const KantorovichOperator op(params, c.tol);
    struct Row {
        double T = 0, m1 = 0, phi = 0, lambda = 0, D = 0;
    };
    std::vector<Row> rows(xs.size());
    parallel_for(xs.size(), resolve_threads(c.threads), [&](std::size_t i) {
        const double x = xs[i];
        Row &r = rows[i];
        r.T = op.apply(f, x);
        if (c.moments) {
            r.m1 = moment_T1(x, params);
            r.phi = phi_n(x, params);
            r.lambda = op.apply([x](double t) { return (t - x) * (t - x); }, x);
        }
        if (c.dunkl) {
            r.D = op.apply_dunkl(f, x);
        }
    });

    ojson config;
    config["command"] = "eval";
    config["q"] = q;
    if (!c.q) {
        config["scheme"] = c.scheme;
    }
    config["mu"] = mu;
    config["n"] = n;
    config["alpha"] = alpha;
    config["beta"] = beta;
    config["function"] = f.label();
    config["grid"] = grid.label();
    config["tol"] = c.tol;
    config["domain_fraction"] = c.domain_fraction;
    config["x_limit"] = limit;
    config["moments"] = c.moments;
    config["dunkl"] = c.dunkl;

    std::string text;
    if (c.format == "csv") {
        text = config_csv(config);
        text += "x,T";
        text += c.moments ? ",moment_T1,phi_n,lambda_n" : "";
        text += c.dunkl ? ",D" : "";
        text += "\n";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const Row &r = rows[i];
            text += num(xs[i]) + "," + num(r.T);
            if (c.moments) {
                text += "," + num(r.m1) + "," + num(r.phi) + "," + num(r.lambda);
            }
            if (c.dunkl) {
                text += "," + num(r.D);
            }
            text += "\n";
        }
    } else {
        ojson j;
        j["config"] = config;
        ojson arr = ojson::array();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const Row &r = rows[i];
            ojson o;
            o["x"] = json_num(xs[i]);
            o["T"] = json_num(r.T);
            if (c.moments) {
                o["moment_T1"] = json_num(r.m1);
                o["phi_n"] = json_num(r.phi);
                o["lambda_n"] = json_num(r.lambda);
            }
            if (c.dunkl) {
                o["D"] = json_num(r.D);
            }
            arr.push_back(std::move(o));
        }
        j["rows"] = std::move(arr);
        text = j.dump(2) + "\n";
    }
    emit(c, text, out);
    return exit_ok;
}

template <typename T>
std::optional<std::vector<T>> list_or_single(const std::optional<std::vector<T>> &list, const std::optional<T> &single)
{
    if (list) {
        return list;
    }
    if (single) {
        return std::vector<T>{*single};
    }
    return std::nullopt;
}

int cmd_verify(const std::string &suite, const RunConfig &c, std::ostream &out, std::ostream &err)
{
    check_common(c);
    VerifyOptions o;
    o.q_list = list_or_single(c.q_list, c.q);
    o.mu_list = list_or_single(c.mu_list, c.mu);
    o.n_list = list_or_single(c.n_list, c.n);
    o.alpha_list = list_or_single(c.alpha_list, c.alpha);
    o.beta_list = list_or_single(c.beta_list, c.beta);
    o.grid = parse_grid(c.grid, "grid");
    o.tol = c.tol;
    o.domain_fraction = c.domain_fraction;
    o.strict_domain = c.strict_domain;
    o.form = c.bounds == "composed" ? BoundForm::composed : BoundForm::printed;
    o.seed = c.seed;
    o.threads = resolve_threads(c.threads);

    const VerifyResult r = verify_suite(suite, o);
    for (const auto &w : r.warnings) {
        err << "warning: " << w << "\n";
    }

    auto list_json = [](const auto &list) { return list ? ojson(*list) : ojson("suite default"); };
    ojson config;
    config["command"] = "verify";
    config["suite"] = suite;
    config["q_list"] = list_json(o.q_list);
    config["mu_list"] = list_json(o.mu_list);
    config["n_list"] = list_json(o.n_list);
    config["alpha_list"] = list_json(o.alpha_list);
    config["beta_list"] = list_json(o.beta_list);
    config["grid"] = o.grid.label();
    config["tol"] = o.tol;
    config["domain_fraction"] = o.domain_fraction;
    config["strict_domain"] = o.strict_domain;
    config["bounds"] = c.bounds;
    config["seed"] = o.seed;

    std::string text;
    if (c.format == "csv") {
        text = config_csv(config);
        for (const auto &w : r.warnings) {
            text += "# warning=" + w + "\n";
        }
        text += "# summary.checks=" + std::to_string(r.checks.size()) + "\n";
        text += "# summary.failures=" + std::to_string(r.failures()) + "\n";
        text += std::string("# summary.all_pass=") + (r.all_pass() ? "true" : "false") + "\n";
        text += "property,where,error,tolerance,pass\n";
        for (const auto &ch : r.checks) {
            text += csv_field(ch.property) + "," + csv_field(ch.where) + "," + num(ch.error) + "," +
                    num(ch.tolerance) + "," + (ch.pass ? "1" : "0") + "\n";
        }
    } else {
        ojson j;
        j["config"] = config;
        j["warnings"] = r.warnings;
        ojson arr = ojson::array();
        for (const auto &ch : r.checks) {
            ojson e;
            e["property"] = ch.property;
            e["where"] = ch.where;
            e["error"] = json_num(ch.error);
            e["tolerance"] = json_num(ch.tolerance);
            e["pass"] = ch.pass;
            arr.push_back(std::move(e));
        }
        j["checks"] = std::move(arr);
        j["summary"] = {{"checks", r.checks.size()}, {"failures", r.failures()}, {"all_pass", r.all_pass()}};
        text = j.dump(2) + "\n";
    }
    emit(c, text, out);
    err << "verify " << suite << ": " << r.checks.size() << " checks, " << r.failures() << " failed\n";
    return r.all_pass() ? exit_ok : exit_bound_failure;
}

int cmd_experiment(const std::string &name, const RunConfig &c, std::ostream &out, std::ostream &err)
{
    check_common(c);
    ExperimentConfig e;
    e.scheme = c.q ? QnScheme::fixed(*c.q) : QnScheme::parse(c.scheme);
    e.n_list = c.n_list ? *c.n_list : (c.n ? std::vector<unsigned>{*c.n} : default_n_list);
    for (std::size_t i = 1; i < e.n_list.size(); ++i) {
        if (e.n_list[i] <= e.n_list[i - 1]) {
            bad("n_list", "must be strictly increasing");
        }
    }
    e.mu = c.mu.value_or(1);
    e.alpha = c.alpha.value_or(0);
    e.beta = c.beta.value_or(0);
    make_context(e.scheme.q(e.n_list.front()), e.mu);
    e.grid = parse_grid(c.grid, "grid");
    e.weighted_grid = parse_grid(c.weighted_grid, "weighted_grid");
    e.tol = c.tol;
    e.domain_fraction = c.domain_fraction;
    e.modulus_refine = c.modulus_refine;
    e.threads = resolve_threads(c.threads);

    std::string fallback = "const";
    unsigned fallback_p = 1;
    if (name == "modulus" || name == "smooth") {
        fallback = "exp_decay";
    } else if (name == "lipschitz") {
        fallback = "holder_cusp";
    } else if (name == "second_order") {
        fallback = "sine";
    } else if (name == "weighted") {
        fallback = "monomial";
        fallback_p = 2;
    }
    const TestFunction f = make_function(c, fallback, fallback_p);

    warn_params(e.mu, e.alpha, e.beta, err);
    if (name == "korovkin") {
        if (c.f) {
            err << "warning: korovkin uses its own test functions; f is ignored\n";
        }
    } else {
        warn_function(f, err);
    }

    const ExperimentReport r = run_experiment(name, f, e);
    for (const auto &[k, v] : r.config) {
        if (k == "domain_clipped" && std::get<bool>(v)) {
            err << "warning: grid points at or beyond " << short_num(e.domain_fraction)
                << " / (1 - q_n^n) were dropped; the operator exists only below 1/(1 - q_n^n)\n";
        }
    }
    emit(c, c.format == "csv" ? to_csv(r) : to_json(r), out);
    err << "experiment " << name << ": all_pass=" << (r.summary.all_pass ? "true" : "false")
        << " max_ratio=" << short_num(r.summary.max_ratio) << "\n";
    if (is_estimate_experiment(name)) {
        return exit_ok;
    }
    return r.summary.all_pass ? exit_ok : exit_bound_failure;
}

std::string dashed(std::string key)
{
    for (char &ch : key) {
        ch = ch == '_' ? '-' : ch;
    }
    return key;
}

} // namespace

void apply_json_config(RunConfig &cfg, const std::string &json_text)
{
    ojson j;
    try {
        j = ojson::parse(json_text);
    } catch (const ojson::parse_error &e) {
        throw std::invalid_argument(std::string("malformed config JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("config JSON must be an object");
    }
    for (const auto &[key, v] : j.items()) {
        if (key == "q") {
            cfg.q = want_double(v, key);
        } else if (key == "scheme") {
            cfg.scheme = want_string(v, key);
        } else if (key == "mu") {
            cfg.mu = want_double(v, key);
        } else if (key == "n") {
            cfg.n = want_unsigned(v, key);
        } else if (key == "n_list") {
            cfg.n_list = want_unsigneds(v, key);
        } else if (key == "alpha") {
            cfg.alpha = want_double(v, key);
        } else if (key == "beta") {
            cfg.beta = want_double(v, key);
        } else if (key == "q_list") {
            cfg.q_list = want_doubles(v, key);
        } else if (key == "mu_list") {
            cfg.mu_list = want_doubles(v, key);
        } else if (key == "alpha_list") {
            cfg.alpha_list = want_doubles(v, key);
        } else if (key == "beta_list") {
            cfg.beta_list = want_doubles(v, key);
        } else if (key == "f") {
            cfg.f = want_string(v, key);
        } else if (key == "c") {
            cfg.c = want_double(v, key);
        } else if (key == "p") {
            cfg.p = want_unsigned(v, key);
        } else if (key == "x0") {
            cfg.x0 = want_double(v, key);
        } else if (key == "nu") {
            cfg.nu = want_double(v, key);
        } else if (key == "grid") {
            cfg.grid = want_string(v, key);
        } else if (key == "weighted_grid") {
            cfg.weighted_grid = want_string(v, key);
        } else if (key == "tol") {
            cfg.tol = want_double(v, key);
        } else if (key == "domain_fraction") {
            cfg.domain_fraction = want_double(v, key);
        } else if (key == "modulus_refine") {
            cfg.modulus_refine = want_unsigned(v, key);
        } else if (key == "bounds") {
            cfg.bounds = want_string(v, key);
        } else if (key == "strict_domain") {
            cfg.strict_domain = want_bool(v, key);
        } else if (key == "moments") {
            cfg.moments = want_bool(v, key);
        } else if (key == "dunkl") {
            cfg.dunkl = want_bool(v, key);
        } else if (key == "out") {
            cfg.out = want_string(v, key);
        } else if (key == "format") {
            cfg.format = want_string(v, key);
        } else if (key == "threads") {
            cfg.threads = want_unsigned(v, key);
        } else if (key == "seed") {
            if (!v.is_number_unsigned()) {
                bad(key, "expected a non-negative integer");
            }
            cfg.seed = v.get<std::uint64_t>();
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"q-Dunkl Kantorovich-Szasz-Mirakjan operators: evaluation, invariant checks and experiments",
                 "qdunkl"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    // Flags live on the top-level app so `--help` lists all of them; the
    // subcommands fall through to it.
    std::string config_path;
    double q = 0, mu = 0, alpha = 0, beta = 0, c = 0, x0 = 0, nu = 0, tol = 0, domain_fraction = 0;
    unsigned n = 0, p = 0, modulus_refine = 0, threads = 0;
    std::uint64_t seed = 0;
    std::vector<unsigned> n_list;
    std::vector<double> q_list, mu_list, alpha_list, beta_list;
    std::string f, grid, weighted_grid, out_path, format, scheme, bounds;
    bool strict_domain = false, moments = false, dunkl = false;

    struct Flag {
        std::string key;
        CLI::Option *opt;
    };
    std::vector<Flag> flags;
    auto add = [&](const std::string &key, auto &var, const std::string &help) {
        CLI::Option *o = app.add_option("--" + dashed(key), var, help);
        flags.push_back({key, o});
        return o;
    };
    auto add_flag = [&](const std::string &key, bool &var, const std::string &help) {
        CLI::Option *o = app.add_flag("--" + dashed(key), var, help);
        flags.push_back({key, o});
        return o;
    };

    app.add_option("--config", config_path, "JSON config file; flags override its keys");
    add("q", q, "fixed q in (0,1); default: q_n from --scheme");
    add("scheme", scheme, "q_n scheme: one_minus_inv[:c] | one_minus_inv_sqrt | fixed:q (default one_minus_inv)");
    add("mu", mu, "Dunkl parameter mu > -1/2 (default 1)");
    add("n", n, "operator index n >= 1 (default 10)");
    add("n_list", n_list, "comma-separated increasing n values (default 10,25,50,100,200)")->delimiter(',');
    add("alpha", alpha, "Stancu alpha >= 0 (default 0)");
    add("beta", beta, "Stancu beta >= 0 (default 0)");
    add("q_list", q_list, "verify: comma-separated q values")->delimiter(',');
    add("mu_list", mu_list, "verify: comma-separated mu values")->delimiter(',');
    add("alpha_list", alpha_list, "verify: comma-separated alpha values")->delimiter(',');
    add("beta_list", beta_list, "verify: comma-separated beta values")->delimiter(',');
    add("f", f, "test function: const | monomial | exp_decay | sine | abs_shift | holder_cusp");
    add("c", c, "const value / exp_decay rate (default 1)");
    add("p", p, "monomial degree (default 1)");
    add("x0", x0, "abs_shift / holder_cusp centre (default 1 / 0.5)");
    add("nu", nu, "holder_cusp exponent in (0,1] (default 0.5)");
    add("grid", grid, "evaluation grid a:b:N (default 0:4:201)");
    add("weighted_grid", weighted_grid, "weighted-experiment grid a:b:N (default 0:40:801)");
    add("tol", tol, "series tolerance (default 1e-12)");
    add("domain_fraction", domain_fraction, "keep x < fraction / (1 - q^n) (default 0.95)");
    add("modulus_refine", modulus_refine, "modulus grid refinement factor (default 10)");
    add("bounds", bounds, "verify moments: printed | composed (default printed)");
    add_flag("strict_domain", strict_domain, "verify: report skipped out-of-domain points as failures");
    add_flag("moments", moments, "eval: add moment_T1, phi_n and lambda_n columns");
    add_flag("dunkl", dunkl, "eval: add the D_{n,q} column");
    add("out", out_path, "output file (default stdout)");
    add("format", format, "csv | json (default csv)");
    add("threads", threads, "worker threads (default QDUNKL_THREADS, else 1)");
    add("seed", seed, "seed for randomized checks (default 1)");

    auto *eval = app.add_subcommand("eval", "Evaluate T*_{n,q}(f; x) on a grid")->fallthrough();
    std::string suite;
    auto *verify = app.add_subcommand("verify", "Run an invariant suite; nonzero exit on any failure")->fallthrough();
    verify->add_option("suite", suite, "moments | integrals | gamma | moduli")
        ->required()
        ->check(CLI::IsMember({"moments", "integrals", "gamma", "moduli"}));
    std::string experiment;
    auto *exper = app.add_subcommand("experiment", "Run a convergence experiment and write its report")->fallthrough();
    exper->add_option("name", experiment, "korovkin | modulus | lipschitz | smooth | second_order | weighted")
        ->required()
        ->check(CLI::IsMember({"korovkin", "modulus", "lipschitz", "smooth", "second_order", "weighted"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config_error;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path, std::ios::binary);
            if (!in) {
                throw std::invalid_argument("cannot read config file '" + config_path + "'");
            }
            const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            apply_json_config(cfg, text);
        }
        for (const auto &fl : flags) {
            if (fl.opt->count() == 0) {
                continue;
            }
            const std::string &k = fl.key;
            if (k == "q") cfg.q = q;
            else if (k == "scheme") cfg.scheme = scheme;
            else if (k == "mu") cfg.mu = mu;
            else if (k == "n") cfg.n = n;
            else if (k == "n_list") cfg.n_list = n_list;
            else if (k == "alpha") cfg.alpha = alpha;
            else if (k == "beta") cfg.beta = beta;
            else if (k == "q_list") cfg.q_list = q_list;
            else if (k == "mu_list") cfg.mu_list = mu_list;
            else if (k == "alpha_list") cfg.alpha_list = alpha_list;
            else if (k == "beta_list") cfg.beta_list = beta_list;
            else if (k == "f") cfg.f = f;
            else if (k == "c") cfg.c = c;
            else if (k == "p") cfg.p = p;
            else if (k == "x0") cfg.x0 = x0;
            else if (k == "nu") cfg.nu = nu;
            else if (k == "grid") cfg.grid = grid;
            else if (k == "weighted_grid") cfg.weighted_grid = weighted_grid;
            else if (k == "tol") cfg.tol = tol;
            else if (k == "domain_fraction") cfg.domain_fraction = domain_fraction;
            else if (k == "modulus_refine") cfg.modulus_refine = modulus_refine;
            else if (k == "bounds") cfg.bounds = bounds;
            else if (k == "strict_domain") cfg.strict_domain = strict_domain;
            else if (k == "moments") cfg.moments = moments;
            else if (k == "dunkl") cfg.dunkl = dunkl;
            else if (k == "out") cfg.out = out_path;
            else if (k == "format") cfg.format = format;
            else if (k == "threads") cfg.threads = threads;
            else if (k == "seed") cfg.seed = seed;
        }

        if (*eval) {
            return cmd_eval(cfg, out, err);
        }
        if (*verify) {
            return cmd_verify(suite, cfg, out, err);
        }
        return cmd_experiment(experiment, cfg, out, err);
    } catch (const std::invalid_argument &e) {
        err << "config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const qdunkl::domain_error &e) {
        err << "numeric error: " << e.what() << "\n";
        return exit_numeric_error;
    } catch (const qdunkl::overflow_error &e) {
        err << "numeric error: " << e.what() << "\n";
        return exit_numeric_error;
    } catch (const qdunkl::convergence_error &e) {
        err << "numeric error: " << e.what() << "\n";
        return exit_numeric_error;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    }
}

} // namespace qdunkl::cli
