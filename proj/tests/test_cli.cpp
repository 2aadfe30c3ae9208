#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "qdunkl");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = qdunkl::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// Data rows of a CSV document (comment lines and header dropped), split on ','.
std::vector<std::vector<std::string>> csv_rows(const std::string &text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

fs::path scratch_dir()
{
    const fs::path d = fs::temp_directory_path() / "qdunkl_cli_test";
    fs::create_directories(d);
    return d;
}

void write(const fs::path &p, const std::string &s)
{
    std::ofstream(p, std::ios::binary) << s;
}

} // namespace

TEST_CASE("eval of the constant function gives 1")
{
    const Result r = run({"eval", "--f", "const", "--n", "10"});
    CHECK(r.code == 0);
    const auto rows = csv_rows(r.out);
    CHECK(rows.size() > 10);
    for (const auto &row : rows) {
        CHECK(std::abs(std::stod(row[1]) - 1) < 1e-10);
    }
    // the default [0,4] grid reaches past the domain: the skip is reported
    CHECK(r.err.find("skipped") != std::string::npos);
}

TEST_CASE("eval of t matches the moment_T1 column")
{
    const Result r = run({"eval", "--f", "monomial", "--p", "1", "--alpha", "0", "--beta", "0", "--moments"});
    CHECK(r.code == 0);
    CHECK(r.out.find("x,T,moment_T1,phi_n,lambda_n\n") != std::string::npos);
    for (const auto &row : csv_rows(r.out)) {
        const double x = std::stod(row[0]);
        CHECK(std::abs(std::stod(row[1]) - std::stod(row[2])) <= 1e-9 * (1 + x));
        CHECK(std::stod(row[4]) <= std::stod(row[3]) + 1e-9);
    }
}

TEST_CASE("eval json output and config precedence")
{
    const fs::path dir = scratch_dir();
    write(dir / "cfg.json", R"({"f": "exp_decay", "n": 10, "c": 2, "grid": "0:1:5"})");
    const fs::path out = dir / "eval.json";
    const Result r = run({"eval", "--config", (dir / "cfg.json").string(), "--n", "12", "--format", "json", "--out",
                          out.string(), "--dunkl"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["config"]["n"] == 12);
    CHECK(j["config"]["function"] == "exp_decay(c=2)");
    CHECK(j["rows"].size() == 5);
    CHECK(j["rows"][0].contains("D"));
    fs::remove_all(dir);
}

TEST_CASE("config errors exit 2 and write nothing")
{
    const fs::path dir = scratch_dir();
    const fs::path out = dir / "never.csv";
    write(dir / "bad.json", R"({"f": "const", "n": 10)");
    Result r = run({"eval", "--config", (dir / "bad.json").string(), "--out", out.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("malformed") != std::string::npos);
    CHECK_FALSE(fs::exists(out));
    CHECK_FALSE(fs::exists(out.string() + ".tmp"));

    write(dir / "unknown.json", R"({"f": "const", "bogus": 1})");
    r = run({"eval", "--config", (dir / "unknown.json").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("bogus") != std::string::npos);

    write(dir / "typed.json", R"({"n": -3})");
    CHECK(run({"eval", "--config", (dir / "typed.json").string()}).code == 2);

    r = run({"eval", "--q", "1.5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("q") != std::string::npos);
    CHECK(run({"eval", "--mu", "-0.7"}).code == 2);
    CHECK(run({"eval", "--n", "0"}).code == 2);
    CHECK(run({"eval", "--alpha", "-1"}).code == 2);
    CHECK(run({"eval", "--f", "nope"}).code == 2);
    CHECK(run({"eval", "--grid", "0:4"}).code == 2);
    CHECK(run({"eval", "--format", "xml"}).code == 2);
    CHECK(run({"eval", "--out", (dir / "no" / "such" / "dir.csv").string()}).code == 2);
    CHECK(run({"experiment", "korovkin", "--n-list", "50,25"}).code == 2);
    CHECK(run({"experiment", "nope"}).code == 2);
    CHECK(run({"verify", "nope"}).code == 2);
    CHECK(run({"experiment", "smooth", "--f", "abs_shift"}).code == 2);
    CHECK(run({}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("numeric errors exit 3")
{
    // q this close to 1 needs ~1e10 Jackson terms per cell
    const Result r = run({"eval", "--q", "0.999999999", "--n", "1", "--grid", "0:0.5:2"});
    CHECK(r.code == 3);
    CHECK(r.err.find("numeric error") != std::string::npos);
}

TEST_CASE("help lists every flag")
{
    const Result r = run({"--help"});
    CHECK(r.code == 0);
    for (const char *flag : {"--config", "--q", "--mu", "--n", "--n-list", "--alpha", "--beta", "--f", "--grid", "--tol",
                             "--out", "--format", "--threads", "--seed", "--scheme", "--p", "--c", "--x0", "--nu",
                             "--weighted-grid", "--domain-fraction", "--modulus-refine", "--bounds", "--strict-domain",
                             "--moments", "--dunkl", "--q-list", "--mu-list", "--alpha-list", "--beta-list"}) {
        CHECK_MESSAGE(r.out.find(std::string(flag) + " ") != std::string::npos, flag);
    }
}

TEST_CASE("verify suites")
{
    Result r = run({"verify", "gamma"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# summary.failures=0") != std::string::npos);
    r = run({"verify", "integrals"});
    CHECK(r.code == 0);
    r = run({"verify", "moduli"});
    CHECK(r.code == 0);
    r = run({"verify", "moments", "--bounds", "composed"});
    CHECK(r.code == 0);

    r = run({"verify", "moments", "--mu", "0.6", "--q", "0.5", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning: mu=0.6") != std::string::npos);
    CHECK(r.out.find("# warning=") != std::string::npos);

    // the usual statement of the t^2 bracket fails on part of the matrix
    r = run({"verify", "moments", "--format", "json"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["failures"].get<int>() > 0);
}

TEST_CASE("experiments")
{
    Result r = run({"experiment", "korovkin", "--n-list", "25,50,100,200"});
    CHECK(r.code == 0);
    std::vector<double> t2;
    for (const auto &row : csv_rows(r.out)) {
        if (row[3] == "t^2_sup_err") {
            t2.push_back(std::stod(row[4]));
        }
    }
    REQUIRE(t2.size() == 4);
    for (std::size_t i = 1; i < t2.size(); ++i) {
        CHECK(t2[i] < t2[i - 1]);
    }

    r = run({"experiment", "lipschitz", "--f", "holder_cusp", "--nu", "0.5", "--n-list", "10,20", "--grid", "0:4:81"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# summary.all_pass=true") != std::string::npos);
    CHECK(r.err.find("not nondecreasing") != std::string::npos);

    r = run({"experiment", "weighted", "--n-list", "10,50", "--weighted-grid", "0:40:161"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",C_star,") != std::string::npos);
    CHECK(r.out.find("# summary.C_star=") != std::string::npos);

    r = run({"experiment", "second_order", "--f", "abs_shift", "--n", "50", "--grid", "0:4:81"});
    CHECK(r.code == 0);
    CHECK(r.out.find("abs_shift(x0=1)") != std::string::npos);
}

TEST_CASE("experiment output does not depend on the thread count")
{
    const std::vector<std::string> base{"experiment", "modulus", "--f", "sine", "--n-list", "10,25", "--grid", "0:4:81"};
    auto a = base;
    a.insert(a.end(), {"--threads", "1"});
    auto b = base;
    b.insert(b.end(), {"--threads", "3"});
    const Result ra = run(a);
    const Result rb = run(b);
    CHECK(ra.code == 0);
    CHECK(ra.out == rb.out);
}
