#include <qdunkl/report.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace qdunkl
{

using ojson = nlohmann::ordered_json;

namespace
{

std::string fmt_num(double v)
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

std::string fmt_value(const ConfigValue &v)
{
    struct Visitor {
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return fmt_num(d); }
        std::string operator()(const std::string &s) const { return s; }
        std::string operator()(const std::vector<double> &xs) const
        {
            std::string out;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                out += (i ? ";" : "") + fmt_num(xs[i]);
            }
            return out;
        }
    };
    return std::visit(Visitor{}, v);
}

// JSON has no non-finite numbers; those travel as strings.
ojson num_to_json(double v)
{
    if (std::isfinite(v)) {
        return v;
    }
    return fmt_num(v);
}

double num_from_json(const ojson &j)
{
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") {
            return std::numeric_limits<double>::infinity();
        }
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
        if (s == "nan") {
            return std::numeric_limits<double>::quiet_NaN();
        }
        throw std::invalid_argument("report json: bad number '" + s + "'");
    }
    return j.get<double>();
}

ojson value_to_json(const ConfigValue &v)
{
    struct Visitor {
        ojson operator()(bool b) const { return b; }
        ojson operator()(std::int64_t i) const { return i; }
        ojson operator()(double d) const { return num_to_json(d); }
        ojson operator()(const std::string &s) const { return s; }
        ojson operator()(const std::vector<double> &xs) const
        {
            ojson a = ojson::array();
            for (double x : xs) {
                a.push_back(num_to_json(x));
            }
            return a;
        }
    };
    return std::visit(Visitor{}, v);
}

ConfigValue value_from_json(const ojson &j)
{
    if (j.is_boolean()) {
        return j.get<bool>();
    }
    if (j.is_number_integer()) {
        return j.get<std::int64_t>();
    }
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_array()) {
        std::vector<double> xs;
        for (const auto &e : j) {
            xs.push_back(num_from_json(e));
        }
        return xs;
    }
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "-inf" || s == "nan") {
        return num_from_json(j);
    }
    return s;
}

ojson entries_to_json(const ConfigEntries &entries)
{
    ojson o = ojson::object();
    for (const auto &[k, v] : entries) {
        o[k] = value_to_json(v);
    }
    return o;
}

ConfigEntries entries_from_json(const ojson &o)
{
    ConfigEntries out;
    for (const auto &[k, v] : o.items()) {
        out.emplace_back(k, value_from_json(v));
    }
    return out;
}

} // namespace

bool bound_holds(double lhs, double rhs) noexcept
{
    return lhs <= rhs * (1 + 1e-9) + 1e-12;
}

ReportRow &ExperimentReport::add(unsigned n, double q, std::optional<double> x, std::string quantity, double lhs,
                                 double rhs)
{
    ReportRow r;
    r.n = n;
    r.q = q;
    r.x = x;
    r.quantity = std::move(quantity);
    r.lhs = lhs;
    r.rhs = rhs;
    if (bound_experiment) {
        r.ratio = lhs / std::max(rhs, 1e-300);
        r.pass = bound_holds(lhs, rhs);
    } else {
        r.ratio = rhs > 0 ? lhs / rhs : (lhs == 0 ? 0 : std::numeric_limits<double>::infinity());
        r.pass = std::isfinite(r.ratio);
    }
    rows.push_back(std::move(r));
    return rows.back();
}

void ExperimentReport::finalize()
{
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow &a, const ReportRow &b) {
        if (a.n != b.n) {
            return a.n < b.n;
        }
        if (a.quantity != b.quantity) {
            return a.quantity < b.quantity;
        }
        if (a.x.has_value() != b.x.has_value()) {
            return !a.x.has_value();
        }
        return a.x.value_or(0) < b.x.value_or(0);
    });
    summary.max_ratio = 0;
    summary.all_pass = true;
    for (const auto &r : rows) {
        if (std::isfinite(r.ratio)) {
            summary.max_ratio = std::max(summary.max_ratio, r.ratio);
        } else {
            summary.max_ratio = std::numeric_limits<double>::infinity();
        }
        summary.all_pass = summary.all_pass && r.pass;
    }
}

std::string to_csv(const ExperimentReport &report)
{
    std::string out = "# experiment=" + report.name + "\n";
    for (const auto &[k, v] : report.config) {
        out += "# config." + k + "=" + fmt_value(v) + "\n";
    }
    out += "# summary.max_ratio=" + fmt_num(report.summary.max_ratio) + "\n";
    out += std::string("# summary.all_pass=") + (report.summary.all_pass ? "true" : "false") + "\n";
    for (const auto &[k, v] : report.summary.extra) {
        out += "# summary." + k + "=" + fmt_value(v) + "\n";
    }
    out += "n,q_n,x,quantity,lhs,rhs,ratio,pass\n";
    for (const auto &r : report.rows) {
        out += std::to_string(r.n) + "," + fmt_num(r.q) + "," + (r.x ? fmt_num(*r.x) : std::string("sup")) + "," +
               r.quantity + "," + fmt_num(r.lhs) + "," + fmt_num(r.rhs) + "," + fmt_num(r.ratio) + "," +
               (r.pass ? "1" : "0") + "\n";
    }
    return out;
}

std::string to_json(const ExperimentReport &report)
{
    ojson j;
    j["name"] = report.name;
    j["bound_experiment"] = report.bound_experiment;
    j["config"] = entries_to_json(report.config);
    ojson rows = ojson::array();
    for (const auto &r : report.rows) {
        ojson o;
        o["n"] = r.n;
        o["q_n"] = num_to_json(r.q);
        o["x"] = r.x ? num_to_json(*r.x) : ojson(nullptr);
        o["quantity"] = r.quantity;
        o["lhs"] = num_to_json(r.lhs);
        o["rhs"] = num_to_json(r.rhs);
        o["ratio"] = num_to_json(r.ratio);
        o["pass"] = r.pass;
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    ojson s = entries_to_json(report.summary.extra);
    s["max_ratio"] = num_to_json(report.summary.max_ratio);
    s["all_pass"] = report.summary.all_pass;
    j["summary"] = std::move(s);
    return j.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string &text)
{
    const ojson j = ojson::parse(text);
    ExperimentReport r;
    r.name = j.at("name").get<std::string>();
    r.bound_experiment = j.at("bound_experiment").get<bool>();
    r.config = entries_from_json(j.at("config"));
    for (const auto &o : j.at("rows")) {
        ReportRow row;
        row.n = o.at("n").get<unsigned>();
        row.q = num_from_json(o.at("q_n"));
        if (!o.at("x").is_null()) {
            row.x = num_from_json(o.at("x"));
        }
        row.quantity = o.at("quantity").get<std::string>();
        row.lhs = num_from_json(o.at("lhs"));
        row.rhs = num_from_json(o.at("rhs"));
        row.ratio = num_from_json(o.at("ratio"));
        row.pass = o.at("pass").get<bool>();
        r.rows.push_back(std::move(row));
    }
    for (const auto &[k, v] : j.at("summary").items()) {
        if (k == "max_ratio") {
            r.summary.max_ratio = num_from_json(v);
        } else if (k == "all_pass") {
            r.summary.all_pass = v.get<bool>();
        } else {
            r.summary.extra.emplace_back(k, value_from_json(v));
        }
    }
    return r;
}

void write_text_file(const std::string &path, const std::string &content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            throw std::runtime_error("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot move report into place at '" + path + "'");
    }
}

void write_report(const ExperimentReport &report, const std::string &path, ReportFormat format)
{
    write_text_file(path, format == ReportFormat::csv ? to_csv(report) : to_json(report));
}

} // namespace qdunkl
