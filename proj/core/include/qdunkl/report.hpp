#ifndef QDUNKL_REPORT_HPP
#define QDUNKL_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qdunkl
{

using ConfigValue = std::variant<bool, std::int64_t, double, std::string, std::vector<double>>;
// Ordered key/value list; order is preserved in every output format.
using ConfigEntries = std::vector<std::pair<std::string, ConfigValue>>;

struct ReportRow {
    unsigned n = 0;
    double q = 0;
    // Empty for rows that hold a supremum over the grid.
    std::optional<double> x;
    std::string quantity;
    double lhs = 0;
    double rhs = 0;
    double ratio = 0;
    bool pass = true;

    bool operator==(const ReportRow &) const = default;
};

struct ReportSummary {
    double max_ratio = 0;
    bool all_pass = true;
    ConfigEntries extra;

    bool operator==(const ReportSummary &) const = default;
};

// Rows of a numerical experiment plus the configuration that produced them.
//
// For bound experiments a row passes iff lhs <= rhs (1 + 1e-9) + 1e-12; for
// estimate-only experiments rhs is the unscaled bound kernel, ratio the
// empirical constant, and a row passes iff ratio is finite.
struct ExperimentReport {
    std::string name;
    bool bound_experiment = true;
    ConfigEntries config;
    std::vector<ReportRow> rows;
    ReportSummary summary;

    // Appends a row, filling ratio and pass.
    ReportRow &add(unsigned n, double q, std::optional<double> x, std::string quantity, double lhs, double rhs);
    // Sorts rows by (n, quantity, x) with supremum rows first, and recomputes
    // max_ratio / all_pass. Entries already in summary.extra are kept.
    void finalize();

    bool operator==(const ExperimentReport &) const = default;
};

bool bound_holds(double lhs, double rhs) noexcept;

enum class ReportFormat { csv, json };

// '#'-prefixed config and summary lines, a header row, then one line per row;
// numbers as %.15e; LF line endings.
std::string to_csv(const ExperimentReport &report);
// {"name", "config", "rows", "summary"}; numbers round-trip exactly.
std::string to_json(const ExperimentReport &report);
ExperimentReport report_from_json(const std::string &text);

// Writes to a temporary file next to `path` and renames it into place, so a
// failed run never leaves a partial report. Throws std::runtime_error naming
// the path on I/O failure.
void write_report(const ExperimentReport &report, const std::string &path, ReportFormat format);
void write_text_file(const std::string &path, const std::string &content);

} // namespace qdunkl

#endif
