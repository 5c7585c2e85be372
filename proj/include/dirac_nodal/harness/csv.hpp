#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace dirac_nodal::harness {

/// Shortest round-trip decimal form; "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double value);
double parse_number(const std::string& text);

using CsvCell = std::variant<long long, double, std::string>;

/// CSV with a provenance line "# dirac_nodal <version> config=<hash>" and a header row.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, const std::vector<std::string>& columns, const std::string& config_hash);

    void row(const std::vector<CsvCell>& cells);

private:
    std::ostream& out_;
    std::size_t width_;
};

struct CsvTable {
    std::vector<std::string> comments;  ///< comment lines without the leading '#'
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of a header column; throws if absent.
    [[nodiscard]] std::size_t column(const std::string& name) const;
    [[nodiscard]] double number(std::size_t row, const std::string& name) const;
};

/// Reads what CsvWriter writes (comma separated, no quoting).
CsvTable read_csv(std::istream& in);

}  // namespace dirac_nodal::harness
