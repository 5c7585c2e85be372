#include "dirac_nodal/harness/csv.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "dirac_nodal/error.hpp"
#include "dirac_nodal/harness/config.hpp"

namespace dirac_nodal::harness {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, r.ptr);
}

double parse_number(const std::string& text) {
    if (text == "nan") return std::nan("");
    if (text == "inf") return HUGE_VAL;
    if (text == "-inf") return -HUGE_VAL;
    double v = 0.0;
    const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (r.ec != std::errc() || r.ptr != text.data() + text.size()) {
        fail(ErrorKind::invalid_argument, "not a number: \"" + text + "\"");
    }
    return v;
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& columns, const std::string& config_hash)
    : out_(out), width_(columns.size()) {
    out_ << "# " << kToolName << ' ' << kToolVersion << " config=" << config_hash << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << '\n';
}

void CsvWriter::row(const std::vector<CsvCell>& cells) {
    if (cells.size() != width_) fail(ErrorKind::invalid_argument, "CSV row width does not match the header");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        std::visit(
            [this](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double>) {
                    out_ << format_number(v);
                } else {
                    out_ << v;
                }
            },
            cells[i]);
    }
    out_ << '\n';
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    fail(ErrorKind::invalid_argument, "CSV has no column \"" + name + "\"");
}

double CsvTable::number(std::size_t row, const std::string& name) const {
    return parse_number(rows.at(row).at(column(name)));
}

CsvTable read_csv(std::istream& in) {
    CsvTable t;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            t.comments.push_back(line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1));
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.emplace_back();
        if (!have_header) {
            t.header = std::move(cells);
            have_header = true;
        } else {
            if (cells.size() != t.header.size()) fail(ErrorKind::invalid_argument, "CSV row width differs from header");
            t.rows.push_back(std::move(cells));
        }
    }
    if (!have_header) fail(ErrorKind::invalid_argument, "CSV has no header row");
    return t;
}

}  // namespace dirac_nodal::harness
