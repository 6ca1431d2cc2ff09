#include "kreg/io.hpp"

#include <cmath>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace kreg {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Dataset paper_fixture() {
    return Dataset(
        {-8.8, -8.0, -6.8, -6.3, -4.3, -3.9, -3.9, -3.7, -2.8, -2.0,
         -1.8, -1.0, -1.0, 1.9, 2.3, 2.9, 5.2, 6.5, 9.3, 10.0},
        {-7.1, -6.1, -5.8, -5.3, -4.9, -1.2, -0.6, -0.4, 0.8, 2.0,
         2.1, 2.3, 2.4, 4.4, 5.9, 6.0, 6.9, 7.4, 8.1, 9.3});
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool try_parse_number(std::string_view cell, double& out) {
    cell = trim(cell);
    if (cell.empty()) return false;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
    return ec == std::errc() && ptr == cell.data() + cell.size();
}

// Splits a CSV text into trimmed nonempty lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string_view>> csv_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string_view line = trim(text.substr(pos, end - pos));
        if (!line.empty()) lines.emplace_back(line_no, line);
        pos = end + 1;
    }
    return lines;
}

} // namespace

Dataset parse_dataset_csv_text(std::string_view text, CsvDiagnostics* diag) {
    auto lines = csv_lines(text);
    std::vector<double> xs, ys;
    bool had_header = false;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        auto [line_no, line] = lines[li];
        std::size_t comma = line.find(',');
        if (comma == std::string_view::npos)
            throw ParseError("expected two comma-separated columns", line_no);
        double x, y;
        bool ok = try_parse_number(line.substr(0, comma), x) &&
                  try_parse_number(line.substr(comma + 1), y);
        if (!ok) {
            if (li == 0) { // a single non-numeric first line is a header
                had_header = true;
                continue;
            }
            throw ParseError("cannot parse numeric cell", line_no);
        }
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ParseError("non-finite value", line_no);
        xs.push_back(x);
        ys.push_back(y);
    }
    if (xs.empty()) throw ParseError("empty dataset: no data rows");
    Dataset d(std::move(xs), std::move(ys));
    if (diag) {
        diag->had_header = had_header;
        diag->duplicate_x = 0;
        for (std::size_t i = 1; i < d.size(); ++i)
            if (d.x(i) == d.x(i - 1)) ++diag->duplicate_x;
        diag->comonotone = d.comonotone();
    }
    return d;
}

Dataset parse_dataset_csv(const std::filesystem::path& path, CsvDiagnostics* diag) {
    return parse_dataset_csv_text(read_file(path), diag);
}

OrderedSample parse_sample_csv_text(std::string_view text) {
    auto lines = csv_lines(text);
    std::vector<double> values;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        auto [line_no, line] = lines[li];
        double v;
        if (!try_parse_number(line, v)) {
            if (li == 0) continue; // header
            throw ParseError("cannot parse numeric cell", line_no);
        }
        if (!std::isfinite(v)) throw ParseError("non-finite value", line_no);
        values.push_back(v);
    }
    if (values.empty()) throw ParseError("empty sample: no data rows");
    return OrderedSample(std::move(values));
}

OrderedSample parse_sample_csv(const std::filesystem::path& path) {
    return parse_sample_csv_text(read_file(path));
}

std::string dataset_to_csv(const Dataset& d) {
    std::ostringstream out;
    out << "x,y\n";
    for (std::size_t i = 0; i < d.size(); ++i)
        out << format_double(d.x(i)) << ',' << format_double(d.y(i)) << '\n';
    return out.str();
}

std::string curve_to_csv(const CurveSample& c) {
    std::ostringstream out;
    out << "x,value,defined\n";
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        out << format_double(c.grid[i]) << ',';
        if (c.defined[i])
            out << format_double(c.values[i]);
        else
            out << "nan";
        out << ',' << (c.defined[i] ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
    return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("error while writing '" + path.string() + "'");
}

} // namespace kreg
