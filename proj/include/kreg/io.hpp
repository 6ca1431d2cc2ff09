#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "kreg/applications.hpp"
#include "kreg/dataset.hpp"
#include "kreg/estimators.hpp"

namespace kreg {

// Lossless decimal rendering of a binary64 value (17 significant digits).
std::string format_double(double v);

// The bundled 20-pair co-monotone example dataset, addressable from the CLI
// as the input "fixture:paper".
Dataset paper_fixture();

struct CsvDiagnostics {
    bool had_header = false;
    std::size_t duplicate_x = 0; // pairs sharing an x with a predecessor
    bool comonotone = false;
};

// Two numeric comma-separated columns, an optional single header line
// (auto-detected by a non-numeric first line), "." decimals. Rows are
// sorted jointly by x. Parse failures name the 1-based line.
Dataset parse_dataset_csv_text(std::string_view text, CsvDiagnostics* diag = nullptr);
Dataset parse_dataset_csv(const std::filesystem::path& path, CsvDiagnostics* diag = nullptr);

// One numeric column (optional header) for ordered samples.
OrderedSample parse_sample_csv_text(std::string_view text);
OrderedSample parse_sample_csv(const std::filesystem::path& path);

// "x,y" header plus one row per pair; emit-then-parse reproduces the
// dataset exactly.
std::string dataset_to_csv(const Dataset& d);

// "x,value,defined" rows; value is "nan" where the estimate is undefined.
std::string curve_to_csv(const CurveSample& c);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace kreg
