#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdgsym {

/// Flat table with a header row. Doubles are serialized at 17 significant
/// digits so that parsing an emitted file reproduces the values bit-exactly.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;  // comma-separated, LF line endings
};

std::string format_double(double x);
std::string format_int(long long x);

CsvTable parse_csv(const std::string& text);
double parse_double(const std::string& cell);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace cdgsym
