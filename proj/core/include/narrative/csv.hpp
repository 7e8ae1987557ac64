#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace narrative {

// Minimal RFC 4180 CSV support: quoted fields, doubled quotes, newlines
// inside quotes. Enough for the id,text corpus format and the tabular
// artifacts this pipeline writes.

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(std::string_view content);

std::string csv_escape(std::string_view field);
std::string csv_join(const std::vector<std::string>& fields);

} // namespace narrative
