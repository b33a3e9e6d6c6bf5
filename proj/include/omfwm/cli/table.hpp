// table.hpp — Tabular run output (CSV / JSON writers)

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "omfwm/cli/config.hpp"

namespace omfwm::cli {

struct Table {
    std::vector<std::string> metadata;  // "key: value" lines
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// 12 significant digits, scientific notation.
std::string format_number(double v);

std::string to_csv(const Table& t);
nlohmann::json to_json(const Table& t);

// Throws IoError.
void write_table(const Table& t, const std::filesystem::path& path, Format format);
void write_text(const std::string& text, const std::filesystem::path& path);

}  // namespace omfwm::cli
