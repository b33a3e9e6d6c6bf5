#include "omfwm/cli/table.hpp"

#include <cstdio>
#include <fstream>

namespace omfwm::cli {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

std::string to_csv(const Table& t) {
    std::string out;
    for (const auto& m : t.metadata) out += "# " + m + "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
    out += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_number(row[i]);
        out += "\n";
    }
    return out;
}

nlohmann::json to_json(const Table& t) {
    return {{"metadata", t.metadata}, {"columns", t.columns}, {"rows", t.rows}};
}

void write_text(const std::string& text, const std::filesystem::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void write_table(const Table& t, const std::filesystem::path& path, Format format) {
    write_text(format == Format::csv ? to_csv(t) : to_json(t).dump(2) + "\n", path);
}

}  // namespace omfwm::cli
