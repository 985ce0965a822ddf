#include "radiolim/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "radiolim/errors.hpp"

namespace radiolim {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

CsvFile::CsvFile(std::string path, const std::string& schema_name, int schema_version,
                 const std::vector<std::string>& columns)
    : path_(std::move(path)), width_(columns.size()) {
    if (columns.empty()) throw config_error("csv needs at least one column");
    buffer_ = "# schema " + schema_name + " v" + std::to_string(schema_version) + "\n";
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += columns[i];
    }
    buffer_ += '\n';
}

void CsvFile::row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_number(v));
    row_cells(cells);
}

void CsvFile::row_cells(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw config_error("csv row width mismatch");
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += cells[i];
    }
    buffer_ += '\n';
}

void CsvFile::close() {
    if (closed_) return;
    write_text_file(path_, buffer_);
    closed_ = true;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw config_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::ordered_json make_manifest(const std::string& command,
                                     const nlohmann::ordered_json& resolved_config,
                                     const nlohmann::ordered_json& seeds,
                                     const std::vector<std::string>& outputs,
                                     double wall_seconds) {
    nlohmann::ordered_json m;
    m["command"] = command;
    m["tool_version"] = kToolVersion;
    m["config"] = resolved_config;
    m["config_digest"] = hex64(fnv1a64(resolved_config.dump()));
    m["seeds"] = seeds;
    m["outputs"] = outputs;
    m["wall_clock_seconds"] = wall_seconds;
    return m;
}

} // namespace radiolim
