#pragma once
// CSV and manifest plumbing for the command-line tool.  Output is plain text,
// deterministic byte for byte: numbers go through one fixed format, the C
// decimal point, no locale involvement.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace radiolim {

inline constexpr const char* kToolVersion = "0.1.0";

// Shortest round-trippable-ish decimal form used everywhere: %.12g.
std::string format_number(double v);

std::uint64_t fnv1a64(const std::string& text);
std::string hex64(std::uint64_t v);

// Writes the whole file at close time; throws config_error when the path
// cannot be written.  First line is a schema comment, second the header row.
class CsvFile {
  public:
    CsvFile(std::string path, const std::string& schema_name, int schema_version,
            const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void row_cells(const std::vector<std::string>& cells);
    void close();
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::string buffer_;
    size_t width_;
    bool closed_ = false;
};

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Run record accompanying every dataset: command, resolved config and its
// digest, seeds, tool version, outputs, wall clock.  The embedded config is
// sufficient to reproduce the CSV bytes exactly.
nlohmann::ordered_json make_manifest(const std::string& command,
                                     const nlohmann::ordered_json& resolved_config,
                                     const nlohmann::ordered_json& seeds,
                                     const std::vector<std::string>& outputs,
                                     double wall_seconds);

} // namespace radiolim
