#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace symest {

/// Locale-independent numeric formatting: '.' decimal separator, up to 12
/// significant digits, identical bytes for identical doubles on every run.
std::string format_double(double value);

/// Minimal CSV assembly: fixed header, '\n' line endings, no quoting (the
/// emitted tables are purely numeric).
class CsvBuilder {
  public:
    explicit CsvBuilder(std::string_view header);

    CsvBuilder& cell(double value);
    CsvBuilder& cell(std::int64_t value);
    CsvBuilder& cell(std::string_view value);
    void end_row();

    const std::string& str() const { return buffer_; }

  private:
    std::string buffer_;
    bool row_open_ = false;
};

/// Writes the bytes exactly as given; throws std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace symest
