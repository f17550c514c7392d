#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oscloc {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Quotes a field when it contains a comma, quote, CR or LF (RFC 4180).
std::string quote_csv_field(std::string_view field);

using CsvField = std::variant<std::string, double, std::int64_t, std::uint64_t>;

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& names);
    void row(const std::vector<CsvField>& fields);

private:
    std::ostream& out_;
};

/// Parses RFC 4180 text: quoted fields may hold commas, doubled quotes and
/// line breaks. Accepts LF or CRLF record separators.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Strict number parsing for CSV and config values; throws ConfigError.
double parse_double(std::string_view text, std::string_view what);
std::int64_t parse_int(std::string_view text, std::string_view what);

}  // namespace oscloc
