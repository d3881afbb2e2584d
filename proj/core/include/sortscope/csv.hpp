#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sortscope::csv {

/// RFC 4180-style reader: comma separated, double-quote quoting, quoted
/// fields may contain commas, quotes ("" escape) and newlines. CRLF and LF
/// both accepted.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    /// Reads the next record into `fields`. Returns false at end of input.
    bool next(std::vector<std::string>& fields);

    /// 1-based line number where the last record started.
    std::size_t line() const noexcept { return record_line_; }

private:
    std::istream& in_;
    std::size_t current_line_ = 1;
    std::size_t record_line_ = 1;
};

/// Quotes a field if it contains a comma, quote, or newline.
std::string escape(std::string_view field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace sortscope::csv
