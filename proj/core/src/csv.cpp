#include "sortscope/csv.hpp"

#include <istream>
#include <ostream>

namespace sortscope::csv {

bool Reader::next(std::vector<std::string>& fields) {
    fields.clear();
    int c = in_.get();
    if (c == std::istream::traits_type::eof()) return false;
    record_line_ = current_line_;

    std::string field;
    bool quoted = false;

    auto push_field = [&] {
        fields.push_back(std::move(field));
        field.clear();
    };

    while (true) {
        if (c == std::istream::traits_type::eof()) {
            push_field();
            return true;
        }
        char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                if (in_.peek() == '"') {
                    field.push_back('"');
                    in_.get();
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n') ++current_line_;
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            quoted = true;  // quote opens a field
        } else if (ch == ',') {
            push_field();
        } else if (ch == '\n') {
            ++current_line_;
            if (!field.empty() && field.back() == '\r') field.pop_back();
            push_field();
            return true;
        } else {
            field.push_back(ch);
        }
        c = in_.get();
    }
}

std::string escape(std::string_view field) {
    bool needs_quote = field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quote) return std::string(field);
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.put(',');
        out << escape(fields[i]);
    }
    out.put('\n');
}

}  // namespace sortscope::csv
