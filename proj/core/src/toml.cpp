#include "sortscope/toml.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sortscope/errors.hpp"
#include "sortscope/text.hpp"

namespace sortscope::toml {

Value Value::make_string(std::string s) {
    Value v;
    v.type_ = Type::String;
    v.string_ = std::move(s);
    return v;
}
Value Value::make_integer(std::int64_t x) {
    Value v;
    v.type_ = Type::Integer;
    v.integer_ = x;
    return v;
}
Value Value::make_float(double x) {
    Value v;
    v.type_ = Type::Float;
    v.float_ = x;
    return v;
}
Value Value::make_boolean(bool x) {
    Value v;
    v.type_ = Type::Boolean;
    v.boolean_ = x;
    return v;
}
Value Value::make_array() {
    Value v;
    v.type_ = Type::Array;
    return v;
}
Value Value::make_table() { return Value(); }

const std::string& Value::as_string() const {
    if (type_ != Type::String) throw FormatError("toml: value is not a string");
    return string_;
}
std::int64_t Value::as_integer() const {
    if (type_ != Type::Integer) throw FormatError("toml: value is not an integer");
    return integer_;
}
double Value::as_double() const {
    if (type_ == Type::Float) return float_;
    if (type_ == Type::Integer) return static_cast<double>(integer_);
    throw FormatError("toml: value is not a number");
}
bool Value::as_boolean() const {
    if (type_ != Type::Boolean) throw FormatError("toml: value is not a boolean");
    return boolean_;
}
const std::vector<Value>& Value::as_array() const {
    if (type_ != Type::Array) throw FormatError("toml: value is not an array");
    return array_;
}
std::vector<Value>& Value::as_array() {
    if (type_ != Type::Array) throw FormatError("toml: value is not an array");
    return array_;
}

const Value* Value::find(std::string_view key) const {
    for (const auto& [k, v] : table_) {
        if (k == key) return &v;
    }
    return nullptr;
}

Value& Value::insert(std::string key, Value v) {
    if (find(key)) throw FormatError("toml: duplicate key '" + key + "'");
    table_.emplace_back(std::move(key), std::move(v));
    return table_.back().second;
}

Value& Value::get_or_insert_table(const std::string& key) {
    for (auto& [k, v] : table_) {
        if (k == key) {
            if (!v.is_table()) throw FormatError("toml: key '" + key + "' is not a table");
            return v;
        }
    }
    table_.emplace_back(key, make_table());
    return table_.back().second;
}

Value& Value::get_or_insert_table_array_slot(const std::string& key) {
    for (auto& [k, v] : table_) {
        if (k == key) {
            if (!v.is_array()) throw FormatError("toml: key '" + key + "' is not a table array");
            v.array_.push_back(make_table());
            return v.array_.back();
        }
    }
    table_.emplace_back(key, make_array());
    auto& arr = table_.back().second;
    arr.array_.push_back(make_table());
    return arr.array_.back();
}

std::string Value::require_string(std::string_view key) const {
    const Value* v = find(key);
    if (!v) throw FormatError("toml: missing required key '" + std::string(key) + "'");
    return v->as_string();
}
std::int64_t Value::require_integer(std::string_view key) const {
    const Value* v = find(key);
    if (!v) throw FormatError("toml: missing required key '" + std::string(key) + "'");
    return v->as_integer();
}
double Value::require_double(std::string_view key) const {
    const Value* v = find(key);
    if (!v) throw FormatError("toml: missing required key '" + std::string(key) + "'");
    return v->as_double();
}
std::optional<std::string> Value::get_string(std::string_view key) const {
    const Value* v = find(key);
    if (!v) return std::nullopt;
    return v->as_string();
}
std::optional<std::int64_t> Value::get_integer(std::string_view key) const {
    const Value* v = find(key);
    if (!v) return std::nullopt;
    return v->as_integer();
}
std::optional<double> Value::get_double(std::string_view key) const {
    const Value* v = find(key);
    if (!v) return std::nullopt;
    return v->as_double();
}
std::optional<bool> Value::get_boolean(std::string_view key) const {
    const Value* v = find(key);
    if (!v) return std::nullopt;
    return v->as_boolean();
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Value parse() {
        Value root = Value::make_table();
        Value* current = &root;
        while (!at_end()) {
            skip_ws_and_comments_to_content();
            if (at_end()) break;
            char c = peek();
            if (c == '[') {
                current = parse_header(root);
            } else {
                parse_key_value(*current);
            }
            expect_line_end();
        }
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw FormatError("toml parse error at line " + std::to_string(line_) + ": " + msg);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') ++line_;
        return c;
    }

    void skip_inline_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }

    void skip_comment() {
        while (!at_end() && peek() != '\n') advance();
    }

    // Skips whitespace, comments, and blank lines up to the next content char.
    void skip_ws_and_comments_to_content() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                skip_comment();
            } else {
                return;
            }
        }
    }

    void expect_line_end() {
        skip_inline_ws();
        if (at_end()) return;
        if (peek() == '#') {
            skip_comment();
            return;
        }
        if (peek() == '\n') {
            advance();
            return;
        }
        fail(std::string("unexpected character '") + peek() + "' after value");
    }

    std::string parse_key() {
        skip_inline_ws();
        if (at_end()) fail("expected key");
        if (peek() == '"') return parse_basic_string();
        std::string key;
        while (!at_end()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
                key.push_back(advance());
            } else {
                break;
            }
        }
        if (key.empty()) fail("expected key");
        if (!at_end() && peek() == '.') fail("dotted keys are not supported");
        return key;
    }

    Value* parse_header(Value& root) {
        advance();  // '['
        bool table_array = false;
        if (!at_end() && peek() == '[') {
            table_array = true;
            advance();
        }
        std::string name = parse_key();
        skip_inline_ws();
        if (at_end() || peek() != ']') fail("expected ']' in table header");
        advance();
        if (table_array) {
            if (at_end() || peek() != ']') fail("expected ']]' in table-array header");
            advance();
            return &root.get_or_insert_table_array_slot(name);
        }
        return &root.get_or_insert_table(name);
    }

    void parse_key_value(Value& table) {
        std::string key = parse_key();
        skip_inline_ws();
        if (at_end() || peek() != '=') fail("expected '=' after key '" + key + "'");
        advance();
        skip_inline_ws();
        table.insert(std::move(key), parse_value());
    }

    Value parse_value() {
        if (at_end()) fail("expected value");
        char c = peek();
        if (c == '"') return Value::make_string(parse_basic_string());
        if (c == '\'') return Value::make_string(parse_literal_string());
        if (c == '[') return parse_array();
        if (c == '{') fail("inline tables are not supported");
        return parse_scalar();
    }

    std::string parse_basic_string() {
        advance();  // '"'
        std::string out;
        while (true) {
            if (at_end()) fail("unterminated string");
            char c = advance();
            if (c == '"') break;
            if (c == '\n') fail("newline in basic string");
            if (c == '\\') {
                if (at_end()) fail("unterminated escape");
                char e = advance();
                switch (e) {
                    case 'n': out.push_back('\n'); break;
                    case 't': out.push_back('\t'); break;
                    case 'r': out.push_back('\r'); break;
                    case '"': out.push_back('"'); break;
                    case '\\': out.push_back('\\'); break;
                    case 'u': out += parse_unicode_escape(4); break;
                    case 'U': out += parse_unicode_escape(8); break;
                    default: fail(std::string("unsupported escape '\\") + e + "'");
                }
            } else {
                out.push_back(c);
            }
        }
        return out;
    }

    std::string parse_unicode_escape(int digits) {
        char32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (at_end()) fail("unterminated unicode escape");
            char c = advance();
            cp <<= 4;
            if (c >= '0' && c <= '9') cp |= static_cast<char32_t>(c - '0');
            else if (c >= 'a' && c <= 'f') cp |= static_cast<char32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') cp |= static_cast<char32_t>(c - 'A' + 10);
            else fail("bad unicode escape digit");
        }
        std::string out;
        text::encode_utf8(cp, out);
        return out;
    }

    std::string parse_literal_string() {
        advance();  // '\''
        std::string out;
        while (true) {
            if (at_end()) fail("unterminated literal string");
            char c = advance();
            if (c == '\'') break;
            if (c == '\n') fail("newline in literal string");
            out.push_back(c);
        }
        return out;
    }

    Value parse_array() {
        advance();  // '['
        Value arr = Value::make_array();
        while (true) {
            skip_ws_and_comments_to_content();
            if (at_end()) fail("unterminated array");
            if (peek() == ']') {
                advance();
                return arr;
            }
            arr.as_array().push_back(parse_value());
            skip_ws_and_comments_to_content();
            if (at_end()) fail("unterminated array");
            if (peek() == ',') {
                advance();
            } else if (peek() != ']') {
                fail("expected ',' or ']' in array");
            }
        }
    }

    Value parse_scalar() {
        std::string tok;
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '#' || c == ',' ||
                c == ']') {
                break;
            }
            tok.push_back(advance());
        }
        if (tok == "true") return Value::make_boolean(true);
        if (tok == "false") return Value::make_boolean(false);
        if (tok.empty()) fail("expected value");
        if (tok[0] == '+') tok.erase(0, 1);  // from_chars rejects a leading '+'

        bool looks_float = tok.find_first_of(".eE") != std::string::npos &&
                           tok.find_first_of("0123456789") != std::string::npos;
        if (tok == "inf" || tok == "+inf" || tok == "-inf" || tok == "nan") {
            fail("non-finite numbers are not supported");
        }
        if (!looks_float) {
            std::int64_t iv = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), iv);
            if (ec == std::errc() && p == tok.data() + tok.size()) return Value::make_integer(iv);
        }
        double dv = 0.0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), dv);
        if (ec == std::errc() && p == tok.data() + tok.size()) return Value::make_float(dv);
        fail("cannot parse value '" + tok + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

}  // namespace

Value parse(std::string_view text) { return Parser(text).parse(); }

Value parse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string content = ss.str();
    return parse(content);
}

}  // namespace sortscope::toml
