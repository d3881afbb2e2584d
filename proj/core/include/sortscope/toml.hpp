#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sortscope::toml {

/// Parsed TOML value. The supported grammar is the subset the tool's config
/// files use: bare/quoted keys, basic "..." strings with escapes, integers,
/// floats, booleans, (possibly multiline) arrays, [table] headers and
/// [[array-of-tables]] headers. Dotted keys, dates, and inline tables are
/// rejected with a parse error.
class Value {
public:
    enum class Type { String, Integer, Float, Boolean, Array, Table };

    Value() : type_(Type::Table) {}
    static Value make_string(std::string s);
    static Value make_integer(std::int64_t v);
    static Value make_float(double v);
    static Value make_boolean(bool v);
    static Value make_array();
    static Value make_table();

    Type type() const noexcept { return type_; }
    bool is_table() const noexcept { return type_ == Type::Table; }
    bool is_array() const noexcept { return type_ == Type::Array; }
    bool is_string() const noexcept { return type_ == Type::String; }
    bool is_number() const noexcept { return type_ == Type::Integer || type_ == Type::Float; }
    bool is_boolean() const noexcept { return type_ == Type::Boolean; }

    const std::string& as_string() const;
    std::int64_t as_integer() const;
    double as_double() const;  // integers promote
    bool as_boolean() const;
    const std::vector<Value>& as_array() const;
    std::vector<Value>& as_array();

    // Table access.
    const Value* find(std::string_view key) const;
    Value& insert(std::string key, Value v);       // throws on duplicate key
    Value& get_or_insert_table(const std::string& key);
    Value& get_or_insert_table_array_slot(const std::string& key);
    const std::vector<std::pair<std::string, Value>>& entries() const { return table_; }

    // Checked lookups used by config loaders.
    std::string require_string(std::string_view key) const;
    std::int64_t require_integer(std::string_view key) const;
    double require_double(std::string_view key) const;
    std::optional<std::string> get_string(std::string_view key) const;
    std::optional<std::int64_t> get_integer(std::string_view key) const;
    std::optional<double> get_double(std::string_view key) const;
    std::optional<bool> get_boolean(std::string_view key) const;

private:
    Type type_;
    std::string string_;
    std::int64_t integer_ = 0;
    double float_ = 0.0;
    bool boolean_ = false;
    std::vector<Value> array_;
    std::vector<std::pair<std::string, Value>> table_;
};

/// Parses TOML text. Errors carry 1-based line numbers.
Value parse(std::string_view text);

Value parse_file(const std::filesystem::path& path);

}  // namespace sortscope::toml
