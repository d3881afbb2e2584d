#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sortscope::text {

/// Decodes one UTF-8 codepoint starting at `pos`. Advances `pos` past it.
/// Invalid byte sequences decode as U+FFFD and advance by one byte.
char32_t decode_utf8(std::string_view s, std::size_t& pos);

/// Appends `cp` to `out` as UTF-8.
void encode_utf8(char32_t cp, std::string& out);

std::vector<char32_t> to_codepoints(std::string_view s);
std::string from_codepoints(const std::vector<char32_t>& cps);

/// Codepoint count of a UTF-8 string.
std::size_t codepoint_length(std::string_view s);

/// True for codepoints rendered as emoji / pictographs (block-range test,
/// covers Misc Symbols, Dingbats, Emoticons, Transport, Supplemental
/// Symbols, regional indicators, variation selector 16, keycap combiner).
bool is_emoji(char32_t cp);

/// Whitespace including NBSP and the U+2000 block spaces.
bool is_space(char32_t cp);

/// ASCII punctuation plus General Punctuation / quotes / dashes ranges.
/// Used only for trimming phrase edges.
bool is_edge_punctuation(char32_t cp);

/// Compatibility fold for bio text. Not a full Unicode NFKC pass: maps
/// fullwidth ASCII forms to ASCII, common Latin ligatures to letter pairs,
/// curly quotes/dashes to ASCII, exotic spaces to U+0020, and drops
/// zero-width characters. Leaves everything else untouched.
char32_t compat_fold(char32_t cp, std::string& expansion);

/// Lowercases ASCII and Latin-1 uppercase letters (codepoint-wise).
char32_t fold_lower(char32_t cp);

/// Lowercase a UTF-8 string codepoint-wise via fold_lower.
std::string lower(std::string_view s);

/// Serializes a double with 9 significant digits (shortest %g form,
/// round-to-nearest-even binary->decimal conversion). NaN -> "nan".
std::string format_g9(double v);

/// Fixed one-decimal formatting, e.g. 141.8 -> "141.8", -50 -> "-50.0".
std::string format_fixed1(double v);

}  // namespace sortscope::text
