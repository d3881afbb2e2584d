#include "sortscope/text.hpp"

#include <cmath>
#include <cstdio>

namespace sortscope::text {

char32_t decode_utf8(std::string_view s, std::size_t& pos) {
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
    unsigned char b0 = byte(pos);
    if (b0 < 0x80) {
        pos += 1;
        return b0;
    }
    auto cont = [&](std::size_t i) {
        return i < s.size() && (byte(i) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(pos + 1)) {
        char32_t cp = ((b0 & 0x1Fu) << 6) | (byte(pos + 1) & 0x3Fu);
        pos += 2;
        return cp < 0x80 ? 0xFFFD : cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(pos + 1) && cont(pos + 2)) {
        char32_t cp = ((b0 & 0x0Fu) << 12) | ((byte(pos + 1) & 0x3Fu) << 6) | (byte(pos + 2) & 0x3Fu);
        pos += 3;
        return cp < 0x800 ? 0xFFFD : cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(pos + 1) && cont(pos + 2) && cont(pos + 3)) {
        char32_t cp = ((b0 & 0x07u) << 18) | ((byte(pos + 1) & 0x3Fu) << 12) |
                      ((byte(pos + 2) & 0x3Fu) << 6) | (byte(pos + 3) & 0x3Fu);
        pos += 4;
        return (cp < 0x10000 || cp > 0x10FFFF) ? 0xFFFD : cp;
    }
    pos += 1;
    return 0xFFFD;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::vector<char32_t> to_codepoints(std::string_view s) {
    std::vector<char32_t> cps;
    cps.reserve(s.size());
    std::size_t pos = 0;
    while (pos < s.size()) cps.push_back(decode_utf8(s, pos));
    return cps;
}

std::string from_codepoints(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) encode_utf8(cp, out);
    return out;
}

std::size_t codepoint_length(std::string_view s) {
    std::size_t pos = 0, n = 0;
    while (pos < s.size()) {
        decode_utf8(s, pos);
        ++n;
    }
    return n;
}

bool is_emoji(char32_t cp) {
    return (cp >= 0x1F000 && cp <= 0x1FAFF) ||  // emoticons, symbols, transport, supplemental
           (cp >= 0x1F1E6 && cp <= 0x1F1FF) ||  // regional indicators (inside above range)
           (cp >= 0x2600 && cp <= 0x27BF) ||    // misc symbols + dingbats
           (cp >= 0x2B00 && cp <= 0x2BFF) ||    // misc symbols and arrows (stars, hearts)
           cp == 0x2139 || (cp >= 0x2190 && cp <= 0x21FF && (cp == 0x2194 || cp == 0x2195 ||
                                                             (cp >= 0x2196 && cp <= 0x2199) ||
                                                             cp == 0x21A9 || cp == 0x21AA)) ||
           (cp >= 0x2300 && cp <= 0x23FF) ||    // technical block (watches, hourglass)
           cp == 0xFE0F ||                       // variation selector-16
           cp == 0x20E3;                         // combining keycap
}

bool is_space(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
           cp == U'\v' || cp == 0x00A0 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x202F ||
           cp == 0x205F || cp == 0x3000;
}

bool is_edge_punctuation(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
               (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
    }
    return (cp >= 0x2010 && cp <= 0x205E) ||   // general punctuation
           cp == 0x00A1 || cp == 0x00BF ||     // inverted ! ?
           cp == 0x00AB || cp == 0x00BB ||     // guillemets
           (cp >= 0x3001 && cp <= 0x3011) ||   // CJK punctuation
           cp == 0xFF01 || cp == 0xFF1F || cp == 0xFF0C || cp == 0xFF0E;
}

char32_t compat_fold(char32_t cp, std::string& expansion) {
    expansion.clear();
    // fullwidth ASCII variants
    if (cp >= 0xFF01 && cp <= 0xFF5E) return cp - 0xFF01 + 0x21;
    // exotic spaces fold to plain space; ASCII whitespace is left alone so
    // newline/tab stay visible to the segmenter's delimiter set
    if (cp >= 0x80 && is_space(cp)) return U' ';
    switch (cp) {
        case 0x2018: case 0x2019: case 0x201B: return U'\'';
        case 0x201C: case 0x201D: case 0x201F: return U'"';
        case 0x2010: case 0x2011: case 0x2012: case 0x2013: case 0x2014: case 0x2015:
            return U'-';
        case 0x2044: return U'/';
        case 0xFB00: expansion = "ff"; return 0;
        case 0xFB01: expansion = "fi"; return 0;
        case 0xFB02: expansion = "fl"; return 0;
        case 0xFB03: expansion = "ffi"; return 0;
        case 0xFB04: expansion = "ffl"; return 0;
        case 0x200B: case 0x200C: case 0x200D: case 0xFEFF: case 0x2060:
            return 0;  // zero-width: drop
        default: return cp;
    }
}

char32_t fold_lower(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 32;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;  // Latin-1 uppercase
    return cp;
}

std::string lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t pos = 0;
    while (pos < s.size()) encode_utf8(fold_lower(decode_utf8(s, pos)), out);
    return out;
}

std::string format_g9(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string format_fixed1(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

}  // namespace sortscope::text
