#include "bipolkit/unicode.hpp"

#include <algorithm>
#include <iterator>

namespace bipolkit::unicode {
namespace {

#include "bipolkit/unicode_tables.inc"

}  // namespace

Decoded decode(std::string_view s, std::size_t pos) {
    const auto b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) return {b0, 1};

    std::size_t need = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((b0 & 0xE0) == 0xC0) {
        need = 1;
        cp = b0 & 0x1F;
        min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
        need = 2;
        cp = b0 & 0x0F;
        min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
        need = 3;
        cp = b0 & 0x07;
        min = 0x10000;
    } else {
        return {kReplacement, 1};
    }
    if (pos + need >= s.size()) return {kReplacement, 1};
    for (std::size_t i = 1; i <= need; ++i) {
        const auto b = static_cast<unsigned char>(s[pos + i]);
        if ((b & 0xC0) != 0x80) return {kReplacement, 1};
        cp = (cp << 6) | (b & 0x3F);
    }
    // overlong encodings, surrogates, and out-of-range values are invalid
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return {kReplacement, 1};
    return {cp, need + 1};
}

void append_utf8(std::string& out, char32_t cp) {
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

bool is_letter(char32_t cp) {
    const auto* end = std::end(kLetterRanges);
    const auto* it = std::upper_bound(
        std::begin(kLetterRanges), end, static_cast<uint32_t>(cp),
        [](uint32_t v, const uint32_t (&r)[2]) { return v < r[0]; });
    if (it == std::begin(kLetterRanges)) return false;
    --it;
    return cp >= (*it)[0] && cp <= (*it)[1];
}

char32_t to_lower(char32_t cp) {
    const auto* end = std::end(kLowerMap);
    const auto* it = std::lower_bound(
        std::begin(kLowerMap), end, static_cast<uint32_t>(cp),
        [](const uint32_t (&r)[2], uint32_t v) { return r[0] < v; });
    if (it != end && (*it)[0] == cp) return (*it)[1];
    return cp;
}

}  // namespace bipolkit::unicode
