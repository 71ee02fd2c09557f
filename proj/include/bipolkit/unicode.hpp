#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace bipolkit::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes one UTF-8 sequence starting at `pos`. Invalid bytes yield
// U+FFFD and advance by one byte.
struct Decoded {
    char32_t cp;
    std::size_t len;
};
Decoded decode(std::string_view s, std::size_t pos);

void append_utf8(std::string& out, char32_t cp);

bool is_letter(char32_t cp);
char32_t to_lower(char32_t cp);
inline bool is_upper(char32_t cp) { return to_lower(cp) != cp; }

}  // namespace bipolkit::unicode
