#pragma once

#include <string>
#include <string_view>

namespace predalign {

/// Appends the UTF-8 encoding of a code point. Code points beyond U+10FFFF
/// and surrogates encode as U+FFFD.
void append_utf8(std::string& out, char32_t cp);

/// Decodes UTF-8 into code points. Malformed byte sequences decode to U+FFFD
/// one byte at a time, so the function is total.
std::u32string utf8_decode(std::string_view s);

/// Decodes %XX percent-escapes into raw bytes. Malformed escapes are kept
/// verbatim.
std::string percent_decode(std::string_view s);

/// ASCII-only lower-casing; bytes outside A-Z pass through untouched.
std::string ascii_fold(std::string_view s);

std::string trim(std::string_view s);

/// Trims and collapses internal whitespace runs to a single space.
std::string collapse_whitespace(std::string_view s);

}  // namespace predalign
