#pragma once

// UTF-8 helpers shared by the corpus, query and encoder modules.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bicross::text {

/// Decodes UTF-8; invalid sequences become U+FFFD.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);
void append_utf8(std::string& out, char32_t cp);

char32_t to_lower(char32_t cp) noexcept;
bool is_upper(char32_t cp) noexcept;
bool is_letter(char32_t cp) noexcept;
bool is_digit(char32_t cp) noexcept;
bool is_space(char32_t cp) noexcept;

std::string to_lower(std::string_view s);

/// Splits on runs of Unicode letters/digits. An apostrophe between two
/// letters is kept inside the token ("don't", "l'eau"); U+2019 is folded to '.
std::vector<std::string> word_tokens(std::string_view s);

/// Whitespace split, then strip leading/trailing non-alphanumerics from each
/// piece. Pieces that become empty are dropped.
std::vector<std::string> surface_tokens(std::string_view s);

std::vector<std::string> split_whitespace(std::string_view s);
std::string_view trim(std::string_view s) noexcept;

/// Collapses internal whitespace runs to one space and trims the ends.
std::string collapse_whitespace(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::uint64_t fnv1a64(std::string_view data, std::uint64_t basis = 0xcbf29ce484222325ULL) noexcept;

}  // namespace bicross::text
