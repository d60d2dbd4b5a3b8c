#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace combi::text {

// Canonical composition (NFC). Invalid UTF-8 is passed through unchanged.
std::string nfc(std::string_view utf8);

std::string to_lower(std::string_view utf8);
std::string capitalize_first(std::string_view utf8);
std::string lowercase_first(std::string_view utf8);

// True when the first letter is a vowel (accented vowels included; 'h' is not).
bool vowel_initial(std::string_view utf8);

// Splits on runs of ASCII whitespace.
std::vector<std::string> split_words(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace combi::text
