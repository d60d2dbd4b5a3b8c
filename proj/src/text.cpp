#include "combi/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/locid.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

namespace combi::text {

std::string nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::string(utf8);
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  if (normalizer->isNormalized(source, status) && U_SUCCESS(status)) {
    return std::string(utf8);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString normalized = normalizer->normalize(source, status);
  if (U_FAILURE(status)) return std::string(utf8);
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::string to_lower(std::string_view utf8) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  s.toLower(icu::Locale::getRoot());
  std::string out;
  s.toUTF8String(out);
  return out;
}

namespace {

std::string map_first(std::string_view utf8, bool upper) {
  if (utf8.empty()) return {};
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  UChar32 first = s.char32At(0);
  UChar32 mapped = upper ? u_toupper(first) : u_tolower(first);
  if (mapped == first) return std::string(utf8);
  icu::UnicodeString result;
  result.append(mapped);
  result.append(s, U16_LENGTH(first), s.length() - U16_LENGTH(first));
  std::string out;
  result.toUTF8String(out);
  return out;
}

}  // namespace

std::string capitalize_first(std::string_view utf8) { return map_first(utf8, true); }

std::string lowercase_first(std::string_view utf8) { return map_first(utf8, false); }

bool vowel_initial(std::string_view utf8) {
  if (utf8.empty()) return false;
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  UChar32 c = u_tolower(s.char32At(0));
  static const icu::UnicodeString vowels =
      icu::UnicodeString::fromUTF8("aeiouyàâäáéèêëíîïóôöúùûüÿœæ");
  return vowels.indexOf(c) >= 0;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace combi::text
