#include "nerkit/text.hpp"

#include <unicode/locid.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace nerkit::text {

namespace {

// Byte offset just past the first `n` code points.
std::size_t advance(std::string_view s, std::size_t n) {
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  const auto len = static_cast<int32_t>(s.size());
  int32_t i = 0;
  for (std::size_t k = 0; k < n && i < len; ++k) {
    UChar32 c;
    U8_NEXT(p, i, len, c);
    (void)c;
  }
  return static_cast<std::size_t>(i);
}

}  // namespace

std::string to_lower(std::string_view utf8) {
  auto ustr = icu::UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  ustr.toLower(icu::Locale::getRoot());
  std::string out;
  ustr.toUTF8String(out);
  return out;
}

std::size_t code_point_count(std::string_view utf8) {
  const auto* p = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto len = static_cast<int32_t>(utf8.size());
  std::size_t count = 0;
  for (int32_t i = 0; i < len; ++count) {
    UChar32 c;
    U8_NEXT(p, i, len, c);
    (void)c;
  }
  return count;
}

std::string_view prefix(std::string_view utf8, std::size_t n) {
  return utf8.substr(0, advance(utf8, n));
}

std::string_view suffix(std::string_view utf8, std::size_t n) {
  const auto total = code_point_count(utf8);
  if (n >= total) return utf8;
  return utf8.substr(advance(utf8, total - n));
}

}  // namespace nerkit::text
