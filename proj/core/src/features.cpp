#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "nerkit/error.hpp"
#include "nerkit/tagger.hpp"
#include "nerkit/text.hpp"

namespace nerkit {

namespace {

constexpr std::string_view kBegin = "<s>";
constexpr std::string_view kEnd = "</s>";

std::string cat(std::string_view key, std::string_view value) {
  std::string out;
  out.reserve(key.size() + value.size());
  out += key;
  out += value;
  return out;
}

}  // namespace

std::string word_shape(std::string_view word) {
  const auto* p = reinterpret_cast<const uint8_t*>(word.data());
  const auto len = static_cast<int32_t>(word.size());
  std::string shape;
  char last = 0;
  int32_t i = 0;
  while (i < len) {
    const auto begin = i;
    UChar32 c;
    U8_NEXT(p, i, len, c);
    char cls = 0;
    if (c >= 0) {
      if (u_isupper(c)) cls = 'X';
      else if (u_islower(c)) cls = 'x';
      else if (u_isdigit(c)) cls = 'd';
    }
    if (cls == 0) {
      shape.append(word.substr(static_cast<std::size_t>(begin), static_cast<std::size_t>(i - begin)));
      last = 0;
      continue;
    }
    if ((cls == 'X' || cls == 'x') && cls == last) continue;
    shape += cls;
    last = cls;
  }
  return shape;
}

std::vector<std::string> featurize(std::span<const std::string> tokens, std::size_t i) {
  if (i >= tokens.size())
    throw IndexOutOfRange("featurize: position " + std::to_string(i) + " outside sentence of length " +
                          std::to_string(tokens.size()));

  const std::string_view word = tokens[i];
  const std::string lower = text::to_lower(word);
  const std::string_view prev = i == 0 ? kBegin : std::string_view(tokens[i - 1]);
  const std::string_view next = i + 1 == tokens.size() ? kEnd : std::string_view(tokens[i + 1]);
  const std::string prev_lower = i == 0 ? std::string(kBegin) : text::to_lower(prev);
  const std::string next_lower = i + 1 == tokens.size() ? std::string(kEnd) : text::to_lower(next);

  std::vector<std::string> features;
  features.reserve(16);
  features.emplace_back("bias");
  features.push_back(cat("w0=", word));
  features.push_back(cat("low0=", lower));
  features.push_back(cat("w-1=", prev));
  features.push_back(cat("low-1=", prev_lower));
  features.push_back(cat("w+1=", next));
  features.push_back(cat("low+1=", next_lower));
  features.push_back(cat("shape0=", word_shape(word)));

  const auto length = text::code_point_count(lower);
  for (std::size_t n = 1; n <= 3 && n <= length; ++n)
    features.push_back("pre" + std::to_string(n) + "_0=" + std::string(text::prefix(lower, n)));
  for (std::size_t n = 1; n <= 3 && n <= length; ++n)
    features.push_back("suf" + std::to_string(n) + "_0=" + std::string(text::suffix(lower, n)));
  return features;
}

}  // namespace nerkit
