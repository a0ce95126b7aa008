#include "nerkit/tag.hpp"

#include <algorithm>

namespace nerkit {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

std::optional<Tag> Tag::parse(std::string_view text) {
  if (text == "O") return Tag::outside();
  if (text.size() < 3 || text[1] != '-') return std::nullopt;
  Prefix prefix;
  switch (text[0]) {
    case 'B': prefix = Prefix::B; break;
    case 'I': prefix = Prefix::I; break;
    default: return std::nullopt;
  }
  auto type = text.substr(2);
  if (std::any_of(type.begin(), type.end(), is_ascii_space)) return std::nullopt;
  return Tag{prefix, std::string(type)};
}

std::string Tag::str() const {
  if (prefix == Prefix::O) return "O";
  std::string out;
  out.reserve(type.size() + 2);
  out += static_cast<char>(prefix);
  out += '-';
  out += type;
  return out;
}

}  // namespace nerkit
