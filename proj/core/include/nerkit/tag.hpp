#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace nerkit {

enum class Prefix : char { O = 'O', B = 'B', I = 'I' };

// One IOB tag: "O", or "B-<type>" / "I-<type>" with a non-empty,
// whitespace-free entity type.
struct Tag {
  Prefix prefix = Prefix::O;
  std::string type;  // empty iff prefix == O

  static Tag outside() { return {}; }
  static Tag begin(std::string type) { return {Prefix::B, std::move(type)}; }
  static Tag inside(std::string type) { return {Prefix::I, std::move(type)}; }

  // Returns nullopt when `text` does not follow the tag grammar.
  static std::optional<Tag> parse(std::string_view text);

  bool is_outside() const noexcept { return prefix == Prefix::O; }
  std::string str() const;

  friend bool operator==(const Tag&, const Tag&) = default;
  friend auto operator<=>(const Tag&, const Tag&) = default;
};

}  // namespace nerkit
