#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Small Unicode helpers over UTF-8 strings.
namespace nerkit::text {

// Full Unicode lowercase mapping (root locale).
std::string to_lower(std::string_view utf8);

// Number of code points; malformed bytes count as one each.
std::size_t code_point_count(std::string_view utf8);

// First / last `n` code points (the whole string when shorter).
std::string_view prefix(std::string_view utf8, std::size_t n);
std::string_view suffix(std::string_view utf8, std::size_t n);

}  // namespace nerkit::text
