#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nerkit/tag.hpp"

namespace nerkit {

// Half-open token interval [start, end) carrying one entity type.
struct EntitySpan {
  std::string type;
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
  friend auto operator<=>(const EntitySpan&, const EntitySpan&) = default;
};

// Placeholder type used by erase_types.
inline constexpr std::string_view kErasedType = "ENT";

// Lenient (conlleval / seqeval default) chunking: B-X always opens a chunk,
// I-X opens one unless it directly follows B-X or I-X. A chunk extends over
// the following I-X tags. Result is sorted and non-overlapping.
std::vector<EntitySpan> extract_chunks(std::span<const Tag> tags);

// Rewrites tags so every chunk starts with B and continues with I, without
// changing extract_chunks. Idempotent.
std::vector<Tag> normalize_iob2(std::span<const Tag> tags);

// normalize_iob2, then every entity type becomes kErasedType. Chunk
// boundaries are preserved exactly.
std::vector<Tag> erase_types(std::span<const Tag> tags);

}  // namespace nerkit
