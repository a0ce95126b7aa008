#include "nerkit/chunking.hpp"

namespace nerkit {

namespace {

bool starts_chunk(std::span<const Tag> tags, std::size_t i) {
  const auto& tag = tags[i];
  if (tag.prefix == Prefix::B) return true;
  if (tag.prefix != Prefix::I) return false;
  if (i == 0) return true;
  const auto& prev = tags[i - 1];
  return prev.is_outside() || prev.type != tag.type;
}

}  // namespace

std::vector<EntitySpan> extract_chunks(std::span<const Tag> tags) {
  std::vector<EntitySpan> spans;
  std::size_t i = 0;
  while (i < tags.size()) {
    if (!starts_chunk(tags, i)) {
      ++i;
      continue;
    }
    const auto start = i++;
    while (i < tags.size() && tags[i].prefix == Prefix::I && tags[i].type == tags[start].type) ++i;
    spans.push_back({tags[start].type, start, i});
  }
  return spans;
}

std::vector<Tag> normalize_iob2(std::span<const Tag> tags) {
  std::vector<Tag> out(tags.size());
  for (const auto& span : extract_chunks(tags)) {
    out[span.start] = Tag::begin(span.type);
    for (auto i = span.start + 1; i < span.end; ++i) out[i] = Tag::inside(span.type);
  }
  return out;
}

std::vector<Tag> erase_types(std::span<const Tag> tags) {
  auto out = normalize_iob2(tags);
  for (auto& tag : out)
    if (!tag.is_outside()) tag.type = kErasedType;
  return out;
}

}  // namespace nerkit
