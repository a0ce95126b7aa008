#include <random>

#include <gtest/gtest.h>

#include "nerkit/chunking.hpp"
#include "support/oracles.hpp"

using namespace nerkit;

namespace {

std::vector<Tag> tags(std::initializer_list<const char*> names) {
  std::vector<Tag> out;
  for (const auto* n : names) out.push_back(*Tag::parse(n));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> bounds(const std::vector<EntitySpan>& spans) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& s : spans) out.emplace_back(s.start, s.end);
  return out;
}

// Every tag sequence of length 0..max_len over the five-letter alphabet,
// last position varying fastest.
template <typename F>
void for_each_sequence(std::size_t max_len, F&& f) {
  const std::vector<Tag> alphabet = tags({"O", "B-A", "I-A", "B-B", "I-B"});
  for (std::size_t n = 0; n <= max_len; ++n) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::vector<Tag> seq;
      for (auto i : idx) seq.push_back(alphabet[i]);
      f(seq);
      std::size_t pos = n;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < alphabet.size()) {
          done = false;
          break;
        }
        idx[pos] = 0;
      }
      if (done) break;
    }
  }
}

}  // namespace

TEST(ExtractChunks, PaperExample) {
  const auto spans = extract_chunks(tags({"B-ORG", "O", "B-MISC", "O", "O", "O", "B-MISC", "O", "O"}));
  EXPECT_EQ(spans, (std::vector<EntitySpan>{{"ORG", 0, 1}, {"MISC", 2, 3}, {"MISC", 6, 7}}));
}

TEST(ExtractChunks, NoEntities) { EXPECT_TRUE(extract_chunks(tags({"O", "O", "O"})).empty()); }

TEST(ExtractChunks, DanglingInsideStartsChunk) {
  EXPECT_EQ(extract_chunks(tags({"I-PER", "I-PER", "O", "I-PER"})),
            (std::vector<EntitySpan>{{"PER", 0, 2}, {"PER", 3, 4}}));
}

TEST(ExtractChunks, TypeChangeOpensChunk) {
  EXPECT_EQ(extract_chunks(tags({"B-PER", "I-ORG"})), (std::vector<EntitySpan>{{"PER", 0, 1}, {"ORG", 1, 2}}));
}

TEST(ExtractChunks, EmptyInput) { EXPECT_TRUE(extract_chunks({}).empty()); }

// Frozen from seqeval 1.2.2 get_entities over the same enumeration: 75,000
// chunks in total, folded into a positional fingerprint.
TEST(ExtractChunks, MatchesSeqevalFingerprint) {
  constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
  std::uint64_t fingerprint = 0;
  std::uint64_t index = 0;
  std::size_t total = 0;
  for_each_sequence(6, [&](const std::vector<Tag>& seq) {
    for (const auto& s : extract_chunks(seq)) {
      ++total;
      const unsigned __int128 v = static_cast<unsigned __int128>(fingerprint) * 1000003u + index * 7919u +
                                  s.start * 131u + s.end * 17u + (s.type == "A" ? 1u : 2u);
      fingerprint = static_cast<std::uint64_t>(v % kMod);
    }
    ++index;
  });
  EXPECT_EQ(index, 19531u);
  EXPECT_EQ(total, 75000u);
  EXPECT_EQ(fingerprint, 259612263175571658u);
}

TEST(ExtractChunks, OracleEquivalenceExhaustive) {
  std::size_t checked = 0;
  for_each_sequence(6, [&](const std::vector<Tag>& seq) {
    ASSERT_EQ(extract_chunks(seq), nerkit::testing::oracle_chunks(seq));
    ++checked;
  });
  EXPECT_EQ(checked, 19531u);
}

TEST(ExtractChunks, SpansSortedDisjointInBounds) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto seq = nerkit::testing::random_tags(rng, rng() % 20, 4);
    const auto spans = extract_chunks(seq);
    std::size_t last_end = 0;
    for (const auto& s : spans) {
      ASSERT_LT(s.start, s.end);
      ASSERT_LE(s.end, seq.size());
      ASSERT_GE(s.start, last_end);
      last_end = s.end;
    }
  }
}

TEST(NormalizeIob2, Examples) {
  EXPECT_EQ(normalize_iob2(tags({"B-PER", "I-PER"})), tags({"B-PER", "I-PER"}));
  EXPECT_EQ(normalize_iob2(tags({"I-PER", "I-PER"})), tags({"B-PER", "I-PER"}));
  EXPECT_EQ(normalize_iob2(tags({"I-PER", "I-ORG"})), tags({"B-PER", "B-ORG"}));
}

TEST(EraseTypes, Examples) {
  EXPECT_EQ(erase_types(tags({"B-PER", "I-PER", "O"})), tags({"B-ENT", "I-ENT", "O"}));
  EXPECT_EQ(erase_types(tags({"B-PER", "B-ORG"})), tags({"B-ENT", "B-ENT"}));
  EXPECT_EQ(erase_types(tags({"I-PER", "I-ORG"})), tags({"B-ENT", "B-ENT"}));
}

TEST(NormalizeIob2, IdempotentAndChunkInvariantExhaustive) {
  for_each_sequence(6, [](const std::vector<Tag>& seq) {
    const auto once = normalize_iob2(seq);
    ASSERT_EQ(extract_chunks(once), extract_chunks(seq));
    ASSERT_EQ(normalize_iob2(once), once);
    for (std::size_t i = 0; i < once.size(); ++i)
      if (once[i].prefix == Prefix::I) {
        ASSERT_TRUE(i > 0 && !once[i - 1].is_outside());
      }
  });
}

TEST(EraseTypes, BoundaryPreservationExhaustive) {
  for_each_sequence(6, [](const std::vector<Tag>& seq) {
    const auto erased = erase_types(seq);
    ASSERT_EQ(bounds(extract_chunks(erased)), bounds(extract_chunks(seq)));
    for (const auto& s : extract_chunks(erased)) ASSERT_EQ(s.type, kErasedType);
  });
}
