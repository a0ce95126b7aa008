#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "nerkit/error.hpp"
#include "nerkit/metrics.hpp"
#include "support/oracles.hpp"

using namespace nerkit;

namespace {

std::vector<Tag> tags(std::initializer_list<const char*> names) {
  std::vector<Tag> out;
  for (const auto* n : names) out.push_back(*Tag::parse(n));
  return out;
}

using Corpus = std::vector<std::vector<Tag>>;

}  // namespace

TEST(Score, PerfectPrediction) {
  const Corpus gold{tags({"B-PER", "I-PER", "O"}), tags({"B-LOC"})};
  const auto r = score(gold, gold, EvalMode::type_aware);
  EXPECT_EQ(r.micro.precision, 1.0);
  EXPECT_EQ(r.micro.recall, 1.0);
  EXPECT_EQ(r.micro.f1, 1.0);
}

TEST(Score, AllOutsidePredictionIsZero) {
  const Corpus gold{tags({"B-PER", "I-PER", "O"})};
  const Corpus pred{tags({"O", "O", "O"})};
  const auto r = score(gold, pred, EvalMode::type_aware);
  EXPECT_EQ(r.micro, (Prf{0.0, 0.0, 0.0}));
  EXPECT_EQ(r.counts, (EvalCounts{0, 0, 1}));
}

// Counts and scores confirmed with seqeval 1.2.2 (0.5, 0.333..., 0.4).
TEST(Score, MixedFixture) {
  const Corpus gold{tags({"B-PER", "I-PER", "O", "B-LOC", "O", "B-ORG"})};
  const Corpus pred{tags({"B-PER", "I-PER", "O", "O", "B-MISC", "O"})};
  const auto r = score(gold, pred, EvalMode::type_aware);
  EXPECT_EQ(r.counts, (EvalCounts{1, 1, 2}));
  EXPECT_NEAR(r.micro.precision, 0.5, 1e-12);
  EXPECT_NEAR(r.micro.recall, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.micro.f1, 0.4, 1e-12);
  EXPECT_EQ(r.per_type.at("PER").support, 1u);
  EXPECT_EQ(r.per_type.at("MISC").support, 0u);
  EXPECT_EQ(r.per_type.at("MISC").counts.fp, 1u);
}

// seqeval 1.2.2 gives P = R = F1 = 0.25 here.
TEST(Score, LenientChunksAcrossSentences) {
  const Corpus gold{tags({"B-PER", "I-PER", "O"}), tags({"I-LOC", "B-LOC", "O", "B-ORG"})};
  const Corpus pred{tags({"B-PER", "I-ORG", "O"}), tags({"B-LOC", "I-LOC", "O", "I-ORG"})};
  const auto r = score(gold, pred, EvalMode::type_aware);
  EXPECT_NEAR(r.micro.precision, 0.25, 1e-12);
  EXPECT_NEAR(r.micro.recall, 0.25, 1e-12);
  EXPECT_NEAR(r.micro.f1, 0.25, 1e-12);
}

TEST(Score, WrongTypeSameSpan) {
  const Corpus gold{tags({"B-PER"})};
  const Corpus pred{tags({"B-ORG"})};
  EXPECT_EQ(score(gold, pred, EvalMode::type_aware).micro.f1, 0.0);
  const auto ignored = score(gold, pred, EvalMode::type_ignored);
  EXPECT_EQ(ignored.micro.f1, 1.0);
  EXPECT_EQ(ignored.mode, EvalMode::type_ignored);
  EXPECT_TRUE(ignored.per_type.contains("ENT"));
}

TEST(Score, ShapeMismatch) {
  const Corpus gold{tags({"O"}), tags({"O", "O"})};
  const Corpus short_pred{tags({"O"})};
  const Corpus bad_pred{tags({"O"}), tags({"O"})};
  EXPECT_THROW(score(gold, short_pred, EvalMode::type_aware), LengthMismatch);
  try {
    score(gold, bad_pred, EvalMode::type_aware);
    FAIL();
  } catch (const LengthMismatch& e) {
    EXPECT_EQ(e.sentence_index(), 1u);
  }
}

TEST(Score, Properties) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1500; ++trial) {
    Corpus gold, pred;
    const auto sentences = 1 + rng() % 4;
    for (std::size_t s = 0; s < sentences; ++s) {
      const auto n = rng() % 13;
      gold.push_back(nerkit::testing::random_tags(rng, n, 3));
      pred.push_back(nerkit::testing::random_tags(rng, n, 3));
    }
    const auto aware = score(gold, pred, EvalMode::type_aware);
    const auto ignored = score(gold, pred, EvalMode::type_ignored);
    ASSERT_GE(ignored.micro.f1, aware.micro.f1);

    const auto swapped = score(pred, gold, EvalMode::type_aware);
    ASSERT_EQ(aware.micro.precision, swapped.micro.recall);

    EvalCounts sum;
    for (const auto& [type, entry] : aware.per_type) {
      sum += entry.counts;
      ASSERT_LE(entry.counts.tp, entry.support);
      ASSERT_EQ(entry.counts.tp + entry.counts.fn, entry.support);
    }
    ASSERT_EQ(sum, aware.counts);

    for (const auto& p : {aware.micro, ignored.micro}) {
      for (double v : {p.precision, p.recall, p.f1}) ASSERT_TRUE(v >= 0.0 && v <= 1.0);
      const double expect = p.precision + p.recall == 0.0 ? 0.0 : 2 * p.precision * p.recall / (p.precision + p.recall);
      ASSERT_NEAR(p.f1, expect, 1e-12);
    }

    std::vector<std::size_t> order(gold.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Corpus g2, p2;
    for (auto i : order) {
      g2.push_back(gold[i]);
      p2.push_back(pred[i]);
    }
    ASSERT_EQ(score(g2, p2, EvalMode::type_aware), aware);
  }
}

TEST(RowAverage, PaperRows) {
  const std::vector<double> table5{91.8, 62.2, 51.7, 44.7, 0.0, 0.0, 31.8};
  EXPECT_EQ(format_fixed1(row_average(table5)), "40.3");
  const std::vector<double> table8{88.3, 56.7, 49.0, 41.4, 0.0, 0.0, 11.7, 4.2, 88.3};
  EXPECT_EQ(format_fixed1(row_average(table8)), "37.7");
  const std::vector<double> single{12.5};
  EXPECT_EQ(row_average(single), 12.5);
  EXPECT_THROW(row_average({}), EmptyInput);
}

TEST(Report, JsonShape) {
  const Corpus gold{tags({"B-PER", "O"})};
  const auto j = to_json(score(gold, gold, EvalMode::type_ignored));
  EXPECT_EQ(j["mode"], "type-ignored");
  EXPECT_EQ(j["micro"]["f1"], 1.0);
  EXPECT_EQ(j["counts"]["tp"], 1);
  EXPECT_EQ(j["per_type"]["ENT"]["support"], 1);
}

TEST(Report, TsvHasMicroRowAndAlignedColumns) {
  const Corpus gold{tags({"B-PER", "O", "B-LOC"})};
  const Corpus pred{tags({"B-PER", "O", "O"})};
  const auto tsv = render_tsv(score(gold, pred, EvalMode::type_aware));
  EXPECT_NE(tsv.find("micro[type-aware]"), std::string::npos);
  EXPECT_NE(tsv.find("66.7"), std::string::npos);
  std::istringstream in(tsv);
  std::size_t width = std::string::npos;
  for (std::string line; std::getline(in, line);) {
    const auto tab = line.find('\t');
    if (width == std::string::npos) width = tab;
    EXPECT_EQ(tab, width);
  }
}
