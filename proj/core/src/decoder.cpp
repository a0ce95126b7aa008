#include <limits>

#include "nerkit/error.hpp"
#include "nerkit/tagger.hpp"

namespace nerkit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

bool allowed_start(const Tag& tag) { return tag.prefix != Prefix::I; }

bool allowed_transition(const Tag& prev, const Tag& next) {
  if (next.prefix != Prefix::I) return true;
  return !prev.is_outside() && prev.type == next.type;
}

std::vector<std::size_t> constrained_viterbi(const EmissionScores& scores, std::span<const Tag> labels) {
  const auto n = scores.positions;
  const auto k = labels.size();
  if (n == 0) return {};
  if (k == 0 || scores.labels != k) throw ModelLabelMismatch("decoder: label count mismatch");

  std::vector<char> allowed(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) allowed[a * k + b] = allowed_transition(labels[a], labels[b]);

  // best[i][y]: best score of positions i..n-1 given label y at position i.
  std::vector<double> best(n * k, kNegInf);
  for (std::size_t y = 0; y < k; ++y) best[(n - 1) * k + y] = scores.at(n - 1, y);
  for (std::size_t i = n - 1; i-- > 0;) {
    for (std::size_t y = 0; y < k; ++y) {
      double tail = kNegInf;
      for (std::size_t z = 0; z < k; ++z)
        if (allowed[y * k + z] && best[(i + 1) * k + z] > tail) tail = best[(i + 1) * k + z];
      best[i * k + y] = tail == kNegInf ? kNegInf : scores.at(i, y) + tail;
    }
  }

  // Forward pass: take the smallest id that still reaches the optimum.
  std::vector<std::size_t> path(n);
  std::size_t prev = k;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t choice = k;
    double top = kNegInf;
    for (std::size_t y = 0; y < k; ++y) {
      const bool ok = prev == k ? allowed_start(labels[y]) : static_cast<bool>(allowed[prev * k + y]);
      if (!ok) continue;
      const double v = best[i * k + y];
      if (choice == k || v > top) {
        choice = y;
        top = v;
      }
    }
    path[i] = choice;
    prev = choice;
  }
  return path;
}

EmissionScores emission_scores(std::span<const std::string> tokens, const TaggerModel& model) {
  EmissionScores scores(tokens.size(), model.labels.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (const auto& feature : featurize(tokens, i)) {
      auto it = model.weights.find(feature);
      if (it == model.weights.end()) continue;
      for (std::size_t y = 0; y < scores.labels; ++y) scores.at(i, y) += it->second[y];
    }
  }
  return scores;
}

std::vector<Tag> viterbi_decode(std::span<const std::string> tokens, const TaggerModel& model) {
  if (tokens.empty()) throw EmptySentence();
  if (model.labels.size() == 0) throw ModelLabelMismatch("model has no labels");
  const auto path = constrained_viterbi(emission_scores(tokens, model), model.labels.tags());
  std::vector<Tag> tags;
  tags.reserve(path.size());
  for (auto id : path) tags.push_back(model.labels.tag(id));
  return tags;
}

}  // namespace nerkit
