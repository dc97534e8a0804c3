// SPDX-License-Identifier: Apache-2.0

#include "fragx/model/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "fragx/errors.hpp"

namespace fragx::model {

double roc_auc(std::span<const double> scores,
               std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size())
    throw DataError("scores and labels differ in length");
  std::size_t positives = 0;
  for (std::uint8_t l : labels) positives += l != 0;
  std::size_t negatives = labels.size() - positives;
  if (positives == 0 || negatives == 0)
    throw DataError("AUC is undefined for a single-class sample set");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });

  // Average ranks over tied score groups, then the Mann-Whitney statistic.
  double positive_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    double avg_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    for (std::size_t k = i; k < j; ++k) {
      if (labels[order[k]] != 0) positive_rank_sum += avg_rank;
    }
    i = j;
  }
  double p = static_cast<double>(positives);
  double n = static_cast<double>(negatives);
  return (positive_rank_sum - p * (p + 1.0) / 2.0) / (p * n);
}

Metrics compute_metrics(std::span<const double> scores,
                        std::span<const std::uint8_t> labels,
                        double threshold) {
  Metrics m;
  m.auc = roc_auc(scores, labels);
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    bool predicted = scores[i] >= threshold;
    bool actual = labels[i] != 0;
    if (predicted && actual) ++tp;
    if (predicted && !actual) ++fp;
    if (!predicted && actual) ++fn;
  }
  if (tp + fp == 0) {
    m.precision = 0.0;
    m.zero_predicted_positives = true;
  } else {
    m.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  }
  m.recall = tp + fn == 0 ? 0.0
                          : static_cast<double>(tp) / static_cast<double>(tp + fn);
  m.f1 = m.precision + m.recall == 0.0
             ? 0.0
             : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

}  // namespace fragx::model
