// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>

namespace fragx::model {

struct Metrics {
  double auc = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  /// precision is reported as 0 when the model predicts no positives; this
  /// flag distinguishes that from a genuine zero.
  bool zero_predicted_positives = false;
};

/// Rank (Mann-Whitney) AUC with average ranks for tied scores. Order of the
/// samples does not matter. Throws DataError unless both classes are
/// present.
double roc_auc(std::span<const double> scores,
               std::span<const std::uint8_t> labels);

/// AUC plus threshold metrics; a sample counts as predicted-positive when
/// its score is >= threshold.
Metrics compute_metrics(std::span<const double> scores,
                        std::span<const std::uint8_t> labels,
                        double threshold = 0.5);

}  // namespace fragx::model
