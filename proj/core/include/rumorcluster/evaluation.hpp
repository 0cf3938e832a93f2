#pragma once

#include "rumorcluster/features.hpp"
#include "rumorcluster/post.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rumorcluster {

/// Standard confusion counts with Rumor as the positive class.
struct ConfusionMatrix {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;

    std::uint64_t total() const { return tp + fp + fn + tn; }
};

/// Accuracy, precision, recall, F1 in [0, 1]; a metric is absent (NA) when
/// its denominator is zero.
struct Metrics {
    double accuracy = 0.0;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;
};

/// Resolve the cluster-to-class mapping: try both {0->Rumor, 1->NonRumor}
/// and its flip, keep the one with higher accuracy (ties: cluster 0 is
/// Rumor). Returns per-point predicted labels.
std::vector<Label> align_labels(const std::vector<int>& assignment,
                                const std::vector<Label>& truth);

ConfusionMatrix confusion(const std::vector<Label>& predicted,
                          const std::vector<Label>& truth);

/// accuracy = (TP+TN)/(P+N); precision = TP/(TP+FP); recall = TP/(TP+FN);
/// f1 = 2TP/(2TP+FP+FN); each NA when its denominator is zero.
Metrics metrics(const ConfusionMatrix& cm);

/// Accuracy of always predicting the more frequent class.
double majority_baseline(const std::vector<Label>& truth);

/// Five-number summary with linear-interpolation quantiles.
struct FiveNumberSummary {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

/// Per-feature, per-class box-plot statistics; a class with no rows gets an
/// absent summary.
struct FeatureClassStats {
    std::string feature;
    std::optional<FiveNumberSummary> rumor;
    std::optional<FiveNumberSummary> nonrumor;
};

std::vector<FeatureClassStats> feature_class_stats(const FeatureMatrix& m,
                                                   const std::vector<Label>& truth);

} // namespace rumorcluster
