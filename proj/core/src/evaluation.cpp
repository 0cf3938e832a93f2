#include "rumorcluster/evaluation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rumorcluster {

namespace {

// Linear-interpolation quantile on sorted values (the numpy default).
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double pos = q * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

FiveNumberSummary summarize(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    FiveNumberSummary s;
    s.min = values.front();
    s.q1 = quantile_sorted(values, 0.25);
    s.median = quantile_sorted(values, 0.5);
    s.q3 = quantile_sorted(values, 0.75);
    s.max = values.back();
    return s;
}

} // namespace

std::vector<Label> align_labels(const std::vector<int>& assignment,
                                const std::vector<Label>& truth) {
    if (assignment.size() != truth.size()) {
        throw std::invalid_argument("align_labels: assignment has " +
                                    std::to_string(assignment.size()) +
                                    " entries, truth has " + std::to_string(truth.size()));
    }
    if (assignment.empty()) {
        throw std::invalid_argument("align_labels: empty input");
    }

    std::size_t hits_direct = 0, hits_flipped = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        const Label direct = assignment[i] == 0 ? Label::Rumor : Label::NonRumor;
        const Label flipped = assignment[i] == 0 ? Label::NonRumor : Label::Rumor;
        if (direct == truth[i]) ++hits_direct;
        if (flipped == truth[i]) ++hits_flipped;
    }

    // Ties keep cluster 0 as Rumor.
    const bool flip = hits_flipped > hits_direct;
    std::vector<Label> predicted(assignment.size());
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        const bool zero = assignment[i] == 0;
        predicted[i] = (zero != flip) ? Label::Rumor : Label::NonRumor;
    }
    return predicted;
}

ConfusionMatrix confusion(const std::vector<Label>& predicted,
                          const std::vector<Label>& truth) {
    if (predicted.size() != truth.size()) {
        throw std::invalid_argument("confusion: predicted has " +
                                    std::to_string(predicted.size()) +
                                    " entries, truth has " + std::to_string(truth.size()));
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const bool pred_rumor = predicted[i] == Label::Rumor;
        const bool true_rumor = truth[i] == Label::Rumor;
        if (pred_rumor && true_rumor) ++cm.tp;
        else if (pred_rumor && !true_rumor) ++cm.fp;
        else if (!pred_rumor && true_rumor) ++cm.fn;
        else ++cm.tn;
    }
    return cm;
}

Metrics metrics(const ConfusionMatrix& cm) {
    if (cm.total() == 0) throw std::invalid_argument("metrics: empty confusion matrix");

    Metrics out;
    out.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
    if (cm.tp + cm.fp > 0) {
        out.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
    }
    if (cm.tp + cm.fn > 0) {
        out.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
    }
    if (2 * cm.tp + cm.fp + cm.fn > 0) {
        out.f1 = static_cast<double>(2 * cm.tp) /
                 static_cast<double>(2 * cm.tp + cm.fp + cm.fn);
    }
    return out;
}

double majority_baseline(const std::vector<Label>& truth) {
    if (truth.empty()) throw std::invalid_argument("majority_baseline: empty input");
    std::size_t rumors = 0;
    for (Label l : truth) {
        if (l == Label::Rumor) ++rumors;
    }
    const std::size_t majority = std::max(rumors, truth.size() - rumors);
    return static_cast<double>(majority) / static_cast<double>(truth.size());
}

std::vector<FeatureClassStats> feature_class_stats(const FeatureMatrix& m,
                                                   const std::vector<Label>& truth) {
    if (m.values.rows() != truth.size()) {
        throw std::invalid_argument("feature_class_stats: matrix has " +
                                    std::to_string(m.values.rows()) + " rows, truth has " +
                                    std::to_string(truth.size()));
    }

    std::vector<FeatureClassStats> out;
    out.reserve(m.values.cols());
    for (std::size_t j = 0; j < m.values.cols(); ++j) {
        FeatureClassStats stats;
        stats.feature = j < m.column_names.size() ? m.column_names[j]
                                                  : "column_" + std::to_string(j);
        std::vector<double> rumor_values, nonrumor_values;
        for (std::size_t i = 0; i < m.values.rows(); ++i) {
            (truth[i] == Label::Rumor ? rumor_values : nonrumor_values)
                .push_back(m.values(i, j));
        }
        if (!rumor_values.empty()) stats.rumor = summarize(std::move(rumor_values));
        if (!nonrumor_values.empty()) {
            stats.nonrumor = summarize(std::move(nonrumor_values));
        }
        out.push_back(std::move(stats));
    }
    return out;
}

} // namespace rumorcluster
