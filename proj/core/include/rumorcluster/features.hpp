#pragma once

#include "rumorcluster/matrix.hpp"
#include "rumorcluster/post.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace rumorcluster {

enum class FeatureSet { Content, Social, Both };

const char* feature_set_name(FeatureSet fs);

/// Canonical column names for a feature set: 5 content columns, 11 social
/// columns, or the 16-column concatenation.
std::vector<std::string> feature_column_names(FeatureSet fs);

/// n x D feature matrix; row i corresponds to post i of the source dataset.
struct FeatureMatrix {
    Matrix values;
    FeatureSet feature_set = FeatureSet::Both;
    std::vector<std::string> column_names;
    std::vector<std::string> ids;    // row ids, parallel to values rows
};

/// Five content features in canonical order:
/// [word_count, period_present, question_mark, capital_ratio, hashtag_present].
/// Tokens are maximal runs of non-whitespace (Unicode whitespace); the capital
/// ratio counts ASCII letters with the denominator clamped at 1.
std::vector<double> extract_content_features(const PostRecord& post);

/// Eleven social features in canonical order:
/// [time_difference, possibly_sensitive, favorite_count, retweet_count,
///  default_profile_image, verified, follower_count, listed_count,
///  status_count, friend_count, total_favorite_count].
/// time_difference = created_at - user_created_at, kept signed.
std::vector<double> extract_social_features(const PostRecord& post);

/// Assemble the n x D matrix for a feature set (D = 5, 11 or 16).
FeatureMatrix build_matrix(const EventDataset& dataset, FeatureSet fs);

/// CSV export: header `id,<column names>`, one row per post.
void write_feature_csv(const FeatureMatrix& m, const std::filesystem::path& path);

} // namespace rumorcluster
