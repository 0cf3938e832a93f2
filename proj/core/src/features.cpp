#include "rumorcluster/features.hpp"

#include "rumorcluster/error.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rumorcluster {

namespace {

// Unicode whitespace code points (White_Space property).
bool is_unicode_space(std::uint32_t cp) {
    switch (cp) {
        case 0x0009: case 0x000A: case 0x000B: case 0x000C: case 0x000D:
        case 0x0020: case 0x0085: case 0x00A0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

// Decode one UTF-8 code point at i, advancing i. Invalid bytes are passed
// through as single code points so that malformed text still tokenizes.
std::uint32_t next_code_point(const std::string& s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    const unsigned char b0 = byte(i);
    std::size_t len = 1;
    std::uint32_t cp = b0;
    if ((b0 & 0x80u) == 0x00u) {
        len = 1;
    } else if ((b0 & 0xE0u) == 0xC0u) {
        len = 2;
        cp = b0 & 0x1Fu;
    } else if ((b0 & 0xF0u) == 0xE0u) {
        len = 3;
        cp = b0 & 0x0Fu;
    } else if ((b0 & 0xF8u) == 0xF0u) {
        len = 4;
        cp = b0 & 0x07u;
    }
    if (i + len > s.size()) {
        ++i;
        return b0;
    }
    for (std::size_t k = 1; k < len; ++k) {
        const unsigned char bk = byte(i + k);
        if ((bk & 0xC0u) != 0x80u) {
            ++i;
            return b0;
        }
        cp = (cp << 6) | (bk & 0x3Fu);
    }
    i += len;
    return cp;
}

const std::vector<std::string> kContentColumns = {
    "word_count", "period_present", "question_mark", "capital_ratio", "hashtag_present"};
const std::vector<std::string> kSocialColumns = {
    "time_difference", "possibly_sensitive", "favorite_count", "retweet_count",
    "default_profile_image", "verified", "follower_count", "listed_count",
    "status_count", "friend_count", "total_favorite_count"};

} // namespace

const char* feature_set_name(FeatureSet fs) {
    switch (fs) {
        case FeatureSet::Content: return "content";
        case FeatureSet::Social: return "social";
        case FeatureSet::Both: return "both";
    }
    return "both";
}

std::vector<std::string> feature_column_names(FeatureSet fs) {
    switch (fs) {
        case FeatureSet::Content: return kContentColumns;
        case FeatureSet::Social: return kSocialColumns;
        case FeatureSet::Both: {
            std::vector<std::string> both = kContentColumns;
            both.insert(both.end(), kSocialColumns.begin(), kSocialColumns.end());
            return both;
        }
    }
    return {};
}

std::vector<double> extract_content_features(const PostRecord& post) {
    const std::string& text = post.text;
    std::size_t words = 0;
    bool in_token = false;
    bool period = false, question = false, hashtag = false;
    std::size_t upper = 0, lower = 0;

    std::size_t i = 0;
    while (i < text.size()) {
        const std::uint32_t cp = next_code_point(text, i);
        if (is_unicode_space(cp)) {
            in_token = false;
        } else {
            if (!in_token) {
                ++words;
                in_token = true;
            }
            if (cp == '.') period = true;
            else if (cp == '?') question = true;
            else if (cp == '#') hashtag = true;
            else if (cp >= 'A' && cp <= 'Z') ++upper;
            else if (cp >= 'a' && cp <= 'z') ++lower;
        }
    }

    const double capital_ratio =
        static_cast<double>(upper) / static_cast<double>(lower > 0 ? lower : 1);
    return {static_cast<double>(words), period ? 1.0 : 0.0, question ? 1.0 : 0.0,
            capital_ratio, hashtag ? 1.0 : 0.0};
}

std::vector<double> extract_social_features(const PostRecord& post) {
    const double time_difference =
        static_cast<double>(post.created_at - post.user_created_at);
    return {time_difference,
            post.possibly_sensitive ? 1.0 : 0.0,
            static_cast<double>(post.favorite_count),
            static_cast<double>(post.retweet_count),
            post.user_default_profile_image ? 1.0 : 0.0,
            post.user_verified ? 1.0 : 0.0,
            static_cast<double>(post.user_followers_count),
            static_cast<double>(post.user_listed_count),
            static_cast<double>(post.user_statuses_count),
            static_cast<double>(post.user_friends_count),
            static_cast<double>(post.user_favourites_count)};
}

FeatureMatrix build_matrix(const EventDataset& dataset, FeatureSet fs) {
    if (dataset.posts.empty()) {
        throw std::invalid_argument("build_matrix: no posts");
    }
    FeatureMatrix out;
    out.feature_set = fs;
    out.column_names = feature_column_names(fs);
    const std::size_t n = dataset.posts.size();
    const std::size_t d = out.column_names.size();
    out.values = Matrix(n, d);
    out.ids.reserve(n);

    for (std::size_t i = 0; i < n; ++i) {
        const PostRecord& p = dataset.posts[i];
        out.ids.push_back(p.id);
        std::vector<double> row;
        if (fs == FeatureSet::Content) {
            row = extract_content_features(p);
        } else if (fs == FeatureSet::Social) {
            row = extract_social_features(p);
        } else {
            row = extract_content_features(p);
            const auto social = extract_social_features(p);
            row.insert(row.end(), social.begin(), social.end());
        }
        for (std::size_t j = 0; j < d; ++j) out.values(i, j) = row[j];
    }
    return out;
}

void write_feature_csv(const FeatureMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    out << "id";
    for (const auto& name : m.column_names) out << ',' << name;
    out << '\n';
    char buf[64];
    for (std::size_t i = 0; i < m.values.rows(); ++i) {
        out << m.ids[i];
        for (std::size_t j = 0; j < m.values.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.10g", m.values(i, j));
            out << ',' << buf;
        }
        out << '\n';
    }
    if (!out) throw InputError("write failed for " + path.string());
}

} // namespace rumorcluster
