#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rumorcluster {

enum class Label { Rumor, NonRumor };

inline const char* label_name(Label l) { return l == Label::Rumor ? "rumor" : "nonrumor"; }

/// One social-media post: text plus the raw account/engagement metadata the
/// feature extractors read. Ground-truth label is carried along but consumed
/// only by evaluation.
struct PostRecord {
    std::string id;
    std::string text;                       // UTF-8, may be empty
    std::int64_t created_at = 0;            // epoch seconds
    std::int64_t favorite_count = 0;
    std::int64_t retweet_count = 0;
    bool possibly_sensitive = false;
    std::int64_t user_created_at = 0;       // epoch seconds
    bool user_default_profile_image = false;
    bool user_verified = false;
    std::int64_t user_followers_count = 0;
    std::int64_t user_listed_count = 0;
    std::int64_t user_statuses_count = 0;
    std::int64_t user_friends_count = 0;
    std::int64_t user_favourites_count = 0;
    Label label = Label::NonRumor;

    bool operator==(const PostRecord&) const = default;
};

/// Named collection of posts for one breaking-news event. Post ids are unique
/// and order is stable across loads of the same source.
struct EventDataset {
    std::string event_name;
    std::vector<PostRecord> posts;

    std::size_t size() const { return posts.size(); }

    std::vector<Label> labels() const {
        std::vector<Label> out;
        out.reserve(posts.size());
        for (const auto& p : posts) out.push_back(p.label);
        return out;
    }
};

} // namespace rumorcluster
