#include "rumorcluster/ingest.hpp"

#include "rumorcluster/error.hpp"
#include "rumorcluster/rng.hpp"
#include "rumorcluster/timestamp.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace rumorcluster {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Ascending (length, lexicographic): equals numeric order for decimal ids,
// total order for everything else.
bool id_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::int64_t require_count(const json& j, const char* key, const fs::path& where) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw InputError("missing or non-integer field '" + std::string(key) + "' in " +
                         where.string());
    }
    const auto v = j[key].get<std::int64_t>();
    if (v < 0) {
        throw InputError("negative field '" + std::string(key) + "' in " + where.string());
    }
    return v;
}

bool require_bool(const json& j, const char* key, const fs::path& where) {
    if (!j.contains(key) || !j[key].is_boolean()) {
        throw InputError("missing or non-boolean field '" + std::string(key) + "' in " +
                         where.string());
    }
    return j[key].get<bool>();
}

std::string require_string(const json& j, const char* key, const fs::path& where) {
    if (!j.contains(key) || !j[key].is_string()) {
        throw InputError("missing or non-string field '" + std::string(key) + "' in " +
                         where.string());
    }
    return j[key].get<std::string>();
}

PostRecord post_from_raw_tweet(const json& tweet, Label label, const fs::path& where) {
    PostRecord p;
    if (tweet.contains("id_str") && tweet["id_str"].is_string()) {
        p.id = tweet["id_str"].get<std::string>();
    } else if (tweet.contains("id") && tweet["id"].is_number_integer()) {
        p.id = std::to_string(tweet["id"].get<std::int64_t>());
    } else {
        p.id = where.stem().string();
    }
    p.text = require_string(tweet, "text", where);
    p.created_at = parse_twitter_timestamp(require_string(tweet, "created_at", where));
    p.favorite_count = require_count(tweet, "favorite_count", where);
    p.retweet_count = require_count(tweet, "retweet_count", where);
    // Twitter omits possibly_sensitive on most posts; absence means false.
    if (tweet.contains("possibly_sensitive") && tweet["possibly_sensitive"].is_boolean()) {
        p.possibly_sensitive = tweet["possibly_sensitive"].get<bool>();
    }
    if (!tweet.contains("user") || !tweet["user"].is_object()) {
        throw InputError("missing field 'user' in " + where.string());
    }
    const json& user = tweet["user"];
    p.user_created_at = parse_twitter_timestamp(require_string(user, "created_at", where));
    p.user_default_profile_image = require_bool(user, "default_profile_image", where);
    p.user_verified = require_bool(user, "verified", where);
    p.user_followers_count = require_count(user, "followers_count", where);
    p.user_listed_count = require_count(user, "listed_count", where);
    p.user_statuses_count = require_count(user, "statuses_count", where);
    p.user_friends_count = require_count(user, "friends_count", where);
    p.user_favourites_count = require_count(user, "favourites_count", where);
    p.label = label;
    return p;
}

json read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

// Locate the single source tweet of a thread directory.
fs::path source_tweet_path(const fs::path& thread_dir) {
    const fs::path st = thread_dir / "source-tweets";
    if (!fs::is_directory(st)) {
        throw InputError("thread directory lacks source-tweets/: " + st.string());
    }
    const fs::path named = st / (thread_dir.filename().string() + ".json");
    if (fs::is_regular_file(named)) return named;
    std::vector<fs::path> candidates;
    for (const auto& e : fs::directory_iterator(st)) {
        if (e.is_regular_file() && e.path().extension() == ".json") {
            candidates.push_back(e.path());
        }
    }
    if (candidates.empty()) throw InputError("no source tweet JSON under " + st.string());
    if (candidates.size() > 1) {
        throw InputError("ambiguous source tweets under " + st.string());
    }
    return candidates.front();
}

void collect_class_threads(const fs::path& class_dir, Label label,
                           std::vector<PostRecord>& out) {
    if (!fs::is_directory(class_dir)) return;
    std::vector<fs::path> threads;
    for (const auto& e : fs::directory_iterator(class_dir)) {
        if (e.is_directory()) threads.push_back(e.path());
    }
    std::sort(threads.begin(), threads.end());
    for (const auto& t : threads) {
        const fs::path src = source_tweet_path(t);
        out.push_back(post_from_raw_tweet(read_json_file(src), label, src));
    }
}

const std::array<const char*, 15> kJsonlKeys = {
    "id", "text", "created_at", "favorite_count", "retweet_count",
    "possibly_sensitive", "user_created_at", "user_default_profile_image",
    "user_verified", "user_followers_count", "user_listed_count",
    "user_statuses_count", "user_friends_count", "user_favourites_count", "label"};

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

std::int64_t jsonl_int(const json& j, const char* key, std::size_t line, bool nonneg) {
    if (!j[key].is_number_integer()) {
        line_error(line, "field " + std::string(key) + " must be an integer");
    }
    const auto v = j[key].get<std::int64_t>();
    if (nonneg && v < 0) line_error(line, "field " + std::string(key) + " must be >= 0");
    return v;
}

bool jsonl_bool(const json& j, const char* key, std::size_t line) {
    if (!j[key].is_boolean()) {
        line_error(line, "field " + std::string(key) + " must be a boolean");
    }
    return j[key].get<bool>();
}

std::string jsonl_string(const json& j, const char* key, std::size_t line) {
    if (!j[key].is_string()) {
        line_error(line, "field " + std::string(key) + " must be a string");
    }
    return j[key].get<std::string>();
}

} // namespace

std::vector<EventDataset> parse_pheme_tree(const fs::path& root) {
    if (!fs::is_directory(root)) {
        throw InputError("not a directory: " + root.string());
    }
    std::vector<fs::path> event_dirs;
    for (const auto& e : fs::directory_iterator(root)) {
        if (e.is_directory()) event_dirs.push_back(e.path());
    }
    std::sort(event_dirs.begin(), event_dirs.end());
    if (event_dirs.empty()) {
        throw InputError("no event directories under " + root.string());
    }

    std::vector<EventDataset> events;
    for (const auto& dir : event_dirs) {
        EventDataset ds;
        ds.event_name = dir.filename().string();
        collect_class_threads(dir / "rumours", Label::Rumor, ds.posts);
        collect_class_threads(dir / "non-rumours", Label::NonRumor, ds.posts);
        if (ds.posts.empty()) {
            throw InputError("empty event directory: " + dir.string());
        }
        std::sort(ds.posts.begin(), ds.posts.end(),
                  [](const PostRecord& a, const PostRecord& b) { return id_less(a.id, b.id); });
        std::unordered_set<std::string> seen;
        for (const auto& p : ds.posts) {
            if (!seen.insert(p.id).second) {
                throw InputError("duplicate post id " + p.id + " in event " + ds.event_name);
            }
        }
        events.push_back(std::move(ds));
    }
    return events;
}

EventDataset load_posts(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());

    EventDataset ds;
    ds.event_name = path.stem().string();
    std::unordered_set<std::string> seen;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            line_error(lineno, std::string("malformed JSON: ") + e.what());
        }
        if (!j.is_object()) line_error(lineno, "expected a JSON object");
        for (const char* key : kJsonlKeys) {
            if (!j.contains(key)) {
                line_error(lineno, "missing field " + std::string(key));
            }
        }
        for (const auto& item : j.items()) {
            if (std::find_if(kJsonlKeys.begin(), kJsonlKeys.end(), [&](const char* k) {
                    return item.key() == k;
                }) == kJsonlKeys.end()) {
                line_error(lineno, "unknown field " + item.key());
            }
        }

        PostRecord p;
        p.id = jsonl_string(j, "id", lineno);
        p.text = jsonl_string(j, "text", lineno);
        p.created_at = jsonl_int(j, "created_at", lineno, true);
        p.favorite_count = jsonl_int(j, "favorite_count", lineno, true);
        p.retweet_count = jsonl_int(j, "retweet_count", lineno, true);
        p.possibly_sensitive = jsonl_bool(j, "possibly_sensitive", lineno);
        p.user_created_at = jsonl_int(j, "user_created_at", lineno, false);
        p.user_default_profile_image = jsonl_bool(j, "user_default_profile_image", lineno);
        p.user_verified = jsonl_bool(j, "user_verified", lineno);
        p.user_followers_count = jsonl_int(j, "user_followers_count", lineno, true);
        p.user_listed_count = jsonl_int(j, "user_listed_count", lineno, true);
        p.user_statuses_count = jsonl_int(j, "user_statuses_count", lineno, true);
        p.user_friends_count = jsonl_int(j, "user_friends_count", lineno, true);
        p.user_favourites_count = jsonl_int(j, "user_favourites_count", lineno, true);
        const std::string label = jsonl_string(j, "label", lineno);
        if (label == "rumor") p.label = Label::Rumor;
        else if (label == "nonrumor") p.label = Label::NonRumor;
        else line_error(lineno, "label must be \"rumor\" or \"nonrumor\", got \"" + label + "\"");

        if (!seen.insert(p.id).second) line_error(lineno, "duplicate id " + p.id);
        ds.posts.push_back(std::move(p));
    }
    return ds;
}

void write_posts(const EventDataset& dataset, const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    for (const auto& p : dataset.posts) {
        ordered_json j;
        j["id"] = p.id;
        j["text"] = p.text;
        j["created_at"] = p.created_at;
        j["favorite_count"] = p.favorite_count;
        j["retweet_count"] = p.retweet_count;
        j["possibly_sensitive"] = p.possibly_sensitive;
        j["user_created_at"] = p.user_created_at;
        j["user_default_profile_image"] = p.user_default_profile_image;
        j["user_verified"] = p.user_verified;
        j["user_followers_count"] = p.user_followers_count;
        j["user_listed_count"] = p.user_listed_count;
        j["user_statuses_count"] = p.user_statuses_count;
        j["user_friends_count"] = p.user_friends_count;
        j["user_favourites_count"] = p.user_favourites_count;
        j["label"] = label_name(p.label);
        out << j.dump() << '\n';
    }
    if (!out) throw InputError("write failed for " + path.string());
}

EventDataset synth_generate(std::size_t n_rumor, std::size_t n_nonrumor, double gap,
                            std::uint64_t seed) {
    if (n_rumor + n_nonrumor == 0) {
        throw std::invalid_argument("synth_generate: n_rumor + n_nonrumor must be >= 1");
    }
    if (!(gap >= 0.0)) {
        throw std::invalid_argument("synth_generate: gap must be >= 0");
    }

    // Population parameters. The rumor class is shifted by gap standard
    // deviations on exactly these three features.
    constexpr double kWordsMean = 10.0, kWordsSd = 2.0;
    constexpr double kTimeDiffMean = 5.0e7, kTimeDiffSd = 1.0e6;
    constexpr double kFollowersMean = 1000.0, kFollowersSd = 100.0;
    constexpr std::int64_t kCreatedAt = 1409144925;

    Rng rng(seed);
    EventDataset ds;
    ds.event_name = "synthetic";
    ds.posts.reserve(n_rumor + n_nonrumor);

    const auto make_post = [&](std::size_t index, bool rumor) {
        const double shift = rumor ? gap : 0.0;
        const double words_raw = kWordsMean + (shift + standard_normal(rng)) * kWordsSd;
        const double td_raw = kTimeDiffMean + (shift + standard_normal(rng)) * kTimeDiffSd;
        const double followers_raw =
            kFollowersMean + (shift + standard_normal(rng)) * kFollowersSd;

        const auto words = static_cast<std::size_t>(std::max(1.0, std::round(words_raw)));
        const auto td = static_cast<std::int64_t>(std::max(0.0, std::round(td_raw)));
        const auto followers =
            static_cast<std::int64_t>(std::max(0.0, std::round(followers_raw)));

        PostRecord p;
        p.id = (rumor ? "r" : "n") + std::to_string(100000 + index);
        std::string text;
        for (std::size_t w = 0; w < words; ++w) {
            if (w) text += ' ';
            text += "word";
        }
        p.text = std::move(text);
        p.created_at = kCreatedAt;
        p.user_created_at = kCreatedAt - td;
        p.user_followers_count = followers;
        p.label = rumor ? Label::Rumor : Label::NonRumor;
        return p;
    };

    for (std::size_t i = 0; i < n_rumor; ++i) ds.posts.push_back(make_post(i, true));
    for (std::size_t i = 0; i < n_nonrumor; ++i) ds.posts.push_back(make_post(i, false));
    return ds;
}

} // namespace rumorcluster
