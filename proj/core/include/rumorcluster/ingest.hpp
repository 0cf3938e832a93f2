#pragma once

#include "rumorcluster/post.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace rumorcluster {

/// Load one dataset per event directory from a PHEME-style tree:
///   <root>/<event>/{rumours,non-rumours}/<thread>/source-tweets/<id>.json
/// Only source tweets are read (one per thread); the label comes from the
/// class directory. Events are ordered by name, posts by ascending id.
std::vector<EventDataset> parse_pheme_tree(const std::filesystem::path& root);

/// Read a JSONL file (one PostRecord object per line, schema keys exact).
/// Posts keep file order; the event name is the file stem.
EventDataset load_posts(const std::filesystem::path& path);

/// Write a dataset in the JSONL schema accepted by load_posts.
/// load_posts(write_posts(ds)) reproduces every field bit-exactly.
void write_posts(const EventDataset& dataset, const std::filesystem::path& path);

/// Deterministic synthetic two-population dataset. The rumor population is
/// shifted by `gap` standard deviations on word count, time difference, and
/// follower count; all other fields are class-independent constants.
EventDataset synth_generate(std::size_t n_rumor, std::size_t n_nonrumor, double gap,
                            std::uint64_t seed);

} // namespace rumorcluster
