#pragma once

#include <cstdint>
#include <string>

namespace rumorcluster {

/// Parse a Twitter-style timestamp `EEE MMM dd HH:mm:ss +zzzz yyyy`
/// (e.g. "Wed Aug 27 13:08:45 +0000 2014") into UTC epoch seconds,
/// honoring the numeric zone offset. Throws InputError with the byte
/// position of the first offending character.
std::int64_t parse_twitter_timestamp(const std::string& s);

/// Inverse of parse_twitter_timestamp for UTC: renders epoch seconds as
/// `EEE MMM dd HH:mm:ss +0000 yyyy`.
std::string format_twitter_timestamp(std::int64_t epoch_seconds);

} // namespace rumorcluster
