#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langshift/comment.hpp"

namespace langshift {

struct RawPost {
    std::string post_id;
    Timestamp created_at = 0;
    std::string body_text;
    std::vector<std::string> urls;
};

/// A reference from a source-community post to a target-platform video.
struct VideoRef {
    std::string video_id;
    std::string source_post_id;
    Timestamp linked_at = 0;
    bool has_metadata = true;
};

struct DatasetSummary {
    std::size_t n_posts = 0;
    std::size_t n_videos = 0;
    /// source, before, after
    std::size_t n_comments[3] = {0, 0, 0};
    double pct_linked_within_window = 0.0;
};

/// Records parsed from a line-delimited dump plus the number of lines that
/// could not be parsed. Blank lines are neither records nor skips.
template <typename Record>
struct ParseResult {
    std::vector<Record> records;
    std::size_t skipped = 0;
};

/// Parses a post dump: one JSON object per line with keys
/// `id`, `created_utc`, `body`, and optionally `urls`. When `urls` is absent
/// the URLs are scanned out of `body`. Throws DataError if unreadable.
ParseResult<RawPost> parse_posts(const std::filesystem::path& path);

/// Parses a comment dump. Source-community records need `post_id`,
/// target-platform records need `video_id`.
ParseResult<Comment> parse_comments(const std::filesystem::path& path, Origin origin);

/// Parses a video metadata dump (`video_id`, `uploaded_utc`). Returns the
/// upload time for every video that has metadata.
ParseResult<std::pair<std::string, Timestamp>> parse_videos(const std::filesystem::path& path);

/// Accepts integer/fractional epoch seconds or an ISO-8601 date-time string
/// (`Z`, `±hh:mm` or no zone, which is read as UTC).
std::optional<Timestamp> parse_timestamp(std::string_view text);

/// Canonical 11-character video identifier for a recognized video URL.
std::optional<std::string> canonical_video_id(std::string_view url);

bool is_canonical_video_id(std::string_view id) noexcept;

/// http(s):// and www. prefixed spans of `text`.
std::vector<std::string> find_urls(std::string_view text);

std::vector<VideoRef> extract_video_refs(const RawPost& post);

/// Drops every video referenced more than once (all occurrences) and every
/// reference without metadata. Order follows first appearance.
std::vector<VideoRef> dedupe_videos(const std::vector<VideoRef>& refs);

/// Counts are filled for posts and videos; comment counts are left at zero.
/// Throws DataError naming the first video without an upload time.
DatasetSummary summarize(const std::vector<VideoRef>& refs,
                         const std::map<std::string, Timestamp>& upload_times,
                         double window_hours);

} // namespace langshift
