#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace langshift {

/// UTC epoch seconds.
using Timestamp = std::int64_t;

enum class Origin { source_community, target_platform };

std::string_view to_string(Origin origin) noexcept;

/// One user comment. Target-platform comments carry the video they were
/// posted under; source-community comments carry the post they reply to.
struct Comment {
    std::string comment_id;
    Origin origin = Origin::target_platform;
    std::optional<std::string> video_id;
    std::optional<std::string> post_id;
    Timestamp created_at = 0;
    std::string text;
};

} // namespace langshift
