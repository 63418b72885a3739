#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "langshift/comment.hpp"

namespace langshift {

struct EventSplit {
    std::vector<Comment> before;
    std::vector<Comment> after;
    std::size_t discarded = 0;
};

/// The three corpora compared by the analysis: the source community's
/// comments, and the target platform's comments before and within the
/// window after the cross-post event.
struct CorpusTriplet {
    std::vector<Comment> source;
    std::vector<Comment> before;
    std::vector<Comment> after;
    double window_hours = 24.0;
    std::size_t discarded = 0;
};

/// Half-open split around `event_time`: before is [-inf, event), after is
/// [event, event + window). Comments at or past the window end are dropped.
/// Input order is preserved in each output.
EventSplit split_by_event(std::span<const Comment> comments, Timestamp event_time, double window_hours);

/// Splits target comments per video and concatenates the per-video results
/// in video_id order. Source comments pass through without a time filter.
/// Throws DataError for a target comment whose video has no event or for a
/// comment_id that appears twice.
CorpusTriplet build_triplet(std::vector<Comment> source_comments,
                            std::span<const Comment> target_comments,
                            const std::map<std::string, Timestamp>& events,
                            double window_hours = 24.0);

} // namespace langshift
