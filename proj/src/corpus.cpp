#include "langshift/corpus.hpp"

#include <cmath>
#include <unordered_set>

#include "langshift/error.hpp"

namespace langshift {

namespace {

void check_window(double window_hours) {
    if (!(window_hours > 0)) throw ConfigError("window_hours must be positive");
}

} // namespace

EventSplit split_by_event(std::span<const Comment> comments, Timestamp event_time, double window_hours) {
    check_window(window_hours);
    // Evaluated in long double so the comparison is exact for any int64 epoch
    // and an infinite window keeps everything.
    const long double window_end =
        static_cast<long double>(event_time) + static_cast<long double>(window_hours) * 3600.0L;
    EventSplit split;
    for (const auto& c : comments) {
        if (c.created_at < event_time) {
            split.before.push_back(c);
        } else if (static_cast<long double>(c.created_at) < window_end) {
            split.after.push_back(c);
        } else {
            ++split.discarded;
        }
    }
    return split;
}

CorpusTriplet build_triplet(std::vector<Comment> source_comments,
                            std::span<const Comment> target_comments,
                            const std::map<std::string, Timestamp>& events,
                            double window_hours) {
    check_window(window_hours);

    std::unordered_set<std::string> seen;
    for (const auto& c : source_comments) {
        if (!seen.insert(c.comment_id).second) throw DataError("duplicate comment id '" + c.comment_id + "'");
    }

    std::map<std::string, std::vector<Comment>> per_video;
    for (const auto& c : target_comments) {
        if (!c.video_id) throw DataError("target comment '" + c.comment_id + "' has no video_id");
        if (!events.contains(*c.video_id)) {
            throw DataError("no event time for video '" + *c.video_id + "' (comment '" + c.comment_id + "')");
        }
        if (!seen.insert(c.comment_id).second) throw DataError("duplicate comment id '" + c.comment_id + "'");
        per_video[*c.video_id].push_back(c);
    }

    CorpusTriplet triplet;
    triplet.window_hours = window_hours;
    triplet.source = std::move(source_comments);
    for (auto& [video, comments] : per_video) {
        auto split = split_by_event(comments, events.at(video), window_hours);
        triplet.before.insert(triplet.before.end(), std::make_move_iterator(split.before.begin()),
                              std::make_move_iterator(split.before.end()));
        triplet.after.insert(triplet.after.end(), std::make_move_iterator(split.after.begin()),
                             std::make_move_iterator(split.after.end()));
        triplet.discarded += split.discarded;
    }
    return triplet;
}

} // namespace langshift
