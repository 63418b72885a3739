#include "langshift/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "langshift/error.hpp"

namespace langshift {

using json = nlohmann::json;

std::string_view to_string(Origin origin) noexcept {
    return origin == Origin::source_community ? "source_community" : "target_platform";
}

namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && lower_ascii(s.substr(0, prefix.size())) == prefix;
}

template <typename Int>
bool parse_fixed(std::string_view s, std::size_t pos, std::size_t len, Int& out) {
    if (pos + len > s.size()) return false;
    auto sub = s.substr(pos, len);
    if (!std::all_of(sub.begin(), sub.end(), [](unsigned char c) { return std::isdigit(c); })) return false;
    auto [ptr, ec] = std::from_chars(sub.data(), sub.data() + sub.size(), out);
    return ec == std::errc{} && ptr == sub.data() + sub.size();
}

std::optional<Timestamp> timestamp_field(const json& value) {
    if (value.is_number_integer()) return value.get<Timestamp>();
    if (value.is_number_float()) {
        double v = value.get<double>();
        if (!std::isfinite(v)) return std::nullopt;
        return static_cast<Timestamp>(std::floor(v));
    }
    if (value.is_string()) return parse_timestamp(value.get_ref<const std::string&>());
    return std::nullopt;
}

std::optional<std::string> string_field(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    if (it->is_string()) return it->get<std::string>();
    // Some dumps store numeric ids.
    if (it->is_number_integer()) return std::to_string(it->get<long long>());
    return std::nullopt;
}

// Runs `convert` on every non-blank line; lines where it yields nothing are
// counted as skipped.
template <typename Record, typename Convert>
ParseResult<Record> parse_lines(const std::filesystem::path& path, Convert convert) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read dump '" + path.string() + "'");
    ParseResult<Record> result;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
        std::optional<Record> record;
        if (obj.is_object()) record = convert(obj);
        if (record) {
            result.records.push_back(std::move(*record));
        } else {
            ++result.skipped;
        }
    }
    if (in.bad()) throw DataError("read error in dump '" + path.string() + "'");
    return result;
}

struct UrlParts {
    std::string host;
    std::string_view path;
    std::string_view query;
};

std::optional<UrlParts> split_url(std::string_view url) {
    if (starts_with_ci(url, "https://")) {
        url.remove_prefix(8);
    } else if (starts_with_ci(url, "http://")) {
        url.remove_prefix(7);
    } else if (url.starts_with("//")) {
        url.remove_prefix(2);
    }
    auto authority_end = url.find_first_of("/?#");
    std::string_view authority = url.substr(0, authority_end);
    std::string_view rest = authority_end == std::string_view::npos ? std::string_view{} : url.substr(authority_end);
    if (auto at = authority.rfind('@'); at != std::string_view::npos) authority.remove_prefix(at + 1);
    if (auto colon = authority.find(':'); colon != std::string_view::npos) authority = authority.substr(0, colon);
    if (authority.empty()) return std::nullopt;

    UrlParts parts;
    parts.host = lower_ascii(authority);
    if (auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
    auto q = rest.find('?');
    parts.path = rest.substr(0, q);
    if (q != std::string_view::npos) parts.query = rest.substr(q + 1);
    return parts;
}

std::string_view path_segment(std::string_view path, std::size_t index) {
    std::size_t seen = 0;
    std::size_t pos = 0;
    while (pos < path.size()) {
        while (pos < path.size() && path[pos] == '/') ++pos;
        auto end = path.find('/', pos);
        if (end == std::string_view::npos) end = path.size();
        if (end > pos) {
            if (seen == index) return path.substr(pos, end - pos);
            ++seen;
        }
        pos = end;
    }
    return {};
}

std::string_view query_param(std::string_view query, std::string_view key) {
    while (!query.empty()) {
        auto amp = query.find_first_of("&;");
        auto pair = query.substr(0, amp);
        auto eq = pair.find('=');
        if (eq != std::string_view::npos && pair.substr(0, eq) == key) return pair.substr(eq + 1);
        if (amp == std::string_view::npos) break;
        query.remove_prefix(amp + 1);
    }
    return {};
}

} // namespace

std::optional<Timestamp> parse_timestamp(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    // Plain epoch seconds, possibly fractional.
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) || c == '.'; })) {
        double v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
        return static_cast<Timestamp>(std::floor(v));
    }

    int year = 0;
    unsigned month = 0, day = 0;
    int hour = 0, minute = 0, second = 0;
    if (!parse_fixed(text, 0, 4, year) || text.size() < 10 || text[4] != '-' || text[7] != '-' ||
        !parse_fixed(text, 5, 2, month) || !parse_fixed(text, 8, 2, day)) {
        return std::nullopt;
    }
    std::size_t pos = 10;
    if (pos < text.size()) {
        if (text[pos] != 'T' && text[pos] != 't' && text[pos] != ' ') return std::nullopt;
        if (!parse_fixed(text, pos + 1, 2, hour) || pos + 3 >= text.size() || text[pos + 3] != ':' ||
            !parse_fixed(text, pos + 4, 2, minute)) {
            return std::nullopt;
        }
        pos += 6;
        if (pos < text.size() && text[pos] == ':') {
            if (!parse_fixed(text, pos + 1, 2, second)) return std::nullopt;
            pos += 3;
            if (pos < text.size() && text[pos] == '.') {
                ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            }
        }
    }
    int offset_seconds = 0;
    if (pos < text.size()) {
        char z = text[pos];
        if ((z == 'Z' || z == 'z') && pos + 1 == text.size()) {
            pos = text.size();
        } else if (z == '+' || z == '-') {
            int oh = 0, om = 0;
            if (!parse_fixed(text, pos + 1, 2, oh)) return std::nullopt;
            std::size_t mpos = pos + 3;
            if (mpos < text.size() && text[mpos] == ':') ++mpos;
            if (mpos < text.size() && !parse_fixed(text, mpos, 2, om)) return std::nullopt;
            if (mpos < text.size()) mpos += 2;
            if (mpos != text.size()) return std::nullopt;
            offset_seconds = (z == '+' ? 1 : -1) * (oh * 3600 + om * 60);
            pos = text.size();
        } else {
            return std::nullopt;
        }
    }
    if (hour > 23 || minute > 59 || second > 60) return std::nullopt;

    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
    if (!ymd.ok()) return std::nullopt;
    auto days_since_epoch = sys_days{ymd}.time_since_epoch().count();
    return static_cast<Timestamp>(days_since_epoch) * 86400 + hour * 3600 + minute * 60 + second - offset_seconds;
}

bool is_canonical_video_id(std::string_view id) noexcept {
    return id.size() == 11 && std::all_of(id.begin(), id.end(), [](unsigned char c) {
               return std::isalnum(c) || c == '-' || c == '_';
           });
}

std::optional<std::string> canonical_video_id(std::string_view url) {
    auto parts = split_url(url);
    if (!parts) return std::nullopt;
    std::string_view host = parts->host;
    for (std::string_view prefix : {"www.", "m.", "music."}) {
        if (host.starts_with(prefix)) {
            host.remove_prefix(prefix.size());
            break;
        }
    }

    std::string_view id;
    if (host == "youtu.be") {
        id = path_segment(parts->path, 0);
    } else if (host == "youtube.com" || host == "youtube-nocookie.com") {
        auto first = path_segment(parts->path, 0);
        if (first == "watch" && path_segment(parts->path, 1).empty()) {
            id = query_param(parts->query, "v");
        } else if (first == "embed" || first == "v" || first == "shorts" || first == "live") {
            id = path_segment(parts->path, 1);
        }
    }
    if (!is_canonical_video_id(id)) return std::nullopt;
    return std::string(id);
}

std::vector<std::string> find_urls(std::string_view text) {
    std::vector<std::string> urls;
    std::size_t pos = 0;
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (pos < text.size()) {
        while (pos < text.size() && is_space(text[pos])) ++pos;
        std::size_t end = pos;
        while (end < text.size() && !is_space(text[end])) ++end;
        std::string_view word = text.substr(pos, end - pos);
        pos = end;

        // Markdown links and parenthesised URLs: start at the scheme.
        std::size_t start = std::string_view::npos;
        for (std::string_view marker : {"https://", "http://", "www."}) {
            auto lowered = lower_ascii(word);
            auto hit = lowered.find(marker);
            if (hit != std::string::npos && (start == std::string_view::npos || hit < start)) start = hit;
        }
        if (start == std::string_view::npos) continue;
        if (start > 0 && std::isalnum(static_cast<unsigned char>(word[start - 1]))) continue;
        word.remove_prefix(start);
        while (!word.empty() && std::string_view(".,;:!?)]}>'\"*").find(word.back()) != std::string_view::npos) {
            word.remove_suffix(1);
        }
        if (!word.empty()) urls.emplace_back(word);
    }
    return urls;
}

ParseResult<RawPost> parse_posts(const std::filesystem::path& path) {
    return parse_lines<RawPost>(path, [](const json& obj) -> std::optional<RawPost> {
        RawPost post;
        auto id = string_field(obj, "id");
        const Timestamp created = obj.contains("created_utc") ? timestamp_field(obj["created_utc"]).value_or(0) : 0;
        if (!id || id->empty() || created <= 0) return std::nullopt;
        post.post_id = std::move(*id);
        post.created_at = created;
        if (auto body = obj.find("body"); body != obj.end()) {
            if (!body->is_string()) return std::nullopt;
            post.body_text = body->get<std::string>();
        }
        if (auto urls = obj.find("urls"); urls != obj.end()) {
            if (!urls->is_array()) return std::nullopt;
            for (const auto& u : *urls) {
                if (!u.is_string()) return std::nullopt;
                post.urls.push_back(u.get<std::string>());
            }
        } else {
            post.urls = find_urls(post.body_text);
        }
        return post;
    });
}

ParseResult<Comment> parse_comments(const std::filesystem::path& path, Origin origin) {
    return parse_lines<Comment>(path, [origin](const json& obj) -> std::optional<Comment> {
        Comment c;
        c.origin = origin;
        auto id = string_field(obj, "id");
        const Timestamp created = obj.contains("created_utc") ? timestamp_field(obj["created_utc"]).value_or(0) : 0;
        auto body = obj.find("body");
        if (!id || id->empty() || created <= 0 || body == obj.end() || !body->is_string()) {
            return std::nullopt;
        }
        c.comment_id = std::move(*id);
        c.created_at = created;
        c.text = body->get<std::string>();
        if (origin == Origin::target_platform) {
            auto video = string_field(obj, "video_id");
            if (!video || !is_canonical_video_id(*video)) return std::nullopt;
            c.video_id = std::move(*video);
        } else {
            auto post = string_field(obj, "post_id");
            if (!post || post->empty()) return std::nullopt;
            c.post_id = std::move(*post);
        }
        return c;
    });
}

ParseResult<std::pair<std::string, Timestamp>> parse_videos(const std::filesystem::path& path) {
    using Entry = std::pair<std::string, Timestamp>;
    return parse_lines<Entry>(path, [](const json& obj) -> std::optional<Entry> {
        auto id = string_field(obj, "video_id");
        auto uploaded = obj.contains("uploaded_utc") ? timestamp_field(obj["uploaded_utc"]) : std::nullopt;
        if (!id || !is_canonical_video_id(*id) || !uploaded || *uploaded <= 0) return std::nullopt;
        return Entry{std::move(*id), *uploaded};
    });
}

std::vector<VideoRef> extract_video_refs(const RawPost& post) {
    std::vector<VideoRef> refs;
    for (const auto& url : post.urls) {
        if (auto id = canonical_video_id(url)) {
            refs.push_back(VideoRef{std::move(*id), post.post_id, post.created_at, true});
        }
    }
    return refs;
}

std::vector<VideoRef> dedupe_videos(const std::vector<VideoRef>& refs) {
    std::unordered_map<std::string, std::size_t> occurrences;
    for (const auto& ref : refs) ++occurrences[ref.video_id];
    std::vector<VideoRef> kept;
    for (const auto& ref : refs) {
        if (ref.has_metadata && occurrences[ref.video_id] == 1) kept.push_back(ref);
    }
    return kept;
}

DatasetSummary summarize(const std::vector<VideoRef>& refs,
                         const std::map<std::string, Timestamp>& upload_times,
                         double window_hours) {
    if (!(window_hours > 0)) throw ConfigError("window_hours must be positive");
    DatasetSummary summary;
    std::set<std::string_view> posts;
    std::size_t within = 0;
    const double window_seconds = window_hours * 3600.0;
    for (const auto& ref : refs) {
        auto it = upload_times.find(ref.video_id);
        if (it == upload_times.end()) throw DataError("no upload time for video '" + ref.video_id + "'");
        posts.insert(ref.source_post_id);
        const Timestamp delta = ref.linked_at - it->second;
        if (delta >= 0 && static_cast<double>(delta) < window_seconds) ++within;
    }
    summary.n_posts = posts.size();
    summary.n_videos = refs.size();
    summary.pct_linked_within_window =
        refs.empty() ? 0.0 : static_cast<double>(within) / static_cast<double>(refs.size());
    return summary;
}

} // namespace langshift
