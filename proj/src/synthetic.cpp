#include "langshift/synthetic.hpp"

#include <array>
#include <fstream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "langshift/comment.hpp"
#include "langshift/error.hpp"

namespace langshift {

namespace {

namespace fs = std::filesystem;

constexpr std::array<std::string_view, 30> kSourceWords = {
    "government", "corruption", "propaganda", "war",       "military", "crime",     "fraud",  "agency",
    "surveillance", "weapon",   "bomb",       "terrorist", "election", "senator",   "politician", "power",
    "money",      "bank",       "prison",     "lawyer",    "soldier",  "army",      "enemy",  "attack",
    "control",    "law",        "president",  "tax",       "secret",   "intelligence"};

constexpr std::array<std::string_view, 28> kTargetWords = {
    "music",  "song",     "guitar",  "dance",    "party",  "fun",     "laugh",   "beautiful", "love",    "friend",
    "summer", "beach",    "game",    "cat",      "dog",    "food",    "pizza",   "coffee",    "sunshine", "garden",
    "flower", "baby",     "smile",   "holiday",  "vacation", "swimming", "singing", "birthday"};

constexpr std::array<std::string_view, 20> kFillerWords = {
    "the",  "is",    "this", "really", "think",       "people",    "know", "just",     "not",   "great",
    "good", "bad",   "true", "strange", "interesting", "important", "video", "watching", "time", "terrible"};

constexpr Timestamp kBase = 1'600'000'000;
constexpr Timestamp kDay = 86'400;

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    // Portable across standard libraries, unlike the <random> distributions.
    std::uint64_t below(std::uint64_t n) { return rng_() % n; }
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    std::string video_id(std::size_t i) {
        static constexpr std::string_view alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";
        std::string id = "v" + std::to_string(i);
        while (id.size() < 11) id.push_back(alphabet[below(alphabet.size())]);
        return id;
    }

    std::string comment(double source_share) {
        std::string text;
        const std::size_t length = 6 + below(9);
        for (std::size_t i = 0; i < length; ++i) {
            std::string_view word;
            if (unit() < 0.3) {
                word = kFillerWords[below(kFillerWords.size())];
            } else if (unit() < source_share) {
                word = kSourceWords[below(kSourceWords.size())];
            } else {
                word = kTargetWords[below(kTargetWords.size())];
            }
            if (!text.empty()) text.push_back(' ');
            text += word;
        }
        if (below(4) == 0) text += "!";
        return text;
    }

private:
    std::mt19937_64 rng_;
};

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write fixture file '" + path.string() + "'");
    return out;
}

void write_line(std::ofstream& out, const nlohmann::ordered_json& record) { out << record.dump() << '\n'; }

} // namespace

FixtureFiles write_fixture(const fs::path& dir, const FixtureOptions& options) {
    if (options.n_videos == 0) throw ConfigError("fixture needs at least one video");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create fixture directory '" + dir.string() + "': " + ec.message());

    FixtureFiles files{dir / "posts.jsonl", dir / "source_comments.jsonl", dir / "target_comments.jsonl",
                       dir / "videos.jsonl", dir / "config.txt"};
    auto posts = open_out(files.posts);
    auto source = open_out(files.source_comments);
    auto target = open_out(files.target_comments);
    auto videos = open_out(files.videos);

    Generator gen(options.seed);
    struct Video {
        std::string id;
        std::string post_id;
        Timestamp uploaded;
        Timestamp linked;
    };
    std::vector<Video> vids;
    for (std::size_t i = 0; i < options.n_videos; ++i) {
        Video v;
        v.id = gen.video_id(i);
        v.post_id = "p" + std::to_string(i);
        v.uploaded = kBase + static_cast<Timestamp>(i) * 2 * kDay;
        // Most videos are cross-posted within a day of upload.
        const bool quick = gen.unit() < 0.85;
        v.linked = v.uploaded + (quick ? 3600 + static_cast<Timestamp>(gen.below(19 * 3600))
                                       : 30 * 3600 + static_cast<Timestamp>(gen.below(30 * 3600)));
        vids.push_back(v);

        write_line(videos, {{"video_id", v.id}, {"uploaded_utc", v.uploaded}, {"title", "video " + std::to_string(i)}});
        const std::string url = (i % 2 == 0) ? "https://www.youtube.com/watch?v=" + v.id + "&t=42s"
                                             : "https://youtu.be/" + v.id;
        write_line(posts, {{"id", v.post_id}, {"created_utc", v.linked}, {"body", "Look at this " + url}, {"urls", {url}}});
    }

    // Excluded by deduplication: one video linked from two posts, one
    // without metadata, plus a truncated line.
    const std::string twice = gen.video_id(options.n_videos);
    write_line(videos, {{"video_id", twice}, {"uploaded_utc", kBase}});
    write_line(posts, {{"id", "dup-a"}, {"created_utc", kBase + 100}, {"body", "https://youtu.be/" + twice}});
    write_line(posts, {{"id", "dup-b"}, {"created_utc", kBase + 200}, {"urls", {"https://www.youtube.com/embed/" + twice}}});
    const std::string orphan = gen.video_id(options.n_videos + 1);
    write_line(posts, {{"id", "no-meta"}, {"created_utc", kBase + 300}, {"urls", {"https://youtu.be/" + orphan}}});
    posts << "{\"id\": \"broken\", \"created_utc\": 16\n";

    std::size_t next_id = 0;
    auto emit_target = [&](const Video& v, Timestamp at, double share) {
        write_line(target, {{"id", "c" + std::to_string(next_id++)},
                            {"video_id", v.id},
                            {"created_utc", at},
                            {"body", gen.comment(share)}});
    };
    for (std::size_t i = 0; i < options.before_comments; ++i) {
        const Video& v = vids[gen.below(vids.size())];
        emit_target(v, v.uploaded + static_cast<Timestamp>(gen.below(static_cast<std::uint64_t>(v.linked - v.uploaded))),
                    options.before_borrow);
    }
    for (std::size_t i = 0; i < options.after_comments; ++i) {
        const Video& v = vids[gen.below(vids.size())];
        emit_target(v, v.linked + static_cast<Timestamp>(gen.below(kDay)), options.after_borrow);
    }
    // Past the window: discarded by the split.
    for (std::size_t i = 0; i < options.n_videos; ++i) {
        const Video& v = vids[i];
        emit_target(v, v.linked + kDay + static_cast<Timestamp>(gen.below(5 * kDay)), options.after_borrow);
    }
    for (std::size_t i = 0; i < options.source_comments; ++i) {
        const Video& v = vids[gen.below(vids.size())];
        write_line(source, {{"id", "r" + std::to_string(i)},
                            {"post_id", v.post_id},
                            {"created_utc", v.linked + static_cast<Timestamp>(gen.below(2 * kDay))},
                            {"body", gen.comment(1.0)}});
    }

    auto config = open_out(files.config);
    config << "# Generated fixture (seed " << options.seed << ")\n"
           << "posts = posts.jsonl\n"
           << "source_comments = source_comments.jsonl\n"
           << "target_comments = target_comments.jsonl\n"
           << "videos = videos.jsonl\n"
           << "window_hours = 24\n"
           << "output = out\n"
           << "formats = markdown,json,csv\n";

    for (auto* out : {&posts, &source, &target, &videos, &config}) {
        out->close();
        if (!*out) throw ConfigError("failed writing fixture into '" + dir.string() + "'");
    }
    return files;
}

} // namespace langshift
