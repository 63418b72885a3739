#include "langshift/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "langshift/error.hpp"
#include "number_format.hpp"

#ifndef LANGSHIFT_DEFAULT_DATA_DIR
#define LANGSHIFT_DEFAULT_DATA_DIR "data"
#endif

namespace langshift {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

// Runs `fn`, tagging any escaping error with `stage`. Exceptions from
// outside the library are reported as numeric/internal errors.
template <typename Fn>
auto in_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (Error& e) {
        if (e.stage().empty()) e.set_stage(stage);
        throw;
    } catch (const std::exception& e) {
        NumericError wrapped(e.what());
        wrapped.set_stage(stage);
        throw wrapped;
    }
}

std::string fixed4(double v) { return detail::format_fixed(v, 4); }

std::string format_p(double p) {
    if (p > 0.0 && p < 0.00005) return "<0.0001";
    return fixed4(p);
}

// "p = 0.0123", or "p < 0.0001" below the display floor.
std::string p_clause(const std::string& p) { return p.starts_with('<') ? "p < " + p.substr(1) : "p = " + p; }

std::string format_statistic(double t) {
    if (std::isinf(t)) return t > 0 ? "inf" : "-inf";
    return fixed4(t);
}

ordered_json test_json(const TestResult& r) {
    ordered_json j;
    j["statistic"] = std::isfinite(r.statistic) ? ordered_json(r.statistic) : ordered_json(nullptr);
    j["p_value"] = r.p_value;
    j["method"] = std::string(to_string(r.method));
    j["degenerate"] = r.degenerate;
    return j;
}

ordered_json affect_json(const AffectSummary& s) {
    return ordered_json{{"n", s.n},
                        {"mean_polarity", s.mean_polarity},
                        {"std_polarity", s.std_polarity},
                        {"mean_subjectivity", s.mean_subjectivity},
                        {"std_subjectivity", s.std_subjectivity}};
}

ordered_json comparison_json(const RepresentationComparison& c) {
    return ordered_json{{"name", c.name},
                        {"dimensions", c.dimensions},
                        {"jsd",
                         {{"before_source", c.jsd_before_source},
                          {"after_source", c.jsd_after_source},
                          {"before_after", c.jsd_before_after}}},
                        {"paired_t", test_json(c.paired)},
                        {"verdict", std::string(to_string(c.verdict))}};
}

RepresentationComparison compare(std::string name, const CorpusDistribution& source, const CorpusDistribution& before,
                                 const CorpusDistribution& after) {
    RepresentationComparison c;
    c.name = std::move(name);
    c.dimensions = source.mass.size();
    c.jsd_before_source = jsd(before.mass, source.mass);
    c.jsd_after_source = jsd(after.mass, source.mass);
    c.jsd_before_after = jsd(before.mass, after.mass);
    c.paired = paired_t(before.mean, after.mean);
    c.verdict = ordering_check(c.jsd_before_source, c.jsd_after_source);
    return c;
}

void write_text(const fs::path& path, const std::string& text, std::vector<fs::path>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    written.push_back(path);
    out << text;
    out.close();
    if (!out) throw ConfigError("write failed for '" + path.string() + "'");
}

std::string pair_label(const std::string& a, const std::string& b) { return "JSD(" + a + " || " + b + ")"; }

bool parse_bool(const std::string& key, const std::string& value) {
    std::string v = value;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw ConfigError("'" + key + "' expects a boolean, got '" + value + "'");
}

} // namespace

fs::path default_data_dir() {
    if (const char* env = std::getenv("LANGSHIFT_DATA_DIR"); env && *env) return fs::path(env);
    return fs::path(LANGSHIFT_DEFAULT_DATA_DIR);
}

std::set<ReportFormat> parse_formats(std::string_view list) {
    std::set<ReportFormat> formats;
    std::stringstream ss{std::string(list)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item == "markdown" || item == "md") {
            formats.insert(ReportFormat::markdown);
        } else if (item == "json") {
            formats.insert(ReportFormat::json);
        } else if (item == "csv") {
            formats.insert(ReportFormat::csv);
        } else if (!item.empty()) {
            throw ConfigError("unknown report format '" + item + "'");
        }
    }
    if (formats.empty()) throw ConfigError("no report format requested");
    return formats;
}

RunConfig load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
    const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
    auto resolve = [&](const std::string& v) {
        fs::path p(v);
        return p.is_absolute() ? p : base / p;
    };

    RunConfig config;
    const fs::path data = default_data_dir();
    config.stopwords = data / "stopwords.txt";
    config.categories = data / "categories.json";
    config.affect_lexicon = data / "affect_lexicon.csv";
    config.negators = data / "negators.txt";

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "posts") {
            config.posts = resolve(value);
        } else if (key == "source_comments") {
            config.source_comments = resolve(value);
        } else if (key == "target_comments") {
            config.target_comments = resolve(value);
        } else if (key == "videos") {
            config.videos = resolve(value);
        } else if (key == "window_hours") {
            double v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc{} || ptr != value.data() + value.size()) {
                throw ConfigError("window_hours is not a number: '" + value + "'");
            }
            config.window_hours = v;
        } else if (key == "stopwords") {
            config.stopwords = resolve(value);
        } else if (key == "categories") {
            config.categories = resolve(value);
        } else if (key == "affect_lexicon") {
            config.affect_lexicon = resolve(value);
        } else if (key == "negators") {
            config.negators = resolve(value);
        } else if (key == "match_category_stems") {
            config.match_category_stems = parse_bool(key, value);
        } else if (key == "output") {
            config.output = resolve(value);
        } else if (key == "formats" || key == "format") {
            config.formats = parse_formats(value);
        } else if (key == "source_label") {
            config.labels.source = value;
        } else if (key == "before_label") {
            config.labels.before = value;
        } else if (key == "after_label") {
            config.labels.after = value;
        } else {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return config;
}

void validate_config(const RunConfig& config) {
    if (!(config.window_hours > 0.0)) throw ConfigError("window_hours must be positive");
    const std::pair<const char*, const fs::path*> inputs[] = {
        {"posts", &config.posts},
        {"source_comments", &config.source_comments},
        {"target_comments", &config.target_comments},
        {"videos", &config.videos},
        {"stopwords", &config.stopwords},
        {"categories", &config.categories},
        {"affect_lexicon", &config.affect_lexicon},
        {"negators", &config.negators},
    };
    for (const auto& [key, p] : inputs) {
        if (p->empty()) throw ConfigError(std::string("missing required key '") + key + "'");
        if (!fs::is_regular_file(*p)) {
            throw ConfigError(std::string("'") + key + "' does not name a readable file: " + p->string());
        }
    }
    if (config.formats.empty()) throw ConfigError("no report format requested");
    if (config.output.empty()) throw ConfigError("missing output directory");
}

Resources Resources::load(const RunConfig& config) {
    Resources r;
    r.stops = StopList::load(config.stopwords);
    r.categories = CategoryLexicon::load(config.categories);
    r.affect = AffectLexicon::load(config.affect_lexicon, config.negators);
    r.match_category_stems = config.match_category_stems;
    if (r.match_category_stems) r.categories = r.categories.stemmed();
    return r;
}

AnalysisReport analyze_triplet(const CorpusTriplet& triplet, const Resources& resources, const CorpusLabels& labels) {
    AnalysisReport report;
    report.labels = labels;
    report.window_hours = triplet.window_hours;
    report.discarded_comments = triplet.discarded;
    report.dataset.n_comments[0] = triplet.source.size();
    report.dataset.n_comments[1] = triplet.before.size();
    report.dataset.n_comments[2] = triplet.after.size();

    // tokens: tokenized text (affect, categories); content: stop words
    // removed, then stemmed (TF-IDF).
    struct Prepared {
        Corpus tokens;
        Corpus content;
    };
    auto prepared = in_stage("textprep", [&] {
        std::vector<Prepared> out(3);
        const std::vector<Comment>* corpora[] = {&triplet.source, &triplet.before, &triplet.after};
        for (std::size_t c = 0; c < 3; ++c) {
            for (const auto& comment : *corpora[c]) {
                auto tokens = tokenize(comment.text);
                out[c].content.push_back(stem_all(remove_stopwords(tokens, resources.stops)));
                out[c].tokens.push_back(std::move(tokens));
            }
        }
        return out;
    });

    const std::string names[] = {labels.source, labels.before, labels.after};
    in_stage("represent", [&] {
        const std::vector<Corpus> content = {prepared[0].content, prepared[1].content, prepared[2].content};
        const Vocabulary vocab = build_vocabulary(content);
        const DocumentFrequencies df = document_frequencies(content, vocab);
        std::vector<CorpusDistribution> tfidf;
        std::vector<CorpusDistribution> cats;
        for (std::size_t c = 0; c < 3; ++c) {
            try {
                tfidf.push_back(corpus_tfidf_distribution(prepared[c].content, vocab, df.df, df.n_docs));
            } catch (const DataError& e) {
                throw DataError("corpus '" + names[c] + "': " + e.what());
            }
            const Corpus& category_stream = resources.match_category_stems ? prepared[c].content : prepared[c].tokens;
            cats.push_back(corpus_category_distribution(category_stream, resources.categories));
            if (cats.back().degenerate) {
                report.warnings.push_back("no lexical category matched in corpus '" + names[c] +
                                          "'; using the uniform distribution");
            }
        }
        for (std::size_t c = 0; c < 3; ++c) {
            report.distributions.emplace_back("tfidf_" + names[c], std::move(tfidf[c]));
        }
        for (std::size_t c = 0; c < 3; ++c) {
            report.distributions.emplace_back("categories_" + names[c], std::move(cats[c]));
        }
    });

    in_stage("affect", [&] {
        std::vector<AffectScore> scores[2];
        for (std::size_t c = 1; c < 3; ++c) {
            for (const auto& doc : prepared[c].tokens) scores[c - 1].push_back(score_comment(doc, resources.affect));
            if (scores[c - 1].empty()) throw DataError("corpus '" + names[c] + "' is empty");
        }
        report.affect_before = summarize_corpus(scores[0]);
        report.affect_after = summarize_corpus(scores[1]);

        std::vector<double> pol[2], sub[2];
        for (std::size_t c = 0; c < 2; ++c) {
            for (const auto& s : scores[c]) {
                pol[c].push_back(s.polarity);
                sub[c].push_back(s.subjectivity);
            }
        }
        report.mwu_polarity = mann_whitney_u(pol[0], pol[1]);
        report.mwu_subjectivity = mann_whitney_u(sub[0], sub[1]);
    });

    in_stage("stats", [&] {
        const auto& d = report.distributions;
        report.tfidf = compare("TF-IDF", d[0].second, d[1].second, d[2].second);
        report.categories = compare("Lexical categories", d[3].second, d[4].second, d[5].second);
        for (const auto* c : {&report.tfidf, &report.categories}) {
            if (c->paired.degenerate) {
                report.warnings.push_back(c->name + ": zero-variance differences; paired t p-value is conventional");
            }
        }
    });
    return report;
}

AnalysisReport run_pipeline(const RunConfig& config) {
    const Resources resources = in_stage("config", [&] {
        validate_config(config);
        return Resources::load(config);
    });

    std::vector<std::string> warnings;
    struct Ingested {
        std::vector<Comment> source;
        std::vector<Comment> target;
        std::vector<VideoRef> refs;
        std::map<std::string, Timestamp> uploads;
    };
    Ingested in = in_stage("ingest", [&] {
        Ingested out;
        auto posts = parse_posts(config.posts);
        auto source = parse_comments(config.source_comments, Origin::source_community);
        auto target = parse_comments(config.target_comments, Origin::target_platform);
        auto videos = parse_videos(config.videos);
        const std::pair<const char*, std::size_t> skipped[] = {{"posts", posts.skipped},
                                                               {"source_comments", source.skipped},
                                                               {"target_comments", target.skipped},
                                                               {"videos", videos.skipped}};
        for (const auto& [name, count] : skipped) {
            if (count > 0) warnings.push_back(std::string(name) + ": skipped " + std::to_string(count) + " malformed line(s)");
        }
        for (auto& [id, uploaded] : videos.records) {
            if (!out.uploads.emplace(id, uploaded).second) {
                warnings.push_back("videos: duplicate metadata for '" + id + "'; keeping the first");
            }
        }

        std::vector<VideoRef> refs;
        for (const auto& post : posts.records) {
            // A post naming the same video twice still references it once.
            std::unordered_set<std::string> in_post;
            for (auto& ref : extract_video_refs(post)) {
                if (!in_post.insert(ref.video_id).second) continue;
                ref.has_metadata = out.uploads.contains(ref.video_id);
                refs.push_back(std::move(ref));
            }
        }
        out.refs = dedupe_videos(refs);
        if (refs.size() != out.refs.size()) {
            warnings.push_back("dropped " + std::to_string(refs.size() - out.refs.size()) +
                               " video reference(s) without metadata or referenced more than once");
        }
        if (out.refs.empty()) throw DataError("no usable video references in the post dump");
        out.source = std::move(source.records);
        out.target = std::move(target.records);
        return out;
    });

    DatasetSummary summary = in_stage("ingest", [&] { return summarize(in.refs, in.uploads, config.window_hours); });

    CorpusTriplet triplet = in_stage("corpus", [&] {
        std::map<std::string, Timestamp> events;
        std::unordered_set<std::string> posts;
        for (const auto& ref : in.refs) {
            events.emplace(ref.video_id, ref.linked_at);
            posts.insert(ref.source_post_id);
        }
        std::vector<Comment> source;
        for (auto& c : in.source) {
            if (c.post_id && posts.contains(*c.post_id)) source.push_back(std::move(c));
        }
        std::vector<Comment> target;
        for (auto& c : in.target) {
            if (c.video_id && events.contains(*c.video_id)) target.push_back(std::move(c));
        }
        const std::size_t dropped = (in.source.size() - source.size()) + (in.target.size() - target.size());
        if (dropped > 0) {
            warnings.push_back("ignored " + std::to_string(dropped) + " comment(s) not attached to a retained post or video");
        }
        return build_triplet(std::move(source), target, events, config.window_hours);
    });

    AnalysisReport report = analyze_triplet(triplet, resources, config.labels);
    summary.n_comments[0] = report.dataset.n_comments[0];
    summary.n_comments[1] = report.dataset.n_comments[1];
    summary.n_comments[2] = report.dataset.n_comments[2];
    report.dataset = summary;
    warnings.insert(warnings.end(), report.warnings.begin(), report.warnings.end());
    report.warnings = std::move(warnings);

    in_stage("report", [&] { write_outputs(report, config.output, config.formats); });
    return report;
}

std::vector<std::pair<std::string, std::string>> display_values(const AnalysisReport& r) {
    std::vector<std::pair<std::string, std::string>> v;
    v.emplace_back("window_hours", detail::format_roundtrip(r.window_hours));
    v.emplace_back("jsd_log_base", "2");
    v.emplace_back("dataset.posts", std::to_string(r.dataset.n_posts));
    v.emplace_back("dataset.videos", std::to_string(r.dataset.n_videos));
    v.emplace_back("dataset.linked_within_window", fixed4(r.dataset.pct_linked_within_window));
    v.emplace_back("dataset.comments.source", std::to_string(r.dataset.n_comments[0]));
    v.emplace_back("dataset.comments.before", std::to_string(r.dataset.n_comments[1]));
    v.emplace_back("dataset.comments.after", std::to_string(r.dataset.n_comments[2]));
    v.emplace_back("dataset.comments.discarded", std::to_string(r.discarded_comments));
    for (const auto& [key, s] : {std::pair{"before", &r.affect_before}, std::pair{"after", &r.affect_after}}) {
        v.emplace_back(std::string("affect.") + key + ".sentiment", format_mean_std(s->mean_polarity, s->std_polarity));
        v.emplace_back(std::string("affect.") + key + ".subjectivity",
                       format_mean_std(s->mean_subjectivity, s->std_subjectivity));
    }
    for (const auto& [key, t] : {std::pair{"polarity", &r.mwu_polarity}, std::pair{"subjectivity", &r.mwu_subjectivity}}) {
        v.emplace_back(std::string("mann_whitney.") + key + ".u", format_statistic(t->statistic));
        v.emplace_back(std::string("mann_whitney.") + key + ".p", format_p(t->p_value));
        v.emplace_back(std::string("mann_whitney.") + key + ".method", std::string(to_string(t->method)));
    }
    for (const auto& [key, c] : {std::pair{"tfidf", &r.tfidf}, std::pair{"categories", &r.categories}}) {
        const std::string prefix = std::string(key) + ".";
        v.emplace_back(prefix + "jsd.before_source", fixed4(c->jsd_before_source));
        v.emplace_back(prefix + "jsd.after_source", fixed4(c->jsd_after_source));
        v.emplace_back(prefix + "jsd.before_after", fixed4(c->jsd_before_after));
        v.emplace_back(prefix + "dimensions", std::to_string(c->dimensions));
        v.emplace_back(prefix + "paired_t.t", format_statistic(c->paired.statistic));
        v.emplace_back(prefix + "paired_t.p", format_p(c->paired.p_value));
        v.emplace_back(prefix + "verdict", std::string(to_string(c->verdict)));
    }
    return v;
}

std::string render_markdown(const AnalysisReport& r) {
    std::map<std::string, std::string> d;
    for (auto& [k, val] : display_values(r)) d.emplace(k, val);
    const auto& L = r.labels;
    // `|` inside a table cell must be escaped.
    auto cell_pair = [](const std::string& a, const std::string& b) { return "JSD(" + a + " \\|\\| " + b + ")"; };

    std::ostringstream md;
    md << "# Language shift report\n\n";
    md << "Corpora: source `" << L.source << "`, before `" << L.before << "`, after `" << L.after
       << "`. Window: " << d["window_hours"] << " h. JSD log base: " << d["jsd_log_base"] << ".\n\n";

    md << "## Dataset\n\n";
    md << "| Posts | Videos | Linked within window | " << L.source << " | " << L.before << " | " << L.after
       << " | Discarded |\n";
    md << "|---:|---:|---:|---:|---:|---:|---:|\n";
    md << "| " << d["dataset.posts"] << " | " << d["dataset.videos"] << " | " << d["dataset.linked_within_window"]
       << " | " << d["dataset.comments.source"] << " | " << d["dataset.comments.before"] << " | "
       << d["dataset.comments.after"] << " | " << d["dataset.comments.discarded"] << " |\n\n";

    md << "## Sentiment and subjectivity\n\n";
    md << "|  | Sentiment | Subjectivity |\n";
    md << "|---|---|---|\n";
    md << "| " << L.before << " | " << d["affect.before.sentiment"] << " | " << d["affect.before.subjectivity"] << " |\n";
    md << "| " << L.after << " | " << d["affect.after.sentiment"] << " | " << d["affect.after.subjectivity"] << " |\n\n";
    md << "Mann-Whitney U (" << L.before << " vs " << L.after << "):\n\n";
    for (const auto* key : {"polarity", "subjectivity"}) {
        const std::string p = std::string("mann_whitney.") + key;
        md << "- " << (std::string_view(key) == "polarity" ? "Sentiment" : "Subjectivity") << ": U = " << d[p + ".u"]
           << ", " << p_clause(d[p + ".p"]) << " (" << d[p + ".method"] << ")\n";
    }
    md << "\n";

    for (const auto& [key, c] : {std::pair{"tfidf", &r.tfidf}, std::pair{"categories", &r.categories}}) {
        const std::string p = std::string(key) + ".";
        md << "## " << c->name << "\n\n";
        md << "| Pair | Distribution distance |\n";
        md << "|---|---:|\n";
        md << "| " << cell_pair(L.before, L.source) << " | " << d[p + "jsd.before_source"] << " |\n";
        md << "| " << cell_pair(L.after, L.source) << " | " << d[p + "jsd.after_source"] << " |\n";
        md << "| " << cell_pair(L.before, L.after) << " | " << d[p + "jsd.before_after"] << " |\n\n";
        md << "Paired t (" << L.before << " vs " << L.after << ", " << d[p + "dimensions"] << " dimensions): t = "
           << d[p + "paired_t.t"] << ", " << p_clause(d[p + "paired_t.p"]) << "\n\n";
        md << "Verdict: " << d[p + "verdict"] << "\n\n";
    }

    if (!r.warnings.empty()) {
        md << "## Warnings\n\n";
        for (const auto& w : r.warnings) md << "- " << w << "\n";
        md << "\n";
    }
    return md.str();
}

std::string render_json(const AnalysisReport& r) {
    ordered_json j;
    j["jsd_log_base"] = 2;
    j["window_hours"] = r.window_hours;
    j["labels"] = {{"source", r.labels.source}, {"before", r.labels.before}, {"after", r.labels.after}};
    j["dataset"] = {{"n_posts", r.dataset.n_posts},
                    {"n_videos", r.dataset.n_videos},
                    {"pct_linked_within_window", r.dataset.pct_linked_within_window},
                    {"comments",
                     {{"source", r.dataset.n_comments[0]},
                      {"before", r.dataset.n_comments[1]},
                      {"after", r.dataset.n_comments[2]},
                      {"discarded", r.discarded_comments}}}};
    j["affect"] = {{"before", affect_json(r.affect_before)}, {"after", affect_json(r.affect_after)}};
    j["mann_whitney"] = {{"polarity", test_json(r.mwu_polarity)}, {"subjectivity", test_json(r.mwu_subjectivity)}};
    j["representations"] = {{"tfidf", comparison_json(r.tfidf)}, {"categories", comparison_json(r.categories)}};
    j["warnings"] = r.warnings;
    ordered_json display = ordered_json::object();
    for (const auto& [k, v] : display_values(r)) display[k] = v;
    j["display"] = std::move(display);
    return j.dump(2) + "\n";
}

std::vector<fs::path> emit_plot_data(const AnalysisReport& r, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "': " + ec.message());

    std::vector<fs::path> written;
    try {
        std::ostringstream div;
        div << "representation,pair,jsd\n";
        const auto& L = r.labels;
        for (const auto& [key, c] : {std::pair{"tfidf", &r.tfidf}, std::pair{"categories", &r.categories}}) {
            div << key << ',' << detail::csv_field(pair_label(L.before, L.source)) << ','
                << detail::format_roundtrip(c->jsd_before_source) << '\n';
            div << key << ',' << detail::csv_field(pair_label(L.after, L.source)) << ','
                << detail::format_roundtrip(c->jsd_after_source) << '\n';
            div << key << ',' << detail::csv_field(pair_label(L.before, L.after)) << ','
                << detail::format_roundtrip(c->jsd_before_after) << '\n';
        }
        write_text(dir / "divergences.csv", div.str(), written);

        std::ostringstream aff;
        aff << "corpus,metric,mean,std\n";
        for (const auto& [label, s] : {std::pair{&L.before, &r.affect_before}, std::pair{&L.after, &r.affect_after}}) {
            aff << detail::csv_field(*label) << ",polarity," << detail::format_roundtrip(s->mean_polarity) << ','
                << detail::format_roundtrip(s->std_polarity) << '\n';
            aff << detail::csv_field(*label) << ",subjectivity," << detail::format_roundtrip(s->mean_subjectivity)
                << ',' << detail::format_roundtrip(s->std_subjectivity) << '\n';
        }
        write_text(dir / "affect.csv", aff.str(), written);
    } catch (...) {
        for (const auto& p : written) fs::remove(p, ec);
        throw;
    }
    return written;
}

std::vector<fs::path> write_outputs(const AnalysisReport& report, const fs::path& dir,
                                    const std::set<ReportFormat>& formats) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "': " + ec.message());

    std::vector<fs::path> written;
    try {
        if (formats.contains(ReportFormat::markdown)) write_text(dir / "report.md", render_markdown(report), written);
        if (formats.contains(ReportFormat::json)) write_text(dir / "report.json", render_json(report), written);
        if (formats.contains(ReportFormat::csv)) {
            auto plots = emit_plot_data(report, dir);
            written.insert(written.end(), plots.begin(), plots.end());
            const fs::path dist_dir = dir / "distributions";
            fs::create_directories(dist_dir, ec);
            if (ec) throw ConfigError("cannot create '" + dist_dir.string() + "': " + ec.message());
            for (const auto& [name, dist] : report.distributions) {
                const fs::path p = dist_dir / (name + ".csv");
                written.push_back(p);
                write_distribution_csv(dist, p);
            }
        }
    } catch (...) {
        for (const auto& p : written) fs::remove(p, ec);
        throw;
    }
    return written;
}

} // namespace langshift
