#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "langshift/affect.hpp"
#include "langshift/corpus.hpp"
#include "langshift/ingest.hpp"
#include "langshift/represent.hpp"
#include "langshift/stats.hpp"
#include "langshift/textprep.hpp"

namespace langshift {

enum class ReportFormat { markdown, json, csv };

/// Display names of the three corpora.
struct CorpusLabels {
    std::string source = "rdt";
    std::string before = "yt_before";
    std::string after = "yt_after";
};

struct RunConfig {
    std::filesystem::path posts;           // source-community posts; yields event times
    std::filesystem::path source_comments; // comments on those posts
    std::filesystem::path target_comments; // comments under the linked videos
    std::filesystem::path videos;          // video metadata with upload times
    double window_hours = 24.0;
    std::filesystem::path stopwords;
    std::filesystem::path categories;
    std::filesystem::path affect_lexicon;
    std::filesystem::path negators;
    bool match_category_stems = false;
    std::filesystem::path output = "langshift-out";
    std::set<ReportFormat> formats = {ReportFormat::markdown, ReportFormat::json, ReportFormat::csv};
    CorpusLabels labels;
};

/// Directory holding the shipped stop list and lexicons: $LANGSHIFT_DATA_DIR
/// when set, otherwise the location baked in at build time.
std::filesystem::path default_data_dir();

/// Parses `key = value` lines (`#` comments). Relative paths are resolved
/// against the config file's directory; lexicon paths default to the
/// shipped data files. Throws ConfigError.
RunConfig load_config(const std::filesystem::path& path);

/// Throws ConfigError unless window_hours > 0 and every input path exists.
void validate_config(const RunConfig& config);

std::set<ReportFormat> parse_formats(std::string_view list);

/// Lexicons and stop list used by the text stages.
struct Resources {
    StopList stops;
    CategoryLexicon categories;
    AffectLexicon affect;
    bool match_category_stems = false;

    static Resources load(const RunConfig& config);
};

/// Divergences and tests for one representation.
struct RepresentationComparison {
    std::string name;
    double jsd_before_source = 0.0;
    double jsd_after_source = 0.0;
    double jsd_before_after = 0.0;
    TestResult paired;
    ShiftVerdict verdict = ShiftVerdict::tie;
    std::size_t dimensions = 0;
};

struct AnalysisReport {
    CorpusLabels labels;
    double window_hours = 24.0;
    DatasetSummary dataset;
    std::size_t discarded_comments = 0;
    AffectSummary affect_before;
    AffectSummary affect_after;
    TestResult mwu_polarity;
    TestResult mwu_subjectivity;
    RepresentationComparison tfidf;
    RepresentationComparison categories;
    std::vector<std::string> warnings;

    /// source, before, after for each representation; exported with csv.
    std::vector<std::pair<std::string, CorpusDistribution>> distributions;
};

/// Text, representation, affect and statistics stages over an assembled
/// triplet. Dataset counts are filled from the triplet only.
AnalysisReport analyze_triplet(const CorpusTriplet& triplet, const Resources& resources,
                               const CorpusLabels& labels = {});

/// Full run: ingest, corpus assembly, analysis, then writes every requested
/// format into config.output. Errors carry the failing stage; files written
/// by a failed run are removed.
AnalysisReport run_pipeline(const RunConfig& config);

/// Formatted values shared by the Markdown and JSON renderings, as ordered
/// (key, text) pairs.
std::vector<std::pair<std::string, std::string>> display_values(const AnalysisReport& report);

std::string render_markdown(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);

/// Writes divergences.csv (representation,pair,jsd) and affect.csv
/// (corpus,metric,mean,std). Returns the files written.
std::vector<std::filesystem::path> emit_plot_data(const AnalysisReport& report, const std::filesystem::path& dir);

/// Writes the requested formats into `dir`. Returns the files written.
std::vector<std::filesystem::path> write_outputs(const AnalysisReport& report, const std::filesystem::path& dir,
                                                 const std::set<ReportFormat>& formats);

} // namespace langshift
