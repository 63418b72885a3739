#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "langshift/textprep.hpp"

namespace langshift {

struct AffectEntry {
    double polarity = 0.0;     // [-1, 1]
    double subjectivity = 0.0; // [0, 1]
};

class AffectLexicon {
public:
    AffectLexicon() = default;

    /// CSV `word,polarity,subjectivity` (header optional) plus an optional
    /// negator list, one word per line. Throws ConfigError on out-of-range
    /// values or unreadable files.
    static AffectLexicon load(const std::filesystem::path& csv_path,
                              const std::optional<std::filesystem::path>& negators_path = std::nullopt);

    void add(std::string word, AffectEntry entry);
    void add_negator(std::string word);

    const AffectEntry* find(std::string_view word) const;
    bool is_negator(std::string_view word) const;
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::unordered_map<std::string, AffectEntry> entries_;
    std::unordered_set<std::string> negators_;
};

struct AffectScore {
    double polarity = 0.0;
    double subjectivity = 0.0;
};

/// Averages the polarity and subjectivity of lexicon hits. A hit directly
/// preceded by a negator has its polarity scaled by -0.5. No hits scores
/// (0, 0).
AffectScore score_comment(const TokenStream& stream, const AffectLexicon& lexicon);

struct AffectSummary {
    double mean_polarity = 0.0;
    double std_polarity = 0.0;
    double mean_subjectivity = 0.0;
    double std_subjectivity = 0.0;
    std::size_t n = 0;
};

/// Mean and population standard deviation of each component. Throws
/// DataError on empty input.
AffectSummary summarize_corpus(std::span<const AffectScore> scores);

/// `mean±std` with a fixed number of decimals, e.g. `0.036±0.301`.
std::string format_mean_std(double mean, double std_dev, int decimals = 3);

} // namespace langshift
