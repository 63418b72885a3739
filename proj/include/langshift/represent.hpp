#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "langshift/textprep.hpp"

namespace langshift {

/// A list of documents (one token stream per comment).
using Corpus = std::vector<TokenStream>;

/// Sorted set of unique terms with a term -> position index.
class Vocabulary {
public:
    Vocabulary() = default;
    explicit Vocabulary(std::set<std::string> terms);

    const std::vector<std::string>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    std::optional<std::size_t> index_of(std::string_view term) const;

private:
    std::vector<std::string> terms_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Union of terms over all corpora. Throws DataError if there are none.
Vocabulary build_vocabulary(std::span<const Corpus> corpora);

/// Number of documents (over all corpora) containing each vocabulary term.
struct DocumentFrequencies {
    std::vector<std::size_t> df;
    std::size_t n_docs = 0;
};

DocumentFrequencies document_frequencies(std::span<const Corpus> corpora, const Vocabulary& vocab);

/// Smoothed inverse document frequency: ln((1 + n_docs) / (1 + df)) + 1.
double smoothed_idf(std::size_t df, std::size_t n_docs);

/// Dense TF-IDF vector: raw count times smoothed idf. Out-of-vocabulary
/// tokens are ignored.
std::vector<double> tfidf_document(const TokenStream& stream, const Vocabulary& vocab,
                                   std::span<const std::size_t> df, std::size_t n_docs);

/// Probability vector over a label set.
struct CorpusDistribution {
    std::vector<std::string> labels;
    std::vector<double> mass;
    /// Per-label mean over documents before normalization. Paired tests use
    /// this, since two probability vectors always have zero mean difference.
    std::vector<double> mean;
    /// Set when the corpus carried no signal and the uniform distribution was
    /// substituted.
    bool degenerate = false;
};

/// Mean of per-document TF-IDF vectors, L1-normalized. Throws DataError if
/// every document is empty.
CorpusDistribution corpus_tfidf_distribution(std::span<const TokenStream> streams, const Vocabulary& vocab,
                                             std::span<const std::size_t> df, std::size_t n_docs);

/// Named word sets. A word may belong to several categories.
class CategoryLexicon {
public:
    CategoryLexicon() = default;
    explicit CategoryLexicon(const std::map<std::string, std::vector<std::string>>& categories);

    /// JSON object mapping category name to an array of words.
    static CategoryLexicon load(const std::filesystem::path& path);

    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }

    /// Categories containing `word`, in name order; empty if none.
    std::span<const std::size_t> categories_of(std::string_view word) const;

    /// Same lexicon with every seed word replaced by its Porter stem.
    CategoryLexicon stemmed() const;

private:
    std::vector<std::string> names_;
    std::map<std::string, std::vector<std::string>> words_;
    std::unordered_map<std::string, std::vector<std::size_t>> membership_;
};

/// Per-category match count divided by max(1, |stream|).
std::vector<double> categorize_document(const TokenStream& stream, const CategoryLexicon& lexicon);

/// Mean of per-document category vectors, L1-normalized. Falls back to the
/// uniform distribution (flagged degenerate) when nothing matched.
CorpusDistribution corpus_category_distribution(std::span<const TokenStream> streams,
                                                const CategoryLexicon& lexicon);

/// `label,mass` rows with a header line.
void write_distribution_csv(const CorpusDistribution& dist, const std::filesystem::path& path);

} // namespace langshift
