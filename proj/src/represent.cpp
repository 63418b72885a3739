#include "langshift/represent.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "exact_sum.hpp"
#include "json.hpp"
#include "langshift/error.hpp"
#include "number_format.hpp"

namespace langshift {

namespace {

// Normalizes exact per-label sums. The 1/N of the mean cancels in the L1
// normalization, so it is not applied.
std::vector<double> normalize(const std::vector<detail::ExactSum>& sums) {
    std::vector<double> mass(sums.size());
    detail::ExactSum total;
    for (std::size_t i = 0; i < sums.size(); ++i) {
        mass[i] = sums[i].value();
        total.add(mass[i]);
    }
    const double z = total.value();
    if (z > 0) {
        for (auto& m : mass) m /= z;
    }
    return mass;
}

std::vector<double> document_mean(const std::vector<detail::ExactSum>& sums, std::size_t n_docs) {
    std::vector<double> mean(sums.size(), 0.0);
    if (n_docs == 0) return mean;
    for (std::size_t i = 0; i < sums.size(); ++i) mean[i] = sums[i].value() / static_cast<double>(n_docs);
    return mean;
}

} // namespace

Vocabulary::Vocabulary(std::set<std::string> terms) : terms_(terms.begin(), terms.end()) {
    index_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view term) const {
    auto it = index_.find(std::string(term));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vocabulary build_vocabulary(std::span<const Corpus> corpora) {
    std::set<std::string> terms;
    for (const auto& corpus : corpora) {
        for (const auto& doc : corpus) terms.insert(doc.begin(), doc.end());
    }
    if (terms.empty()) throw DataError("no terms in any corpus; vocabulary is empty");
    return Vocabulary(std::move(terms));
}

DocumentFrequencies document_frequencies(std::span<const Corpus> corpora, const Vocabulary& vocab) {
    DocumentFrequencies out;
    out.df.assign(vocab.size(), 0);
    std::vector<std::size_t> last_doc(vocab.size(), static_cast<std::size_t>(-1));
    for (const auto& corpus : corpora) {
        for (const auto& doc : corpus) {
            for (const auto& term : doc) {
                auto idx = vocab.index_of(term);
                if (idx && last_doc[*idx] != out.n_docs) {
                    last_doc[*idx] = out.n_docs;
                    ++out.df[*idx];
                }
            }
            ++out.n_docs;
        }
    }
    return out;
}

double smoothed_idf(std::size_t df, std::size_t n_docs) {
    return std::log((1.0 + static_cast<double>(n_docs)) / (1.0 + static_cast<double>(df))) + 1.0;
}

std::vector<double> tfidf_document(const TokenStream& stream, const Vocabulary& vocab,
                                   std::span<const std::size_t> df, std::size_t n_docs) {
    std::vector<double> counts(vocab.size(), 0.0);
    for (const auto& term : stream) {
        if (auto idx = vocab.index_of(term)) counts[*idx] += 1.0;
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] > 0) counts[i] *= smoothed_idf(df[i], n_docs);
    }
    return counts;
}

CorpusDistribution corpus_tfidf_distribution(std::span<const TokenStream> streams, const Vocabulary& vocab,
                                             std::span<const std::size_t> df, std::size_t n_docs) {
    if (df.size() != vocab.size()) throw NumericError("document frequencies do not match vocabulary");
    std::vector<double> idf(vocab.size());
    for (std::size_t i = 0; i < idf.size(); ++i) idf[i] = smoothed_idf(df[i], n_docs);

    std::vector<detail::ExactSum> sums(vocab.size());
    std::unordered_map<std::size_t, std::size_t> counts;
    bool any = false;
    for (const auto& doc : streams) {
        counts.clear();
        for (const auto& term : doc) {
            if (auto idx = vocab.index_of(term)) ++counts[*idx];
        }
        for (const auto& [idx, count] : counts) {
            sums[idx].add(static_cast<double>(count) * idf[idx]);
            any = true;
        }
    }
    if (!any) throw DataError("every document in the corpus is empty after preprocessing");

    CorpusDistribution dist;
    dist.labels = vocab.terms();
    dist.mass = normalize(sums);
    dist.mean = document_mean(sums, streams.size());
    return dist;
}

CategoryLexicon::CategoryLexicon(const std::map<std::string, std::vector<std::string>>& categories) {
    if (categories.empty()) throw ConfigError("category lexicon has no categories");
    for (const auto& [name, words] : categories) {
        const std::size_t idx = names_.size();
        names_.push_back(name);
        auto& stored = words_[name];
        std::set<std::string> unique;
        for (const auto& w : words) {
            std::string lowered = w;
            std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            if (!lowered.empty()) unique.insert(std::move(lowered));
        }
        for (const auto& w : unique) {
            stored.push_back(w);
            membership_[w].push_back(idx);
        }
    }
}

CategoryLexicon CategoryLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read category lexicon '" + path.string() + "'");
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (!doc.is_object()) throw ConfigError("category lexicon '" + path.string() + "' is not a JSON object");
    std::map<std::string, std::vector<std::string>> categories;
    for (const auto& [name, words] : doc.items()) {
        if (!words.is_array()) throw ConfigError("category '" + name + "' is not an array of words");
        auto& list = categories[name];
        for (const auto& w : words) {
            if (!w.is_string()) throw ConfigError("category '" + name + "' contains a non-string entry");
            list.push_back(w.get<std::string>());
        }
    }
    return CategoryLexicon(categories);
}

std::span<const std::size_t> CategoryLexicon::categories_of(std::string_view word) const {
    auto it = membership_.find(std::string(word));
    if (it == membership_.end()) return {};
    return it->second;
}

CategoryLexicon CategoryLexicon::stemmed() const {
    std::map<std::string, std::vector<std::string>> categories;
    for (const auto& [name, words] : words_) {
        auto& list = categories[name];
        for (const auto& w : words) list.push_back(stem(w));
    }
    return CategoryLexicon(categories);
}

std::vector<double> categorize_document(const TokenStream& stream, const CategoryLexicon& lexicon) {
    std::vector<double> hits(lexicon.size(), 0.0);
    for (const auto& token : stream) {
        for (auto idx : lexicon.categories_of(token)) hits[idx] += 1.0;
    }
    const double denom = static_cast<double>(std::max<std::size_t>(1, stream.size()));
    for (auto& h : hits) h /= denom;
    return hits;
}

CorpusDistribution corpus_category_distribution(std::span<const TokenStream> streams,
                                                const CategoryLexicon& lexicon) {
    if (lexicon.size() == 0) throw ConfigError("category lexicon has no categories");
    std::vector<detail::ExactSum> sums(lexicon.size());
    bool any = false;
    for (const auto& doc : streams) {
        const double denom = static_cast<double>(std::max<std::size_t>(1, doc.size()));
        std::unordered_map<std::size_t, std::size_t> hits;
        for (const auto& token : doc) {
            for (auto idx : lexicon.categories_of(token)) ++hits[idx];
        }
        for (const auto& [idx, count] : hits) {
            sums[idx].add(static_cast<double>(count) / denom);
            any = true;
        }
    }

    CorpusDistribution dist;
    dist.labels = lexicon.names();
    dist.mean = document_mean(sums, streams.size());
    if (!any) {
        dist.mass.assign(lexicon.size(), 1.0 / static_cast<double>(lexicon.size()));
        dist.degenerate = true;
        return dist;
    }
    dist.mass = normalize(sums);
    return dist;
}

void write_distribution_csv(const CorpusDistribution& dist, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << "label,mass\n";
    for (std::size_t i = 0; i < dist.labels.size(); ++i) {
        out << detail::csv_field(dist.labels[i]) << ',' << detail::format_roundtrip(dist.mass[i]) << '\n';
    }
    if (!out) throw ConfigError("write failed for '" + path.string() + "'");
}

} // namespace langshift
