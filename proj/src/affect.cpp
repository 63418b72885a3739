#include "langshift/affect.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "exact_sum.hpp"
#include "langshift/error.hpp"
#include "number_format.hpp"

namespace langshift {

namespace {

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::optional<double> parse_double(std::string_view s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

AffectLexicon AffectLexicon::load(const std::filesystem::path& csv_path,
                                  const std::optional<std::filesystem::path>& negators_path) {
    std::ifstream in(csv_path);
    if (!in) throw ConfigError("cannot read affect lexicon '" + csv_path.string() + "'");
    AffectLexicon lexicon;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.starts_with('#')) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(trim(field));
        if (line_no == 1 && !fields.empty() && fields[0] == "word") continue;
        std::optional<double> pol, sub;
        if (fields.size() == 3) {
            pol = parse_double(fields[1]);
            sub = parse_double(fields[2]);
        }
        if (!pol || !sub || fields[0].empty()) {
            throw ConfigError(csv_path.string() + ":" + std::to_string(line_no) + ": expected word,polarity,subjectivity");
        }
        if (*pol < -1.0 || *pol > 1.0 || *sub < 0.0 || *sub > 1.0) {
            throw ConfigError(csv_path.string() + ":" + std::to_string(line_no) + ": value out of range");
        }
        lexicon.add(fields[0], AffectEntry{*pol, *sub});
    }

    if (negators_path) {
        std::ifstream neg(*negators_path);
        if (!neg) throw ConfigError("cannot read negator list '" + negators_path->string() + "'");
        while (std::getline(neg, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (!line.empty()) lexicon.add_negator(line);
        }
    }
    return lexicon;
}

void AffectLexicon::add(std::string word, AffectEntry entry) {
    if (entry.polarity < -1.0 || entry.polarity > 1.0 || entry.subjectivity < 0.0 || entry.subjectivity > 1.0) {
        throw ConfigError("affect entry for '" + word + "' out of range");
    }
    entries_[lower(std::move(word))] = entry;
}

void AffectLexicon::add_negator(std::string word) { negators_.insert(lower(std::move(word))); }

const AffectEntry* AffectLexicon::find(std::string_view word) const {
    auto it = entries_.find(std::string(word));
    return it == entries_.end() ? nullptr : &it->second;
}

bool AffectLexicon::is_negator(std::string_view word) const { return negators_.contains(std::string(word)); }

AffectScore score_comment(const TokenStream& stream, const AffectLexicon& lexicon) {
    double polarity = 0.0;
    double subjectivity = 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const AffectEntry* entry = lexicon.find(stream[i]);
        if (!entry) continue;
        double p = entry->polarity;
        if (i > 0 && lexicon.is_negator(stream[i - 1])) p *= -0.5;
        polarity += p;
        subjectivity += entry->subjectivity;
        ++hits;
    }
    if (hits == 0) return {};
    const double n = static_cast<double>(hits);
    return {std::clamp(polarity / n, -1.0, 1.0), std::clamp(subjectivity / n, 0.0, 1.0)};
}

AffectSummary summarize_corpus(std::span<const AffectScore> scores) {
    if (scores.empty()) throw DataError("cannot summarize an empty corpus");
    const double n = static_cast<double>(scores.size());
    detail::ExactSum pol_sum, sub_sum;
    for (const auto& s : scores) {
        pol_sum.add(s.polarity);
        sub_sum.add(s.subjectivity);
    }
    AffectSummary out;
    out.n = scores.size();
    out.mean_polarity = pol_sum.value() / n;
    out.mean_subjectivity = sub_sum.value() / n;

    detail::ExactSum pol_sq, sub_sq;
    for (const auto& s : scores) {
        const double dp = s.polarity - out.mean_polarity;
        const double ds = s.subjectivity - out.mean_subjectivity;
        pol_sq.add(dp * dp);
        sub_sq.add(ds * ds);
    }
    out.std_polarity = std::sqrt(pol_sq.value() / n);
    out.std_subjectivity = std::sqrt(sub_sq.value() / n);
    return out;
}

std::string format_mean_std(double mean, double std_dev, int decimals) {
    return detail::format_fixed(mean, decimals) + "±" + detail::format_fixed(std_dev, decimals);
}

} // namespace langshift
