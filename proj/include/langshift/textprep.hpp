#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace langshift {

/// Ordered lowercase tokens; no token is empty or contains whitespace.
using TokenStream = std::vector<std::string>;

class StopList {
public:
    StopList() = default;
    StopList(std::initializer_list<std::string_view> words);

    /// One word per line; `#` starts a comment. Entries are lowercased.
    static StopList load(const std::filesystem::path& path);

    bool contains(std::string_view word) const;
    std::size_t size() const noexcept { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

/// Removes URLs, lowercases, and emits maximal runs of letters with internal
/// apostrophes. Digits, punctuation and symbols separate tokens. Letters
/// outside ASCII are recognised by code-point range and kept as-is apart
/// from case folding of Latin, Greek and Cyrillic.
TokenStream tokenize(std::string_view text);

TokenStream remove_stopwords(TokenStream stream, const StopList& stops);

/// Porter (1980) suffix stripping, following the reference implementation.
/// Tokens of one or two characters and tokens containing non-ASCII bytes
/// are returned unchanged.
std::string stem(std::string_view token);

TokenStream stem_all(TokenStream stream);

} // namespace langshift
