#include "langshift/textprep.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "langshift/error.hpp"

namespace langshift {

namespace {

constexpr char32_t kInvalid = 0xFFFD;

char32_t decode_utf8(std::string_view s, std::size_t& pos) {
    const auto lead = static_cast<unsigned char>(s[pos]);
    int extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
        ++pos;
        return lead;
    } else if ((lead & 0xE0) == 0xC0) {
        extra = 1;
        cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
        extra = 2;
        cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
        extra = 3;
        cp = lead & 0x07;
    } else {
        ++pos;
        return kInvalid;
    }
    if (pos + extra >= s.size()) {
        ++pos;
        return kInvalid;
    }
    for (int i = 1; i <= extra; ++i) {
        const auto byte = static_cast<unsigned char>(s[pos + i]);
        if ((byte & 0xC0) != 0x80) {
            ++pos;
            return kInvalid;
        }
        cp = (cp << 6) | (byte & 0x3F);
    }
    pos += extra + 1;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return kInvalid;
    return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019 || cp == 0x02BC; }

// Non-ASCII code points are letters unless they fall in a block of
// punctuation, symbols, digits, spaces, or format characters.
bool is_letter(char32_t cp) {
    if (cp < 0x80) return std::isalpha(static_cast<int>(cp)) != 0;
    if (cp == kInvalid) return false;
    if (in(cp, 0x80, 0xBF)) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
    if (cp == 0xD7 || cp == 0xF7) return false;
    if (in(cp, 0x0660, 0x0669) || in(cp, 0x06F0, 0x06F9) || in(cp, 0x0966, 0x096F)) return false;
    if (in(cp, 0x2000, 0x2BFF) || in(cp, 0x2E00, 0x2E7F) || in(cp, 0x3000, 0x303F)) return false;
    if (in(cp, 0xE000, 0xF8FF) || in(cp, 0xFE00, 0xFE6F) || in(cp, 0xFFF0, 0xFFFF)) return false;
    if (in(cp, 0xFF00, 0xFF20) || in(cp, 0xFF3B, 0xFF40) || in(cp, 0xFF5B, 0xFF65)) return false;
    if (in(cp, 0x1F000, 0x1FAFF) || cp >= 0xE0000) return false;
    return true;
}

char32_t to_lower(char32_t cp) {
    if (cp < 0x80) return static_cast<char32_t>(std::tolower(static_cast<int>(cp)));
    if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 0x20;
    if (in(cp, 0x0100, 0x0137) || in(cp, 0x014A, 0x0177)) return cp | 1;
    if (in(cp, 0x0139, 0x0148) || in(cp, 0x0179, 0x017E)) return (cp & 1) ? cp + 1 : cp;
    if (cp == 0x0178) return 0xFF;
    if (in(cp, 0x0391, 0x03A9) && cp != 0x03A2) return cp + 0x20;
    if (cp == 0x0386) return 0x03AC;
    if (in(cp, 0x0388, 0x038A)) return cp + 37;
    if (cp == 0x038C) return 0x03CC;
    if (in(cp, 0x038E, 0x038F)) return cp + 63;
    if (in(cp, 0x0400, 0x040F)) return cp + 0x50;
    if (in(cp, 0x0410, 0x042F)) return cp + 0x20;
    if (in(cp, 0x0460, 0x0481) || in(cp, 0x048A, 0x04BF)) return cp | 1;
    return cp;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Blanks out every URL: from an http(s):// or www. marker to the end of its
// whitespace-delimited word.
std::string strip_urls(std::string_view text) {
    std::string out(text);
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::size_t pos = 0;
    while (pos < out.size()) {
        while (pos < out.size() && is_space(out[pos])) ++pos;
        std::size_t end = pos;
        while (end < out.size() && !is_space(out[end])) ++end;
        std::string_view word(lowered.data() + pos, end - pos);
        std::size_t start = std::string_view::npos;
        for (std::string_view marker : {"https://", "http://", "www."}) {
            start = std::min(start, word.find(marker));
        }
        if (start != std::string_view::npos) {
            std::fill(out.begin() + static_cast<std::ptrdiff_t>(pos + start),
                      out.begin() + static_cast<std::ptrdiff_t>(end), ' ');
        }
        pos = end;
    }
    return out;
}

// Porter stemmer over a mutable ASCII buffer; indices follow the reference
// implementation (k = last index, j = end of stem after a suffix match).
class Porter {
public:
    explicit Porter(std::string word) : b_(std::move(word)), k_(static_cast<int>(b_.size()) - 1) {}

    std::string run() {
        if (k_ <= 1) return b_;
        step1ab();
        if (k_ > 0) {
            step1c();
            step2();
            step3();
            step4();
            step5();
        }
        return b_.substr(0, static_cast<std::size_t>(k_ + 1));
    }

private:
    bool cons(int i) const {
        switch (b_[i]) {
            case 'a': case 'e': case 'i': case 'o': case 'u': return false;
            case 'y': return i == 0 ? true : !cons(i - 1);
            default: return true;
        }
    }

    // Number of VC sequences in b[0..j].
    int m() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j_) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j_) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j_) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j_; ++i) {
            if (!cons(i)) return true;
        }
        return false;
    }

    bool double_consonant(int j) const { return j >= 1 && b_[j] == b_[j - 1] && cons(j); }

    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        char ch = b_[i];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
        const int len = static_cast<int>(s.size());
        if (len > k_ + 1) return false;
        if (std::string_view(b_).substr(static_cast<std::size_t>(k_ - len + 1), s.size()) != s) return false;
        j_ = k_ - len;
        return true;
    }

    void set_to(std::string_view s) {
        b_.replace(static_cast<std::size_t>(j_ + 1), static_cast<std::size_t>(k_ - j_), s);
        k_ = j_ + static_cast<int>(s.size());
    }

    void replace_if_measure(std::string_view s) {
        if (m() > 0) set_to(s);
    }

    void step1ab() {
        if (b_[k_] == 's') {
            if (ends("sses")) {
                k_ -= 2;
            } else if (ends("ies")) {
                set_to("i");
            } else if (b_[k_ - 1] != 's') {
                --k_;
            }
        }
        if (ends("eed")) {
            if (m() > 0) --k_;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k_ = j_;
            if (ends("at")) {
                set_to("ate");
            } else if (ends("bl")) {
                set_to("ble");
            } else if (ends("iz")) {
                set_to("ize");
            } else if (double_consonant(k_)) {
                --k_;
                char ch = b_[k_];
                if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
            } else if (m() == 1 && cvc(k_)) {
                set_to("e");
            }
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
    }

    // Tries each (suffix, replacement) pair in order; the first suffix that
    // matches ends the search whether or not the measure permits rewriting.
    bool try_rules(std::initializer_list<std::pair<std::string_view, std::string_view>> rules) {
        for (const auto& [suffix, replacement] : rules) {
            if (ends(suffix)) {
                replace_if_measure(replacement);
                return true;
            }
        }
        return false;
    }

    void step2() {
        if (k_ < 1) return;
        switch (b_[k_ - 1]) {
            case 'a': try_rules({{"ational", "ate"}, {"tional", "tion"}}); break;
            case 'c': try_rules({{"enci", "ence"}, {"anci", "ance"}}); break;
            case 'e': try_rules({{"izer", "ize"}}); break;
            case 'l':
                try_rules({{"bli", "ble"}, {"alli", "al"}, {"entli", "ent"}, {"eli", "e"}, {"ousli", "ous"}});
                break;
            case 'o': try_rules({{"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}}); break;
            case 's':
                try_rules({{"alism", "al"}, {"iveness", "ive"}, {"fulness", "ful"}, {"ousness", "ous"}});
                break;
            case 't': try_rules({{"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}}); break;
            case 'g': try_rules({{"logi", "log"}}); break;
            default: break;
        }
    }

    void step3() {
        switch (b_[k_]) {
            case 'e': try_rules({{"icate", "ic"}, {"ative", ""}, {"alize", "al"}}); break;
            case 'i': try_rules({{"iciti", "ic"}}); break;
            case 'l': try_rules({{"ical", "ic"}, {"ful", ""}}); break;
            case 's': try_rules({{"ness", ""}}); break;
            default: break;
        }
    }

    bool any_ends(std::initializer_list<std::string_view> suffixes) {
        for (auto s : suffixes) {
            if (ends(s)) return true;
        }
        return false;
    }

    void step4() {
        if (k_ < 1) return;
        bool matched = false;
        switch (b_[k_ - 1]) {
            case 'a': matched = any_ends({"al"}); break;
            case 'c': matched = any_ends({"ance", "ence"}); break;
            case 'e': matched = any_ends({"er"}); break;
            case 'i': matched = any_ends({"ic"}); break;
            case 'l': matched = any_ends({"able", "ible"}); break;
            case 'n': matched = any_ends({"ant", "ement", "ment", "ent"}); break;
            case 'o':
                if (ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) {
                    matched = true;
                } else {
                    matched = any_ends({"ou"});
                }
                break;
            case 's': matched = any_ends({"ism"}); break;
            case 't': matched = any_ends({"ate", "iti"}); break;
            case 'u': matched = any_ends({"ous"}); break;
            case 'v': matched = any_ends({"ive"}); break;
            case 'z': matched = any_ends({"ize"}); break;
            default: break;
        }
        if (matched && m() > 1) k_ = j_;
    }

    void step5() {
        j_ = k_;
        if (b_[k_] == 'e') {
            const int a = m();
            if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
        }
        if (b_[k_] == 'l' && double_consonant(k_) && m() > 1) --k_;
    }

    std::string b_;
    int k_;
    int j_ = 0;
};

} // namespace

StopList::StopList(std::initializer_list<std::string_view> words) {
    for (auto w : words) {
        std::string lowered(w);
        std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        words_.insert(std::move(lowered));
    }
}

StopList StopList::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read stop list '" + path.string() + "'");
    StopList list;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string word = line.substr(first, last - first + 1);
        std::transform(word.begin(), word.end(), word.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        list.words_.insert(std::move(word));
    }
    return list;
}

bool StopList::contains(std::string_view word) const { return words_.contains(std::string(word)); }

TokenStream tokenize(std::string_view text) {
    const std::string cleaned = strip_urls(text);
    const std::string_view s(cleaned);

    TokenStream tokens;
    std::string current;
    bool pending_apostrophe = false;
    std::size_t pos = 0;
    auto flush = [&] {
        if (!current.empty()) tokens.push_back(std::move(current));
        current.clear();
        pending_apostrophe = false;
    };
    while (pos < s.size()) {
        const char32_t cp = decode_utf8(s, pos);
        if (is_letter(cp)) {
            if (pending_apostrophe) current.push_back('\'');
            pending_apostrophe = false;
            encode_utf8(to_lower(cp), current);
        } else if (is_apostrophe(cp) && !current.empty() && !pending_apostrophe) {
            pending_apostrophe = true;
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

TokenStream remove_stopwords(TokenStream stream, const StopList& stops) {
    std::erase_if(stream, [&](const std::string& t) { return stops.contains(t); });
    return stream;
}

std::string stem(std::string_view token) {
    if (std::any_of(token.begin(), token.end(), [](unsigned char c) { return c >= 0x80; })) {
        return std::string(token);
    }
    return Porter(std::string(token)).run();
}

TokenStream stem_all(TokenStream stream) {
    for (auto& t : stream) t = stem(t);
    return stream;
}

} // namespace langshift
