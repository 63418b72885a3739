#include "doctest.h"

#include <random>

#include "../test_util.hpp"
#include "langshift/affect.hpp"
#include "langshift/error.hpp"

using namespace langshift;

namespace {

AffectLexicon small_lexicon() {
    AffectLexicon lex;
    lex.add("great", {0.8, 0.75});
    lex.add("bad", {-0.7, 0.6667});
    lex.add("fine", {0.4, 0.5});
    lex.add_negator("not");
    return lex;
}

} // namespace

TEST_CASE("score_comment") {
    auto lex = small_lexicon();
    auto s = score_comment({"great"}, lex);
    CHECK(s.polarity == doctest::Approx(0.8));
    CHECK(s.subjectivity == doctest::Approx(0.75));

    auto neg = score_comment({"not", "great"}, lex);
    CHECK(neg.polarity == doctest::Approx(-0.4));
    CHECK(neg.subjectivity == doctest::Approx(0.75));

    auto none = score_comment({}, lex);
    CHECK(none.polarity == 0.0);
    CHECK(none.subjectivity == 0.0);
    CHECK(score_comment({"table", "chair"}, lex).polarity == 0.0);

    auto mixed = score_comment({"great", "and", "bad"}, lex);
    CHECK(mixed.polarity == doctest::Approx(0.05));
    CHECK(mixed.subjectivity == doctest::Approx((0.75 + 0.6667) / 2));
}

TEST_CASE("score_comment ranges and irrelevant-token invariance") {
    auto lex = small_lexicon();
    std::mt19937 rng(41);
    const std::vector<std::string> vocab = {"great", "bad", "fine", "not", "the", "cat", "sat"};
    for (int trial = 0; trial < 500; ++trial) {
        TokenStream doc;
        const int len = static_cast<int>(rng() % 10);
        for (int i = 0; i < len; ++i) doc.push_back(vocab[rng() % vocab.size()]);
        auto s = score_comment(doc, lex);
        CHECK(s.polarity >= -1.0);
        CHECK(s.polarity <= 1.0);
        CHECK(s.subjectivity >= 0.0);
        CHECK(s.subjectivity <= 1.0);

        // Appending neutral tokens never changes the score.
        auto padded = doc;
        padded.push_back("cat");
        padded.push_back("sat");
        auto sp = score_comment(padded, lex);
        CHECK(sp.polarity == s.polarity);
        CHECK(sp.subjectivity == s.subjectivity);
    }
}

TEST_CASE("summarize_corpus") {
    std::vector<AffectScore> two = {{0, 0}, {1, 1}};
    auto s = summarize_corpus(two);
    CHECK(s.mean_polarity == 0.5);
    CHECK(s.mean_subjectivity == 0.5);
    CHECK(s.std_polarity == 0.5);
    CHECK(s.std_subjectivity == 0.5);

    std::vector<AffectScore> same(7, AffectScore{0.3, 0.2});
    auto flat = summarize_corpus(same);
    CHECK(flat.std_polarity == 0.0);
    CHECK(flat.std_subjectivity == 0.0);

    CHECK_THROWS_AS(summarize_corpus({}), DataError);
}

TEST_CASE("doubling a corpus leaves the summary unchanged") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> pol(-1, 1), sub(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<AffectScore> scores;
        for (int i = 0; i < 37; ++i) scores.push_back({pol(rng), sub(rng)});
        auto doubled = scores;
        doubled.insert(doubled.end(), scores.begin(), scores.end());
        auto a = summarize_corpus(scores);
        auto b = summarize_corpus(doubled);
        CHECK(a.mean_polarity == b.mean_polarity);
        CHECK(a.std_polarity == b.std_polarity);
        CHECK(a.mean_subjectivity == b.mean_subjectivity);
        CHECK(a.std_subjectivity == b.std_subjectivity);
    }
}

TEST_CASE("format_mean_std") {
    CHECK(format_mean_std(0.036, 0.301) == "0.036±0.301");
    CHECK(format_mean_std(-0.0001, 0.5) == "0.000±0.500");
    CHECK(format_mean_std(0.41149, 0.30251) == "0.411±0.303");
}

TEST_CASE("AffectLexicon files") {
    TempDir dir("affect");
    auto csv = dir.write("lex.csv", "word,polarity,subjectivity\nGreat,0.8,0.75\nawful,-1,1\n");
    auto neg = dir.write("neg.txt", "# negators\nnot\nnever\n");
    auto lex = AffectLexicon::load(csv, neg);
    CHECK(lex.size() == 2);
    REQUIRE(lex.find("great"));
    CHECK(lex.find("great")->polarity == 0.8);
    CHECK(lex.is_negator("never"));

    CHECK_THROWS_AS(AffectLexicon::load(dir.write("bad.csv", "zap,2.0,0.5\n")), ConfigError);
    CHECK_THROWS_AS(AffectLexicon::load(dir.write("short.csv", "zap,0.5\n")), ConfigError);

    auto shipped = AffectLexicon::load(LANGSHIFT_TEST_DATA_DIR "/affect_lexicon.csv",
                                       std::filesystem::path(LANGSHIFT_TEST_DATA_DIR "/negators.txt"));
    CHECK(shipped.size() > 1000);
    CHECK(shipped.is_negator("not"));
    REQUIRE(shipped.find("great"));
    CHECK(shipped.find("great")->polarity == doctest::Approx(0.8));
}
