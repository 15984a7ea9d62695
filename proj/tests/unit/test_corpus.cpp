#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bicross/corpus.hpp"
#include "bicross/error.hpp"
#include "test_support.hpp"

using namespace bicross;
using bicross::testing::fixture;
using bicross::testing::read_text;
using bicross::testing::TempDir;
using bicross::testing::write_text;

namespace {

void expect_code(ErrorCode code, const std::function<void()>& fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

}  // namespace

class StemFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(StemFixture, MatchesReferenceStemmer) {
    const std::string lang = GetParam();
    std::ifstream in(fixture("stem_" + lang + ".tsv"));
    ASSERT_TRUE(in);
    std::string line;
    std::size_t n = 0;
    std::size_t bad = 0;
    while (std::getline(in, line)) {
        const auto tab = line.find('\t');
        ASSERT_NE(tab, std::string::npos);
        const std::string word = line.substr(0, tab);
        const std::string stem = line.substr(tab + 1);
        const std::string got = corpus::stem_word(word, lang);
        if (got != stem && ++bad <= 10) ADD_FAILURE() << lang << ": " << word << " -> " << got << ", want " << stem;
        ++n;
    }
    EXPECT_GT(n, 1000u);
    EXPECT_EQ(bad, 0u);
}

INSTANTIATE_TEST_SUITE_P(Languages, StemFixture, ::testing::Values("en", "es", "fr", "de"));

TEST(Normalize, EnglishExample) {
    EXPECT_EQ(corpus::normalize_tokens("The viruses were killed", "en"), (std::vector<std::string>{"virus", "kill"}));
}

TEST(Normalize, PureAndLanguageAware) {
    const auto n = corpus::default_normalizer("es");
    EXPECT_EQ(n->lang(), "es");
    EXPECT_EQ(n->normalize("Las vacunas y la enfermedad"), n->normalize("Las vacunas y la enfermedad"));
    EXPECT_EQ(n->normalize("de la y"), std::vector<std::string>{});
    expect_code(ErrorCode::UnsupportedLanguage, [] { corpus::normalize_tokens("x", "xx"); });
}

TEST(Normalize, StopwordsPerLanguage) {
    for (std::string_view lang : corpus::supported_languages()) {
        EXPECT_FALSE(corpus::stopwords(lang).empty()) << lang;
    }
    EXPECT_TRUE(corpus::stopwords("en").contains("the"));
    EXPECT_TRUE(corpus::stopwords("de").contains("und"));
    expect_code(ErrorCode::UnsupportedLanguage, [] { corpus::stopwords("it"); });
}

TEST(Sentences, Abbreviation) {
    EXPECT_EQ(corpus::split_sentences("Dr. Smith arrived. He left.", "en"),
              (std::vector<std::string>{"Dr. Smith arrived.", "He left."}));
}

TEST(Sentences, BoundaryCases) {
    EXPECT_EQ(corpus::split_sentences("Is it safe? Yes! It is.", "en").size(), 3u);
    EXPECT_EQ(corpus::split_sentences("The U.S. agency said so. Then it ended.", "en").size(), 2u);
    EXPECT_EQ(corpus::split_sentences("He said \"stop.\" Then left.", "en").size(), 2u);
    EXPECT_EQ(corpus::split_sentences("no terminal punctuation", "en"),
              std::vector<std::string>{"no terminal punctuation"});
    EXPECT_TRUE(corpus::split_sentences("   ", "en").empty());
    EXPECT_EQ(corpus::split_sentences("Sr. García llegó. Luego salió.", "es").size(), 2u);
}

TEST(Extraction, MatchesReferenceParser) {
    const auto expected = nlohmann::json::parse(read_text(fixture("xml_expected.json")));
    ASSERT_EQ(expected.size(), 50u);
    for (const auto& [name, paras] : expected.items()) {
        const auto got = corpus::extract_paragraphs(read_text(fixture("xml/" + name)));
        EXPECT_EQ(got, paras.get<std::vector<std::string>>()) << name;
    }
}

TEST(Extraction, NoParagraphsIsMalformed) {
    expect_code(ErrorCode::MalformedInput,
                [] { corpus::ingest_document("<doc><title>x</title></doc>", "d1", "en"); });
    expect_code(ErrorCode::MalformedInput, [] { corpus::ingest_document("<doc><p>   </p></doc>", "d1", "en"); });
}

TEST(Extraction, DocumentFields) {
    const auto d = corpus::ingest_document("<doc><p>UV light kills viruses. Dr. Smith agreed.</p><p>Second one.</p></doc>",
                                           "d7", "en");
    EXPECT_EQ(d.doc_id, "d7");
    EXPECT_EQ(d.raw_paragraphs.size(), 2u);
    EXPECT_EQ(d.sentences, (std::vector<std::string>{"UV light kills viruses.", "Dr. Smith agreed.", "Second one."}));
    EXPECT_EQ(d.tokens, corpus::normalize_tokens("UV light kills viruses. Dr. Smith agreed. Second one.", "en"));
}

TEST(Extraction, ConcatenatedRecords) {
    const auto recs = corpus::split_concatenated("<c><doc id=\"a\"><p>A.</p></doc>\n<doc id='b'><p>B.</p></doc></c>");
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_EQ(recs[0].first, "a");
    EXPECT_EQ(recs[1].first, "b");
    EXPECT_EQ(corpus::extract_paragraphs(recs[1].second), std::vector<std::string>{"B."});
}

TEST(Manifest, ParsesAndRejects) {
    TempDir dir;
    write_text(dir / "m.tsv", "# comment\na.xml\tA\ten\n\nb.xml\t*\tes\n");
    const auto m = corpus::read_manifest(dir / "m.tsv");
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[1].doc_id, "*");
    EXPECT_EQ(m[1].lang, "es");
    write_text(dir / "bad.tsv", "a.xml\tA\n");
    expect_code(ErrorCode::MalformedRow, [&] { corpus::read_manifest(dir / "bad.tsv"); });
}

TEST(Stats, Computed) {
    std::vector<corpus::Document> docs(2);
    docs[0].tokens = {"a", "b", "c"};
    docs[0].sentences = {"x"};
    docs[1].tokens = {"a"};
    docs[1].sentences = {"x", "y", "z", "w"};
    const auto s = corpus::compute_corpus_stats(docs);
    EXPECT_EQ(s.doc_count, 2u);
    EXPECT_DOUBLE_EQ(s.avgdl, 2.0);
    EXPECT_DOUBLE_EQ(s.avg_sentences, 2.5);
    expect_code(ErrorCode::EmptyCorpus, [] { corpus::compute_corpus_stats({}); });
}

TEST(Store, RoundTripAndRandomAccess) {
    TempDir dir;
    std::vector<corpus::Document> docs;
    for (int i = 0; i < 30; ++i) {
        docs.push_back(corpus::ingest_document(
            "<doc><p>Doc " + std::to_string(i) + " talks about caf\xc3\xa9 \"quotes\" and masks. Second.</p></doc>",
            "id" + std::to_string(i), "en"));
    }
    corpus::write_store(dir.path(), "en", docs);
    EXPECT_EQ(corpus::read_store(corpus::store_file(dir.path(), "en")), docs);

    const corpus::DocumentStore store(corpus::store_file(dir.path(), "en"));
    EXPECT_EQ(store.size(), 30u);
    EXPECT_EQ(store.get("id17"), docs[17]);
    EXPECT_EQ(store.sentences("id3"), docs[3].sentences);
    EXPECT_FALSE(store.contains("nope"));
    expect_code(ErrorCode::UnknownDocument, [&] { store.sentences("nope"); });

    const corpus::CorpusStats stats{30, 7.5, 2.0};
    corpus::write_stats(dir.path(), "en", stats);
    EXPECT_EQ(corpus::read_stats(dir.path(), "en"), stats);
}

TEST(Store, CorruptLineRaises) {
    TempDir dir;
    write_text(dir / "en.jsonl", "{\"doc_id\": \"a\", \"lang\": \"en\"}\nnot json\n");
    expect_code(ErrorCode::CorruptStore, [&] { corpus::read_store(dir / "en.jsonl"); });
}

TEST(Ingest, DirectoryWithSkips) {
    TempDir dir;
    write_text(dir / "in/a.xml", "<doc><p>Masks work.</p></doc>");
    write_text(dir / "in/b.xml", "<doc><title>only</title></doc>");  // malformed
    write_text(dir / "in/c.xml", "<doc><p>Las mascarillas funcionan.</p></doc>");
    write_text(dir / "in/bundle.xml", "<doc id=\"x1\"><p>One.</p></doc><doc id=\"x2\"><p>Two.</p></doc>");
    write_text(dir / "m.tsv",
               "a.xml\tA\ten\nb.xml\tB\ten\nc.xml\tC\tes\nmissing.xml\tM\ten\nbundle.xml\t*\ten\n"
               "a.xml\tZ\tit\na.xml\tA\ten\n");
    const auto summary = corpus::ingest_directory(dir / "in", dir / "m.tsv", dir / "out", 2);
    EXPECT_EQ(summary.stats_by_lang.at("en").doc_count, 3u);
    EXPECT_EQ(summary.stats_by_lang.at("es").doc_count, 1u);
    EXPECT_EQ(summary.skipped, 4u);  // malformed, missing, unsupported language, duplicate
    const auto en = corpus::read_store(corpus::store_file(dir / "out", "en"));
    ASSERT_EQ(en.size(), 3u);
    EXPECT_EQ(corpus::read_stats(dir / "out", "es").doc_count, 1u);
}

TEST(Ingest, NothingIngestedIsEmptyCorpus) {
    TempDir dir;
    write_text(dir / "in/b.xml", "<doc></doc>");
    write_text(dir / "m.tsv", "b.xml\tB\ten\n");
    expect_code(ErrorCode::EmptyCorpus, [&] { corpus::ingest_directory(dir / "in", dir / "m.tsv", dir / "out"); });
}
