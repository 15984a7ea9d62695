#include <gtest/gtest.h>

#include "json.hpp"

#include "bicross/corpus.hpp"
#include "bicross/error.hpp"
#include "bicross/queries.hpp"
#include "test_support.hpp"

using namespace bicross;
using namespace bicross::testing;

namespace {

queries::QueryTopic uv_topic() {
    return {"1", "en", "uv light to kill coronavirus", "Is uv light effective to kill coronavirus?", "", {}, {}};
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::IoError;
}

}  // namespace

TEST(QueryForms, KeyConv) {
    const auto t = uv_topic();
    EXPECT_EQ(queries::key_conv(t), "uv light to kill coronavirus Is uv light effective to kill coronavirus?");
    EXPECT_EQ(queries::key_conv(t), queries::key_conv(t));
    EXPECT_EQ(queries::derive_query(t, queries::QueryType::key_conv), queries::key_conv(t));
}

TEST(QueryForms, UdelsUvTopic) {
    EXPECT_EQ(queries::udels_query(uv_topic()), "uv light kill coronavirus effective kill coronavirus");
}

TEST(QueryForms, UdelsHandFixture) {
    const auto topics = nlohmann::json::parse(read_text(fixture("udels_topics.json")));
    ASSERT_EQ(topics.size(), 10u);
    for (const auto& j : topics) {
        queries::QueryTopic t{j["topic_id"], j["lang"], j["keyword"], j["conversational"], "", {}, {}};
        EXPECT_EQ(queries::udels_query(t), j["expected"].get<std::string>()) << t.topic_id;
    }
}

TEST(QueryForms, UdelsCustomExtractor) {
    struct Nothing final : queries::EntityExtractor {
        std::vector<std::string> extract(std::string_view, std::string_view) const override { return {}; }
    };
    EXPECT_EQ(queries::udels_query(uv_topic(), corpus::stopwords("en"), Nothing{}), "uv light kill coronavirus");
    auto t = uv_topic();
    t.lang = "it";
    EXPECT_EQ(code_of([&] { queries::udels_query(t); }), ErrorCode::UnsupportedLanguage);
}

TEST(QueryForms, ExtractorOtherLanguages) {
    const auto& ex = queries::default_entity_extractor();
    EXPECT_EQ(ex.extract("¿Es eficaz la luz para matar el coronavirus?", "es"),
              (std::vector<std::string>{"eficaz", "matar", "coronavirus"}));
    EXPECT_EQ(ex.extract("Ist UV-Licht wirksam gegen Viren in Berlin?", "de"),
              (std::vector<std::string>{"UV-Licht", "wirksam", "Viren", "Berlin"}));
}

TEST(QueryForms, T5) {
    auto t = uv_topic();
    EXPECT_EQ(code_of([&] { queries::t5_query(t); }), ErrorCode::MissingExpansions);
    t.expansions = {"does uv kill covid", "uv disinfection coronavirus"};
    EXPECT_EQ(queries::t5_query(t), queries::key_conv(t) + " does uv kill covid uv disinfection coronavirus");
    EXPECT_EQ(queries::parse_query_type("t5_query"), queries::QueryType::t5);
    EXPECT_EQ(queries::parse_query_type("udels"), queries::QueryType::udels);
    EXPECT_EQ(code_of([] { queries::parse_query_type("bm25"); }), ErrorCode::InvalidArgument);
}

TEST(Topics, LoadBothFormats) {
    TempDir dir;
    write_text(dir / "a.json",
               R"([{"topic_id": 3, "lang": "en", "keyword": "k", "conversational": "c?", "explanation": "e"}])");
    const auto a = queries::load_topics(dir / "a.json");
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].topic_id, "3");
    EXPECT_EQ(a[0].explanation, "e");
    const auto b = queries::load_topics(fixture("bilingual_topics.jsonl"));
    EXPECT_EQ(b.size(), 3u);
    write_text(dir / "bad.json", R"([{"topic_id": "1", "lang": "en"}])");
    EXPECT_EQ(code_of([&] { queries::load_topics(dir / "bad.json"); }), ErrorCode::MalformedInput);
    write_text(dir / "dup.jsonl", "{\"topic_id\":\"1\",\"lang\":\"en\",\"keyword\":\"k\",\"conversational\":\"c\"}\n"
                                  "{\"topic_id\":\"1\",\"lang\":\"en\",\"keyword\":\"k\",\"conversational\":\"c\"}\n");
    EXPECT_EQ(code_of([&] { queries::load_topics(dir / "dup.jsonl"); }), ErrorCode::MalformedInput);
}

TEST(Topics, TranslationsRoundTrip) {
    auto topics = queries::load_topics(fixture("bilingual_topics.jsonl"));
    const auto tr = queries::load_translations(fixture("translations.json"));
    queries::attach_translations(topics, tr);
    std::size_t pairs = 0;
    for (const auto& [tid, langs] : tr) {
        const auto it = std::find_if(topics.begin(), topics.end(), [&](const auto& t) { return t.topic_id == tid; });
        ASSERT_NE(it, topics.end());
        for (const auto& [lang, fields] : langs) {
            EXPECT_EQ(queries::translate_query(*it, lang), fields);
            const auto moved = queries::translated_topic(*it, lang);
            EXPECT_EQ(moved.lang, lang);
            EXPECT_EQ(moved.keyword, fields.keyword);
            EXPECT_NO_THROW(queries::udels_query(moved));
            ++pairs;
        }
    }
    EXPECT_EQ(pairs, 6u);
    EXPECT_EQ(code_of([&] { queries::translate_query(topics[2], "es"); }), ErrorCode::MissingTranslation);
}

TEST(Topics, TranslatedTopicDropsExpansions) {
    auto t = uv_topic();
    t.expansions = {"x"};
    t.translations["es"] = {"luz uv", "¿La luz uv mata el coronavirus?"};
    const auto es = queries::translated_topic(t, "es");
    EXPECT_TRUE(es.expansions.empty());
    EXPECT_EQ(queries::key_conv(es), "luz uv ¿La luz uv mata el coronavirus?");
}

TEST(Topics, Expansions) {
    TempDir dir;
    write_text(dir / "x.json", R"({"1": ["a b", "c"], "9": ["z"]})");
    auto topics = std::vector<queries::QueryTopic>{uv_topic()};
    queries::attach_expansions(topics, queries::load_expansions(dir / "x.json"));
    EXPECT_EQ(topics[0].expansions, (std::vector<std::string>{"a b", "c"}));
}
