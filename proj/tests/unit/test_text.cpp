#include <gtest/gtest.h>

#include "bicross/error.hpp"
#include "bicross/text.hpp"

using namespace bicross;

TEST(Text, Utf8RoundTrip) {
    const std::string s = "caf\xc3\xa9 \xe2\x82\xac \xf0\x9f\x98\x80";
    EXPECT_EQ(text::encode_utf8(text::decode_utf8(s)), s);
    EXPECT_EQ(text::decode_utf8(s).size(), 8u);
}

TEST(Text, LowercaseUnicode) {
    EXPECT_EQ(text::to_lower("ÉCOLE Straße ÜBER"), "école straße über");
    EXPECT_EQ(text::to_lower("COVID-19"), "covid-19");
}

TEST(Text, WordTokens) {
    EXPECT_EQ(text::word_tokens("Is uv light effective?"),
              (std::vector<std::string>{"Is", "uv", "light", "effective"}));
    EXPECT_EQ(text::word_tokens("don't stop l'eau"), (std::vector<std::string>{"don't", "stop", "l'eau"}));
    EXPECT_EQ(text::word_tokens("COVID-19, 2020"), (std::vector<std::string>{"COVID", "19", "2020"}));
    EXPECT_EQ(text::word_tokens("l\xe2\x80\x99" "eau"), (std::vector<std::string>{"l'eau"}));
    EXPECT_TRUE(text::word_tokens(" ... ").empty());
}

TEST(Text, SurfaceTokens) {
    EXPECT_EQ(text::surface_tokens("Can hydroxychloroquine cure COVID-19 patients?"),
              (std::vector<std::string>{"Can", "hydroxychloroquine", "cure", "COVID-19", "patients"}));
    EXPECT_TRUE(text::surface_tokens("?? !!").empty());
}

TEST(Text, WhitespaceHelpers) {
    EXPECT_EQ(text::collapse_whitespace("  a \t b\n\nc  "), "a b c");
    EXPECT_EQ(text::trim("  x y "), "x y");
    EXPECT_EQ(text::join({"a", "b", "c"}, "-"), "a-b-c");
}

TEST(Text, Fnv1aKnownValues) {
    EXPECT_EQ(text::fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(text::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Errors, CodeIsCarried) {
    try {
        throw Error(ErrorCode::EmptyQuery, "nothing left");
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyQuery);
        EXPECT_EQ(to_string(e.code()), "EmptyQuery");
    }
}
