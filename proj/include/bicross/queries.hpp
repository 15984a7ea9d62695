#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace bicross::queries {

struct TranslatedFields {
    std::string keyword;
    std::string conversational;

    bool operator==(const TranslatedFields&) const = default;
};

struct QueryTopic {
    std::string topic_id;
    std::string lang;
    std::string keyword;
    std::string conversational;
    std::string explanation;  // kept for assessors; never used for retrieval
    std::vector<std::string> expansions;
    std::map<std::string, TranslatedFields> translations;

    bool operator==(const QueryTopic&) const = default;
};

enum class QueryType { key_conv, udels, t5 };

std::string_view to_string(QueryType type) noexcept;
/// Throws InvalidArgument.
QueryType parse_query_type(std::string_view name);

/// Finds entity-like tokens in free text.
class EntityExtractor {
public:
    virtual ~EntityExtractor() = default;
    /// Surface tokens in source order, duplicates kept. Throws UnsupportedLanguage.
    virtual std::vector<std::string> extract(std::string_view text, std::string_view lang) const = 0;
};

/// Keeps capitalized tokens that do not open a sentence, tokens mixing
/// letters and digits, and tokens whose stem is in a small per-language
/// lexicon of COVID-19 and public-health terms. Stopwords never qualify.
class HeuristicEntityExtractor final : public EntityExtractor {
public:
    std::vector<std::string> extract(std::string_view text, std::string_view lang) const override;
};

const EntityExtractor& default_entity_extractor();

/// keyword + " " + conversational.
std::string key_conv(const QueryTopic& topic);

/// Non-stopword keyword tokens followed by the extractor's tokens from the
/// conversational field. Throws UnsupportedLanguage.
std::string udels_query(const QueryTopic& topic, const std::unordered_set<std::string>& stopwords,
                        const EntityExtractor& extractor);
std::string udels_query(const QueryTopic& topic);

/// key_conv followed by the expansions in order. Throws MissingExpansions.
std::string t5_query(const QueryTopic& topic);

/// Throws MissingTranslation.
TranslatedFields translate_query(const QueryTopic& topic, std::string_view target_lang);

/// Topic with keyword/conversational replaced by the stored translation and
/// lang set to `target_lang`. Expansions are dropped: they are written in the
/// source language. Throws MissingTranslation.
QueryTopic translated_topic(const QueryTopic& topic, std::string_view target_lang);

std::string derive_query(const QueryTopic& topic, QueryType type);

/// JSON array or JSON-lines of {topic_id, lang, keyword, conversational,
/// explanation}. Throws MalformedInput.
std::vector<QueryTopic> load_topics(const std::filesystem::path& file);

/// {"topic_id": ["generated query", ...]}
std::map<std::string, std::vector<std::string>> load_expansions(const std::filesystem::path& file);

/// {"topic_id": {"es": {"keyword": "...", "conversational": "..."}}}
std::map<std::string, std::map<std::string, TranslatedFields>> load_translations(const std::filesystem::path& file);

void attach_expansions(std::vector<QueryTopic>& topics,
                       const std::map<std::string, std::vector<std::string>>& expansions);
void attach_translations(std::vector<QueryTopic>& topics,
                         const std::map<std::string, std::map<std::string, TranslatedFields>>& translations);

}  // namespace bicross::queries
