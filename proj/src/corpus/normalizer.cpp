#include <functional>
#include <memory>
#include <string>
#include <unordered_set>

#include "bicross/corpus.hpp"
#include "bicross/error.hpp"
#include "bicross/text.hpp"
#include "stem/stemmers.hpp"

namespace bicross::corpus {
namespace {

using StemFn = std::u32string (*)(std::u32string);

StemFn stemmer_for(std::string_view lang) {
    if (lang == "en") return &stem::stem_english;
    if (lang == "es") return &stem::stem_spanish;
    if (lang == "fr") return &stem::stem_french;
    if (lang == "de") return &stem::stem_german;
    throw Error(ErrorCode::UnsupportedLanguage, "no stemmer for language '" + std::string(lang) + "'");
}

class SnowballNormalizer final : public Normalizer {
public:
    explicit SnowballNormalizer(std::string lang)
        : lang_(std::move(lang)), stopwords_(stopwords(lang_)), stem_(stemmer_for(lang_)) {}

    std::string_view lang() const noexcept override { return lang_; }

    std::vector<std::string> normalize(std::string_view input) const override {
        std::vector<std::string> out;
        for (std::string& word : text::word_tokens(input)) {
            std::string lower = text::to_lower(word);
            if (lang_ == "fr") {
                // Elided articles and pronouns ("l'", "qu'") become their own tokens.
                std::size_t start = 0;
                std::size_t pos;
                while ((pos = lower.find('\'', start)) != std::string::npos) {
                    emit(lower.substr(start, pos - start), out);
                    start = pos + 1;
                }
                emit(lower.substr(start), out);
            } else {
                emit(std::move(lower), out);
            }
        }
        return out;
    }

private:
    void emit(std::string lower, std::vector<std::string>& out) const {
        if (lower.empty() || stopwords_.contains(lower)) return;
        std::string stemmed = text::encode_utf8(stem_(text::decode_utf8(lower)));
        if (!stemmed.empty()) out.push_back(std::move(stemmed));
    }

    std::string lang_;
    const std::unordered_set<std::string>& stopwords_;
    StemFn stem_;
};

}  // namespace

std::shared_ptr<const Normalizer> default_normalizer(std::string_view lang) {
    static const auto en = std::make_shared<const SnowballNormalizer>("en");
    static const auto es = std::make_shared<const SnowballNormalizer>("es");
    static const auto fr = std::make_shared<const SnowballNormalizer>("fr");
    static const auto de = std::make_shared<const SnowballNormalizer>("de");
    if (lang == "en") return en;
    if (lang == "es") return es;
    if (lang == "fr") return fr;
    if (lang == "de") return de;
    throw Error(ErrorCode::UnsupportedLanguage, "no normalizer for language '" + std::string(lang) + "'");
}

std::string stem_word(std::string_view word, std::string_view lang) {
    return text::encode_utf8(stemmer_for(lang)(text::decode_utf8(word)));
}

std::vector<std::string> normalize_tokens(std::string_view input, std::string_view lang) {
    return default_normalizer(lang)->normalize(input);
}

}  // namespace bicross::corpus
