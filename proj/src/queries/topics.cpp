#include <fstream>
#include <sstream>
#include <unordered_map>

#include "bicross/corpus.hpp"
#include "bicross/error.hpp"
#include "bicross/queries.hpp"
#include "bicross/text.hpp"
#include "json.hpp"

namespace bicross::queries {

using nlohmann::json;

std::string_view to_string(QueryType type) noexcept {
    switch (type) {
        case QueryType::key_conv: return "key_conv";
        case QueryType::udels: return "udels";
        case QueryType::t5: return "t5";
    }
    return "unknown";
}

QueryType parse_query_type(std::string_view name) {
    if (name == "key_conv") return QueryType::key_conv;
    if (name == "udels") return QueryType::udels;
    if (name == "t5" || name == "t5_query") return QueryType::t5;
    throw Error(ErrorCode::InvalidArgument, "unknown query type '" + std::string(name) + "'");
}

namespace {

const std::unordered_set<std::string>& lexicon(std::string_view lang) {
    auto stems = [](std::string_view l, std::initializer_list<std::string_view> words) {
        std::unordered_set<std::string> out;
        for (std::string_view w : words) out.insert(corpus::stem_word(text::to_lower(w), l));
        return out;
    };
    static const auto en = stems(
        "en", {"coronavirus", "covid", "sars", "mers", "virus", "pandemic", "epidemic", "outbreak", "vaccine",
               "vaccination", "immunity", "immune", "antibody", "infection", "infect", "transmission", "transmit",
               "contagious", "spread", "symptom", "asymptomatic", "incubation", "fever", "cough", "pneumonia",
               "respiratory", "mask", "quarantine", "lockdown", "isolation", "distancing", "ventilator",
               "hospital", "patient", "treatment", "therapy", "drug", "medicine", "clinical", "trial",
               "hydroxychloroquine", "chloroquine", "remdesivir", "ibuprofen", "kill", "disinfect",
               "disinfectant", "sanitizer", "effective", "efficacy", "risk", "mortality", "death", "disease"});
    static const auto es = stems(
        "es", {"coronavirus", "covid", "virus", "pandemia", "epidemia", "brote", "vacuna", "inmunidad",
               "anticuerpo", "infección", "contagio", "transmisión", "síntoma", "fiebre", "tos", "neumonía",
               "mascarilla", "cuarentena", "confinamiento", "hospital", "paciente", "tratamiento", "fármaco",
               "medicamento", "matar", "desinfectante", "eficaz", "efectivo", "riesgo", "mortalidad",
               "enfermedad"});
    static const auto fr = stems(
        "fr", {"coronavirus", "covid", "virus", "pandémie", "épidémie", "vaccin", "immunité", "anticorps",
               "infection", "contagion", "transmission", "symptôme", "fièvre", "toux", "pneumonie", "masque",
               "quarantaine", "confinement", "hôpital", "patient", "traitement", "médicament", "tuer",
               "désinfectant", "efficace", "risque", "mortalité", "maladie"});
    static const auto de = stems(
        "de", {"coronavirus", "covid", "virus", "pandemie", "epidemie", "impfstoff", "impfung", "immunität",
               "antikörper", "infektion", "ansteckung", "übertragung", "symptom", "fieber", "husten",
               "lungenentzündung", "maske", "quarantäne", "krankenhaus", "patient", "behandlung",
               "medikament", "töten", "desinfektionsmittel", "wirksam", "risiko", "sterblichkeit", "krankheit"});
    if (lang == "en") return en;
    if (lang == "es") return es;
    if (lang == "fr") return fr;
    if (lang == "de") return de;
    throw Error(ErrorCode::UnsupportedLanguage, "no entity lexicon for language '" + std::string(lang) + "'");
}

bool ends_sentence(std::string_view piece) {
    while (!piece.empty() && (piece.back() == '"' || piece.back() == '\'' || piece.back() == ')')) {
        piece.remove_suffix(1);
    }
    return !piece.empty() && (piece.back() == '.' || piece.back() == '?' || piece.back() == '!');
}

std::string required_string(const json& j, const char* key, std::string_view where) {
    if (!j.contains(key) || !j[key].is_string()) {
        throw Error(ErrorCode::MalformedInput, std::string(where) + ": missing string field '" + key + "'");
    }
    return j[key].get<std::string>();
}

json parse_json_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + file.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedInput, file.string() + ": " + e.what());
    }
}

}  // namespace

std::vector<std::string> HeuristicEntityExtractor::extract(std::string_view input, std::string_view lang) const {
    const auto& stop = corpus::stopwords(lang);
    const auto& terms = lexicon(lang);
    std::vector<std::string> out;
    bool sentence_start = true;
    for (const std::string& piece : text::split_whitespace(input)) {
        const auto surface = text::surface_tokens(piece);
        const bool at_start = sentence_start;
        sentence_start = ends_sentence(piece);
        if (surface.empty()) continue;
        const std::string& tok = surface.front();
        const std::string lower = text::to_lower(tok);
        if (stop.contains(lower)) continue;
        const std::u32string cps = text::decode_utf8(tok);
        bool letters = false;
        bool digits = false;
        for (char32_t cp : cps) {
            letters |= text::is_letter(cp);
            digits |= text::is_digit(cp);
        }
        const bool capitalized = !at_start && text::is_upper(cps.front());
        const bool mixed = letters && digits;
        if (capitalized || mixed || terms.contains(corpus::stem_word(lower, lang))) out.push_back(tok);
    }
    return out;
}

const EntityExtractor& default_entity_extractor() {
    static const HeuristicEntityExtractor extractor;
    return extractor;
}

std::string key_conv(const QueryTopic& topic) { return topic.keyword + " " + topic.conversational; }

std::string udels_query(const QueryTopic& topic, const std::unordered_set<std::string>& stopwords,
                        const EntityExtractor& extractor) {
    if (!corpus::is_supported_language(topic.lang)) {
        throw Error(ErrorCode::UnsupportedLanguage, "unsupported topic language '" + topic.lang + "'");
    }
    std::vector<std::string> parts;
    for (std::string& tok : text::surface_tokens(topic.keyword)) {
        if (!stopwords.contains(text::to_lower(tok))) parts.push_back(std::move(tok));
    }
    for (std::string& tok : extractor.extract(topic.conversational, topic.lang)) parts.push_back(std::move(tok));
    return text::join(parts, " ");
}

std::string udels_query(const QueryTopic& topic) {
    return udels_query(topic, corpus::stopwords(topic.lang), default_entity_extractor());
}

std::string t5_query(const QueryTopic& topic) {
    if (topic.expansions.empty()) {
        throw Error(ErrorCode::MissingExpansions, "topic " + topic.topic_id + " has no expansions");
    }
    return key_conv(topic) + " " + text::join(topic.expansions, " ");
}

TranslatedFields translate_query(const QueryTopic& topic, std::string_view target_lang) {
    const auto it = topic.translations.find(std::string(target_lang));
    if (it == topic.translations.end()) {
        throw Error(ErrorCode::MissingTranslation,
                    "topic " + topic.topic_id + " has no '" + std::string(target_lang) + "' translation");
    }
    return it->second;
}

QueryTopic translated_topic(const QueryTopic& topic, std::string_view target_lang) {
    const TranslatedFields fields = translate_query(topic, target_lang);
    QueryTopic out = topic;
    out.lang = std::string(target_lang);
    out.keyword = fields.keyword;
    out.conversational = fields.conversational;
    out.expansions.clear();
    return out;
}

std::string derive_query(const QueryTopic& topic, QueryType type) {
    switch (type) {
        case QueryType::key_conv: return key_conv(topic);
        case QueryType::udels: return udels_query(topic);
        case QueryType::t5: return t5_query(topic);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown query type");
}

std::vector<QueryTopic> load_topics(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string content = buf.str();
    const std::string_view body = text::trim(content);

    std::vector<json> records;
    try {
        if (!body.empty() && body.front() == '[') {
            for (const json& j : json::parse(body)) records.push_back(j);
        } else {
            std::istringstream lines(content);
            std::string line;
            while (std::getline(lines, line)) {
                if (!text::trim(line).empty()) records.push_back(json::parse(line));
            }
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedInput, file.string() + ": " + e.what());
    }

    std::vector<QueryTopic> topics;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const json& j = records[i];
        const std::string where = file.string() + " record " + std::to_string(i + 1);
        if (!j.is_object()) throw Error(ErrorCode::MalformedInput, where + ": expected an object");
        QueryTopic t;
        if (j.contains("topic_id") && j["topic_id"].is_number_integer()) {
            t.topic_id = std::to_string(j["topic_id"].get<long long>());
        } else {
            t.topic_id = required_string(j, "topic_id", where);
        }
        t.lang = required_string(j, "lang", where);
        t.keyword = std::string(text::trim(required_string(j, "keyword", where)));
        t.conversational = std::string(text::trim(required_string(j, "conversational", where)));
        if (j.contains("explanation") && j["explanation"].is_string()) t.explanation = j["explanation"];
        if (t.topic_id.empty() || t.keyword.empty() || t.conversational.empty()) {
            throw Error(ErrorCode::MalformedInput, where + ": topic_id, keyword and conversational must be non-empty");
        }
        if (!seen.insert(t.topic_id).second) {
            throw Error(ErrorCode::MalformedInput, where + ": duplicate topic_id " + t.topic_id);
        }
        topics.push_back(std::move(t));
    }
    return topics;
}

std::map<std::string, std::vector<std::string>> load_expansions(const std::filesystem::path& file) {
    const json j = parse_json_file(file);
    if (!j.is_object()) throw Error(ErrorCode::MalformedInput, file.string() + ": expected an object");
    std::map<std::string, std::vector<std::string>> out;
    try {
        for (const auto& [id, list] : j.items()) out[id] = list.get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedInput, file.string() + ": " + e.what());
    }
    return out;
}

std::map<std::string, std::map<std::string, TranslatedFields>> load_translations(const std::filesystem::path& file) {
    const json j = parse_json_file(file);
    if (!j.is_object()) throw Error(ErrorCode::MalformedInput, file.string() + ": expected an object");
    std::map<std::string, std::map<std::string, TranslatedFields>> out;
    for (const auto& [id, langs] : j.items()) {
        if (!langs.is_object()) throw Error(ErrorCode::MalformedInput, file.string() + ": topic " + id);
        for (const auto& [lang, fields] : langs.items()) {
            const std::string where = file.string() + ": " + id + "/" + lang;
            if (!fields.is_object()) throw Error(ErrorCode::MalformedInput, where);
            out[id][lang] = {required_string(fields, "keyword", where), required_string(fields, "conversational", where)};
        }
    }
    return out;
}

void attach_expansions(std::vector<QueryTopic>& topics,
                       const std::map<std::string, std::vector<std::string>>& expansions) {
    for (QueryTopic& t : topics) {
        if (const auto it = expansions.find(t.topic_id); it != expansions.end()) t.expansions = it->second;
    }
}

void attach_translations(std::vector<QueryTopic>& topics,
                         const std::map<std::string, std::map<std::string, TranslatedFields>>& translations) {
    for (QueryTopic& t : topics) {
        if (const auto it = translations.find(t.topic_id); it != translations.end()) t.translations = it->second;
    }
}

}  // namespace bicross::queries
