#include <string>
#include <unordered_set>

#include "bicross/corpus.hpp"
#include "bicross/error.hpp"
#include "bicross/text.hpp"

namespace bicross::corpus {
namespace {

const std::unordered_set<std::u32string>& abbreviations(std::string_view lang) {
    static const std::unordered_set<std::u32string> en = {
        U"mr", U"mrs", U"ms", U"dr", U"prof", U"sr", U"jr", U"st", U"vs", U"inc", U"ltd", U"corp",
        U"fig", U"approx", U"dept", U"gov", U"gen", U"jan", U"feb", U"mar", U"apr", U"jun", U"jul",
        U"aug", U"sep", U"sept", U"oct", U"nov", U"dec", U"mt", U"rev", U"capt", U"col", U"lt", U"sgt"};
    static const std::unordered_set<std::u32string> es = {
        U"sr", U"sra", U"srta", U"dr", U"dra", U"prof", U"lic", U"ing", U"av", U"avda", U"pág",
        U"núm", U"ej", U"aprox", U"ud", U"uds", U"vd", U"dña", U"sto", U"sta"};
    static const std::unordered_set<std::u32string> fr = {
        U"m", U"mm", U"mme", U"mlle", U"dr", U"pr", U"prof", U"av", U"bd", U"st", U"ste", U"cf",
        U"ex", U"env", U"art", U"chap", U"vol"};
    static const std::unordered_set<std::u32string> de = {
        U"dr", U"prof", U"nr", U"bzw", U"ca", U"usw", U"evtl", U"ggf", U"inkl", U"str", U"vgl",
        U"hr", U"fr", U"abs", U"bsp", U"jh", U"mio", U"mrd", U"tel"};
    if (lang == "en") return en;
    if (lang == "es") return es;
    if (lang == "fr") return fr;
    if (lang == "de") return de;
    throw Error(ErrorCode::UnsupportedLanguage, "no sentence rules for language '" + std::string(lang) + "'");
}

bool is_terminator(char32_t cp) noexcept {
    return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026 || cp == 0x203C;
}

bool is_closer(char32_t cp) noexcept {
    switch (cp) {
        case U'"': case U'\'': case U')': case U']': case U'}':
        case 0xBB: case 0x201D: case 0x2019:
            return true;
        default:
            return false;
    }
}

// "e.g", "u.s", "z.b": dotted single-letter groups.
bool is_dotted_initialism(std::u32string_view word) {
    if (word.find(U'.') == std::u32string_view::npos) return false;
    std::size_t run = 0;
    for (char32_t cp : word) {
        if (cp == U'.') {
            if (run != 1) return false;
            run = 0;
        } else if (text::is_letter(cp)) {
            ++run;
        } else {
            return false;
        }
    }
    return run == 1;
}

std::string trimmed_segment(const std::u32string& cps, std::size_t b, std::size_t e) {
    while (b < e && text::is_space(cps[b])) ++b;
    while (e > b && text::is_space(cps[e - 1])) --e;
    return text::encode_utf8(std::u32string_view(cps).substr(b, e - b));
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view input, std::string_view lang) {
    const auto& abbrev = abbreviations(lang);
    const std::u32string cps = text::decode_utf8(input);
    const std::size_t n = cps.size();
    std::vector<std::string> out;
    std::size_t seg_start = 0;
    std::size_t i = 0;
    while (i < n) {
        if (!is_terminator(cps[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && is_terminator(cps[j])) ++j;
        const std::size_t run = j - i;
        while (j < n && is_closer(cps[j])) ++j;
        bool boundary = j == n || text::is_space(cps[j]);
        if (boundary && run == 1 && cps[i] == U'.') {
            std::size_t k = i;
            while (k > seg_start && !text::is_space(cps[k - 1])) --k;
            while (k < i && !text::is_letter(cps[k]) && !text::is_digit(cps[k])) ++k;
            std::u32string word;
            for (std::size_t p = k; p < i; ++p) word.push_back(text::to_lower(cps[p]));
            if (abbrev.contains(word) || is_dotted_initialism(word)) boundary = false;
            if (boundary) {
                std::size_t q = j;
                while (q < n && text::is_space(cps[q])) ++q;
                if (q < n && text::is_letter(cps[q]) && !text::is_upper(cps[q]) &&
                    text::to_lower(cps[q]) == cps[q] && cps[q] < 0x3040) {
                    boundary = false;
                }
            }
        }
        if (boundary) {
            std::string seg = trimmed_segment(cps, seg_start, j);
            if (!seg.empty()) out.push_back(std::move(seg));
            seg_start = j;
        }
        i = j;
    }
    std::string tail = trimmed_segment(cps, seg_start, n);
    if (!tail.empty()) out.push_back(std::move(tail));
    return out;
}

}  // namespace bicross::corpus
