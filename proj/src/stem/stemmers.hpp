#pragma once

#include <string>

namespace bicross::stem {

std::u32string stem_english(std::u32string word);
std::u32string stem_spanish(std::u32string word);
std::u32string stem_french(std::u32string word);
std::u32string stem_german(std::u32string word);

}  // namespace bicross::stem
