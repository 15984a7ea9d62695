#pragma once

// Minimal Snowball runtime over UTF-32 code points. Mirrors the reference
// BaseStemmer so that translated stemmers behave identically.

#include <algorithm>
#include <span>
#include <string>
#include <string_view>

namespace bicross::stem {

struct Among {
    std::u32string_view s;
    int substring_i;
    int result;
};

class SnowballBase {
protected:
    std::u32string current;
    int cursor = 0;
    int limit = 0;
    int limit_backward = 0;
    int bra = 0;
    int ket = 0;

    void set_current(std::u32string value) {
        current = std::move(value);
        cursor = 0;
        limit = static_cast<int>(current.size());
        limit_backward = 0;
        bra = cursor;
        ket = limit;
    }

    static bool member(std::u32string_view group, char32_t c) {
        return group.find(c) != std::u32string_view::npos;
    }

    bool in_grouping(std::u32string_view s) {
        if (cursor >= limit || !member(s, current[cursor])) return false;
        ++cursor;
        return true;
    }

    bool go_in_grouping(std::u32string_view s) {
        while (cursor < limit) {
            if (!member(s, current[cursor])) return true;
            ++cursor;
        }
        return false;
    }

    bool in_grouping_b(std::u32string_view s) {
        if (cursor <= limit_backward || !member(s, current[cursor - 1])) return false;
        --cursor;
        return true;
    }

    bool go_in_grouping_b(std::u32string_view s) {
        while (cursor > limit_backward) {
            if (!member(s, current[cursor - 1])) return true;
            --cursor;
        }
        return false;
    }

    bool out_grouping(std::u32string_view s) {
        if (cursor >= limit || member(s, current[cursor])) return false;
        ++cursor;
        return true;
    }

    bool go_out_grouping(std::u32string_view s) {
        while (cursor < limit) {
            if (member(s, current[cursor])) return true;
            ++cursor;
        }
        return false;
    }

    bool out_grouping_b(std::u32string_view s) {
        if (cursor <= limit_backward || member(s, current[cursor - 1])) return false;
        --cursor;
        return true;
    }

    bool go_out_grouping_b(std::u32string_view s) {
        while (cursor > limit_backward) {
            if (member(s, current[cursor - 1])) return true;
            --cursor;
        }
        return false;
    }

    bool eq_s(std::u32string_view s) {
        const int n = static_cast<int>(s.size());
        if (limit - cursor < n) return false;
        if (std::u32string_view(current).substr(cursor, n) != s) return false;
        cursor += n;
        return true;
    }

    bool eq_s_b(std::u32string_view s) {
        const int n = static_cast<int>(s.size());
        if (cursor - limit_backward < n) return false;
        if (std::u32string_view(current).substr(cursor - n, n) != s) return false;
        cursor -= n;
        return true;
    }

    int find_among(std::span<const Among> v) {
        int i = 0;
        int j = static_cast<int>(v.size());
        const int c = cursor;
        const int l = limit;
        int common_i = 0;
        int common_j = 0;
        bool first_key_inspected = false;
        while (true) {
            const int k = i + ((j - i) >> 1);
            int diff = 0;
            int common = std::min(common_i, common_j);
            const Among& w = v[k];
            for (int i2 = common; i2 < static_cast<int>(w.s.size()); ++i2) {
                if (c + common == l) {
                    diff = -1;
                    break;
                }
                diff = static_cast<int>(current[c + common]) - static_cast<int>(w.s[i2]);
                if (diff != 0) break;
                ++common;
            }
            if (diff < 0) {
                j = k;
                common_j = common;
            } else {
                i = k;
                common_i = common;
            }
            if (j - i <= 1) {
                if (i > 0) break;
                if (j == i) break;
                if (first_key_inspected) break;
                first_key_inspected = true;
            }
        }
        while (true) {
            const Among& w = v[i];
            if (common_i >= static_cast<int>(w.s.size())) {
                cursor = c + static_cast<int>(w.s.size());
                return w.result;
            }
            i = w.substring_i;
            if (i < 0) return 0;
        }
    }

    int find_among_b(std::span<const Among> v) {
        int i = 0;
        int j = static_cast<int>(v.size());
        const int c = cursor;
        const int lb = limit_backward;
        int common_i = 0;
        int common_j = 0;
        bool first_key_inspected = false;
        while (true) {
            const int k = i + ((j - i) >> 1);
            int diff = 0;
            int common = std::min(common_i, common_j);
            const Among& w = v[k];
            for (int i2 = static_cast<int>(w.s.size()) - 1 - common; i2 >= 0; --i2) {
                if (c - common == lb) {
                    diff = -1;
                    break;
                }
                diff = static_cast<int>(current[c - 1 - common]) - static_cast<int>(w.s[i2]);
                if (diff != 0) break;
                ++common;
            }
            if (diff < 0) {
                j = k;
                common_j = common;
            } else {
                i = k;
                common_i = common;
            }
            if (j - i <= 1) {
                if (i > 0) break;
                if (j == i) break;
                if (first_key_inspected) break;
                first_key_inspected = true;
            }
        }
        while (true) {
            const Among& w = v[i];
            if (common_i >= static_cast<int>(w.s.size())) {
                cursor = c - static_cast<int>(w.s.size());
                return w.result;
            }
            i = w.substring_i;
            if (i < 0) return 0;
        }
    }

    int replace_s(int c_bra, int c_ket, std::u32string_view s) {
        const int adjustment = static_cast<int>(s.size()) - (c_ket - c_bra);
        current.replace(c_bra, c_ket - c_bra, s);
        limit += adjustment;
        if (cursor >= c_ket) {
            cursor += adjustment;
        } else if (cursor > c_bra) {
            cursor = c_bra;
        }
        return adjustment;
    }

    void slice_from(std::u32string_view s) {
        replace_s(bra, ket, s);
        ket = bra + static_cast<int>(s.size());
    }

    void slice_del() { slice_from(U""); }

    void insert(int c_bra, int c_ket, std::u32string_view s) {
        const int adjustment = replace_s(c_bra, c_ket, s);
        if (c_bra <= bra) bra += adjustment;
        if (c_bra <= ket) ket += adjustment;
    }
};

}  // namespace bicross::stem
