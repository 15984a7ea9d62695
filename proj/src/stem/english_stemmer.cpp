// Generated by tools/stemgen/snowball_py2cpp.py from the Snowball english algorithm.
// Snowball is (c) Dr Martin Porter and Richard Boulton, BSD-licensed (https://snowballstem.org/).
// Do not edit by hand; regenerate instead.

#include "stem/snowball_runtime.hpp"
#include "stem/stemmers.hpp"

#pragma GCC diagnostic ignored "-Wunused-label"

namespace bicross::stem {
namespace {

const std::u32string_view g_aeo = U"aeo";
const std::u32string_view g_v = U"aeiouy";
const std::u32string_view g_v_WXY = U"Yaeiouwxy";
const std::u32string_view g_valid_LI = U"cdeghkmnrt";

const Among a_0[] = {
    {U"arsen", -1, -1},
    {U"commun", -1, -1},
    {U"emerg", -1, -1},
    {U"gener", -1, -1},
    {U"inter", -1, -1},
    {U"later", -1, -1},
    {U"organ", -1, -1},
    {U"past", -1, -1},
    {U"univers", -1, -1},
};

const Among a_1[] = {
    {U"'", -1, 1},
    {U"'s'", 0, 1},
    {U"'s", -1, 1},
};

const Among a_2[] = {
    {U"ied", -1, 2},
    {U"s", -1, 3},
    {U"ies", 1, 2},
    {U"sses", 1, 1},
    {U"ss", 1, -1},
    {U"us", 1, -1},
};

const Among a_3[] = {
    {U"succ", -1, 1},
    {U"proc", -1, 1},
    {U"exc", -1, 1},
};

const Among a_4[] = {
    {U"even", -1, 2},
    {U"cann", -1, 2},
    {U"inn", -1, 2},
    {U"earr", -1, 2},
    {U"herr", -1, 2},
    {U"out", -1, 2},
    {U"y", -1, 1},
};

const Among a_5[] = {
    {U"", -1, -1},
    {U"ed", 0, 2},
    {U"eed", 1, 1},
    {U"ing", 0, 3},
    {U"edly", 0, 2},
    {U"eedly", 4, 1},
    {U"ingly", 0, 2},
};

const Among a_6[] = {
    {U"", -1, 3},
    {U"bb", 0, 2},
    {U"dd", 0, 2},
    {U"ff", 0, 2},
    {U"gg", 0, 2},
    {U"bl", 0, 1},
    {U"mm", 0, 2},
    {U"nn", 0, 2},
    {U"pp", 0, 2},
    {U"rr", 0, 2},
    {U"at", 0, 1},
    {U"tt", 0, 2},
    {U"iz", 0, 1},
};

const Among a_7[] = {
    {U"anci", -1, 3},
    {U"enci", -1, 2},
    {U"ogi", -1, 14},
    {U"li", -1, 16},
    {U"bli", 3, 12},
    {U"abli", 4, 4},
    {U"alli", 3, 8},
    {U"fulli", 3, 9},
    {U"lessli", 3, 15},
    {U"ousli", 3, 10},
    {U"entli", 3, 5},
    {U"aliti", -1, 8},
    {U"biliti", -1, 12},
    {U"iviti", -1, 11},
    {U"tional", -1, 1},
    {U"ational", 14, 7},
    {U"alism", -1, 8},
    {U"ation", -1, 7},
    {U"ization", 17, 6},
    {U"izer", -1, 6},
    {U"ator", -1, 7},
    {U"iveness", -1, 11},
    {U"fulness", -1, 9},
    {U"ousness", -1, 10},
    {U"ogist", -1, 13},
};

const Among a_8[] = {
    {U"icate", -1, 4},
    {U"ative", -1, 6},
    {U"alize", -1, 3},
    {U"iciti", -1, 4},
    {U"ical", -1, 4},
    {U"tional", -1, 1},
    {U"ational", 5, 2},
    {U"ful", -1, 5},
    {U"ness", -1, 5},
};

const Among a_9[] = {
    {U"ic", -1, 1},
    {U"ance", -1, 1},
    {U"ence", -1, 1},
    {U"able", -1, 1},
    {U"ible", -1, 1},
    {U"ate", -1, 1},
    {U"ive", -1, 1},
    {U"ize", -1, 1},
    {U"iti", -1, 1},
    {U"al", -1, 1},
    {U"ism", -1, 1},
    {U"ion", -1, 2},
    {U"er", -1, 1},
    {U"ous", -1, 1},
    {U"ant", -1, 1},
    {U"ent", -1, 1},
    {U"ment", 15, 1},
    {U"ement", 16, 1},
};

const Among a_10[] = {
    {U"e", -1, 1},
    {U"l", -1, 2},
};

const Among a_11[] = {
    {U"andes", -1, -1},
    {U"atlas", -1, -1},
    {U"bias", -1, -1},
    {U"cosmos", -1, -1},
    {U"early", -1, 6},
    {U"gently", -1, 4},
    {U"howe", -1, -1},
    {U"idly", -1, 3},
    {U"news", -1, -1},
    {U"only", -1, 7},
    {U"singly", -1, 8},
    {U"skies", -1, 2},
    {U"skis", -1, 1},
    {U"sky", -1, -1},
    {U"ugly", -1, 5},
};

const std::u32string_view as_11[] = {U"ski", U"sky", U"idl", U"gentl", U"ugli", U"earli", U"onli", U"singl"};

class EnglishStemmer final : public SnowballBase {
public:
    std::u32string run(std::u32string word) {
        set_current(std::move(word));
        stem();
        return current;
    }

private:
    bool B_Y_found = false;
    int I_p2 = 0;
    int I_p1 = 0;

    bool r_prelude() {
        int v_1 = 0, v_2 = 0, v_3 = 0, v_4 = 0, v_5 = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        static_cast<void>(v_4);
        static_cast<void>(v_5);
        B_Y_found = false;
        v_1 = cursor;
        {
            bra = cursor;
            if (cursor == limit || current[cursor] != U'\'') {
                goto lab0_1;
            }
            cursor += 1;
            ket = cursor;
            slice_del();
        }
        lab0_1:;
        cursor = v_1;
        v_2 = cursor;
        {
            bra = cursor;
            if (cursor == limit || current[cursor] != U'y') {
                goto lab0_2;
            }
            cursor += 1;
            ket = cursor;
            slice_from(U"Y");
            B_Y_found = true;
        }
        lab0_2:;
        cursor = v_2;
        v_3 = cursor;
        {
            while (true) {
                v_4 = cursor;
                {
                    while (true) {
                        v_5 = cursor;
                        {
                            if (!in_grouping(g_v)) {
                                goto lab2_5;
                            }
                            bra = cursor;
                            if (cursor == limit || current[cursor] != U'y') {
                                goto lab2_5;
                            }
                            cursor += 1;
                            ket = cursor;
                            cursor = v_5;
                            break;
                        }
                        lab2_5:;
                        cursor = v_5;
                        if (cursor >= limit) {
                            goto lab1_4;
                        }
                        cursor += 1;
                    }
                    slice_from(U"Y");
                    B_Y_found = true;
                    continue;
                }
                lab1_4:;
                cursor = v_4;
                break;
            }
        }
        lab0_3:;
        cursor = v_3;
        return true;
    }

    bool r_mark_regions() {
        int v_1 = 0, v_2 = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        I_p1 = limit;
        I_p2 = limit;
        v_1 = cursor;
        {
            while (true) {
                v_2 = cursor;
                {
                    if (find_among(a_0) == 0) {
                        goto lab1_2;
                    }
                    break;
                }
                lab1_2:;
                cursor = v_2;
                if (!go_out_grouping(g_v)) {
                    goto lab0_1;
                }
                cursor += 1;
                if (!go_in_grouping(g_v)) {
                    goto lab0_1;
                }
                cursor += 1;
                break;
            }
            I_p1 = cursor;
            if (!go_out_grouping(g_v)) {
                goto lab0_1;
            }
            cursor += 1;
            if (!go_in_grouping(g_v)) {
                goto lab0_1;
            }
            cursor += 1;
            I_p2 = cursor;
        }
        lab0_1:;
        cursor = v_1;
        return true;
    }

    bool r_shortv() {
        int v_1 = 0;
        static_cast<void>(v_1);
        while (true) {
            v_1 = limit - cursor;
            {
                if (!out_grouping_b(g_v_WXY)) {
                    goto lab0_1;
                }
                if (!in_grouping_b(g_v)) {
                    goto lab0_1;
                }
                if (!out_grouping_b(g_v)) {
                    goto lab0_1;
                }
                break;
            }
            lab0_1:;
            cursor = limit - v_1;
            {
                if (!out_grouping_b(g_v)) {
                    goto lab0_2;
                }
                if (!in_grouping_b(g_v)) {
                    goto lab0_2;
                }
                if (cursor > limit_backward) {
                    goto lab0_2;
                }
                break;
            }
            lab0_2:;
            cursor = limit - v_1;
            if (!eq_s_b(U"past")) {
                return false;
            }
            break;
        }
        return true;
    }

    bool r_R1() {
        return I_p1 <= cursor;
    }

    bool r_R2() {
        return I_p2 <= cursor;
    }

    bool r_Step_1a() {
        int v_1 = 0, v_2 = 0, among_var = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(among_var);
        v_1 = limit - cursor;
        {
            ket = cursor;
            if (find_among_b(a_1) == 0) {
                cursor = limit - v_1;
                goto lab0_1;
            }
            bra = cursor;
            slice_del();
        }
        lab0_1:;
        ket = cursor;
        among_var = find_among_b(a_2);
        if (among_var == 0) {
            return false;
        }
        bra = cursor;
        if (among_var == 1) {
            slice_from(U"ss");
        }
        else if (among_var == 2) {
            while (true) {
                v_2 = limit - cursor;
                {
                    if (cursor - 2 < limit_backward) {
                        goto lab0_2;
                    }
                    cursor -= 2;
                    slice_from(U"i");
                    break;
                }
                lab0_2:;
                cursor = limit - v_2;
                slice_from(U"ie");
                break;
            }
        }
        else if (among_var == 3) {
            if (cursor <= limit_backward) {
                return false;
            }
            cursor -= 1;
            if (!go_out_grouping_b(g_v)) {
                return false;
            }
            cursor -= 1;
            slice_del();
        }
        return true;
    }

    bool r_Step_1b() {
        int v_1 = 0, v_2 = 0, v_3 = 0, v_4 = 0, v_5 = 0, v_6 = 0, v_7 = 0, v_8 = 0, among_var = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        static_cast<void>(v_4);
        static_cast<void>(v_5);
        static_cast<void>(v_6);
        static_cast<void>(v_7);
        static_cast<void>(v_8);
        static_cast<void>(among_var);
        ket = cursor;
        among_var = find_among_b(a_5);
        bra = cursor;
        while (true) {
            v_1 = limit - cursor;
            {
                if (among_var == 1) {
                    v_2 = limit - cursor;
                    {
                        if (!r_R1()) {
                            goto lab1_2;
                        }
                        while (true) {
                            v_3 = limit - cursor;
                            {
                                if (find_among_b(a_3) == 0) {
                                    goto lab2_3;
                                }
                                if (cursor > limit_backward) {
                                    goto lab2_3;
                                }
                                break;
                            }
                            lab2_3:;
                            cursor = limit - v_3;
                            slice_from(U"ee");
                            break;
                        }
                    }
                    lab1_2:;
                    cursor = limit - v_2;
                }
                else if (among_var == 2) {
                    goto lab0_1;
                }
                else if (among_var == 3) {
                    among_var = find_among_b(a_4);
                    if (among_var == 0) {
                        goto lab0_1;
                    }
                    if (among_var == 1) {
                        v_4 = limit - cursor;
                        if (!out_grouping_b(g_v)) {
                            goto lab0_1;
                        }
                        if (cursor > limit_backward) {
                            goto lab0_1;
                        }
                        cursor = limit - v_4;
                        bra = cursor;
                        slice_from(U"ie");
                    }
                    else {
                        if (cursor > limit_backward) {
                            goto lab0_1;
                        }
                    }
                }
                break;
            }
            lab0_1:;
            cursor = limit - v_1;
            v_5 = limit - cursor;
            if (!go_out_grouping_b(g_v)) {
                return false;
            }
            cursor -= 1;
            cursor = limit - v_5;
            slice_del();
            ket = cursor;
            bra = cursor;
            v_6 = limit - cursor;
            among_var = find_among_b(a_6);
            if (among_var == 1) {
                slice_from(U"e");
                return false;
            }
            else if (among_var == 2) {
                v_7 = limit - cursor;
                {
                    if (!in_grouping_b(g_aeo)) {
                        goto lab0_4;
                    }
                    if (cursor > limit_backward) {
                        goto lab0_4;
                    }
                    return false;
                }
                lab0_4:;
                cursor = limit - v_7;
            }
            else {
                if (cursor != I_p1) {
                    return false;
                }
                v_8 = limit - cursor;
                if (!r_shortv()) {
                    return false;
                }
                cursor = limit - v_8;
                slice_from(U"e");
                return false;
            }
            cursor = limit - v_6;
            ket = cursor;
            if (cursor <= limit_backward) {
                return false;
            }
            cursor -= 1;
            bra = cursor;
            slice_del();
            break;
        }
        return true;
    }

    bool r_Step_1c() {
        ket = cursor;
        while (true) {
            {
                if (cursor <= limit_backward || current[cursor - 1] != U'y') {
                    goto lab0_1;
                }
                cursor -= 1;
                break;
            }
            lab0_1:;
            if (cursor <= limit_backward || current[cursor - 1] != U'Y') {
                return false;
            }
            cursor -= 1;
            break;
        }
        bra = cursor;
        if (!out_grouping_b(g_v)) {
            return false;
        }
        if (cursor <= limit_backward) {
            return false;
        }
        slice_from(U"i");
        return true;
    }

    bool r_Step_2() {
        int among_var = 0;
        static_cast<void>(among_var);
        ket = cursor;
        among_var = find_among_b(a_7);
        if (among_var == 0) {
            return false;
        }
        bra = cursor;
        if (!r_R1()) {
            return false;
        }
        if (among_var == 1) {
            slice_from(U"tion");
        }
        else if (among_var == 2) {
            slice_from(U"ence");
        }
        else if (among_var == 3) {
            slice_from(U"ance");
        }
        else if (among_var == 4) {
            slice_from(U"able");
        }
        else if (among_var == 5) {
            slice_from(U"ent");
        }
        else if (among_var == 6) {
            slice_from(U"ize");
        }
        else if (among_var == 7) {
            slice_from(U"ate");
        }
        else if (among_var == 8) {
            slice_from(U"al");
        }
        else if (among_var == 9) {
            slice_from(U"ful");
        }
        else if (among_var == 10) {
            slice_from(U"ous");
        }
        else if (among_var == 11) {
            slice_from(U"ive");
        }
        else if (among_var == 12) {
            slice_from(U"ble");
        }
        else if (among_var == 13) {
            slice_from(U"og");
        }
        else if (among_var == 14) {
            if (cursor <= limit_backward || current[cursor - 1] != U'l') {
                return false;
            }
            cursor -= 1;
            slice_from(U"og");
        }
        else if (among_var == 15) {
            slice_from(U"less");
        }
        else {
            if (!in_grouping_b(g_valid_LI)) {
                return false;
            }
            slice_del();
        }
        return true;
    }

    bool r_Step_3() {
        int among_var = 0;
        static_cast<void>(among_var);
        ket = cursor;
        among_var = find_among_b(a_8);
        if (among_var == 0) {
            return false;
        }
        bra = cursor;
        if (!r_R1()) {
            return false;
        }
        if (among_var == 1) {
            slice_from(U"tion");
        }
        else if (among_var == 2) {
            slice_from(U"ate");
        }
        else if (among_var == 3) {
            slice_from(U"al");
        }
        else if (among_var == 4) {
            slice_from(U"ic");
        }
        else if (among_var == 5) {
            slice_del();
        }
        else {
            if (!r_R2()) {
                return false;
            }
            slice_del();
        }
        return true;
    }

    bool r_Step_4() {
        int among_var = 0;
        static_cast<void>(among_var);
        ket = cursor;
        among_var = find_among_b(a_9);
        if (among_var == 0) {
            return false;
        }
        bra = cursor;
        if (!r_R2()) {
            return false;
        }
        if (among_var == 1) {
            slice_del();
        }
        else {
            while (true) {
                {
                    if (cursor <= limit_backward || current[cursor - 1] != U's') {
                        goto lab0_1;
                    }
                    cursor -= 1;
                    break;
                }
                lab0_1:;
                if (cursor <= limit_backward || current[cursor - 1] != U't') {
                    return false;
                }
                cursor -= 1;
                break;
            }
            slice_del();
        }
        return true;
    }

    bool r_Step_5() {
        int v_1 = 0, among_var = 0;
        static_cast<void>(v_1);
        static_cast<void>(among_var);
        ket = cursor;
        among_var = find_among_b(a_10);
        if (among_var == 0) {
            return false;
        }
        bra = cursor;
        if (among_var == 1) {
            while (true) {
                {
                    if (!r_R2()) {
                        goto lab0_1;
                    }
                    break;
                }
                lab0_1:;
                if (!r_R1()) {
                    return false;
                }
                v_1 = limit - cursor;
                {
                    if (!r_shortv()) {
                        goto lab0_2;
                    }
                    return false;
                }
                lab0_2:;
                cursor = limit - v_1;
                break;
            }
            slice_del();
        }
        else {
            if (!r_R2()) {
                return false;
            }
            if (cursor <= limit_backward || current[cursor - 1] != U'l') {
                return false;
            }
            cursor -= 1;
            slice_del();
        }
        return true;
    }

    bool r_exception1() {
        int among_var = 0;
        static_cast<void>(among_var);
        bra = cursor;
        among_var = find_among(a_11);
        if (among_var == 0) {
            return false;
        }
        ket = cursor;
        if (cursor < limit) {
            return false;
        }
        if (among_var > 0) {
            slice_from(as_11[among_var - 1]);
        }
        return true;
    }

    bool r_postlude() {
        int v_1 = 0, v_2 = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        if (!B_Y_found) {
            return false;
        }
        while (true) {
            v_1 = cursor;
            {
                while (true) {
                    v_2 = cursor;
                    {
                        bra = cursor;
                        if (cursor == limit || current[cursor] != U'Y') {
                            goto lab1_2;
                        }
                        cursor += 1;
                        ket = cursor;
                        cursor = v_2;
                        break;
                    }
                    lab1_2:;
                    cursor = v_2;
                    if (cursor >= limit) {
                        goto lab0_1;
                    }
                    cursor += 1;
                }
                slice_from(U"y");
                continue;
            }
            lab0_1:;
            cursor = v_1;
            break;
        }
        return true;
    }

    bool stem() {
        int v_1 = 0, v_2 = 0, v_3 = 0, v_4 = 0, v_5 = 0, v_6 = 0, v_7 = 0, v_8 = 0, v_9 = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        static_cast<void>(v_4);
        static_cast<void>(v_5);
        static_cast<void>(v_6);
        static_cast<void>(v_7);
        static_cast<void>(v_8);
        static_cast<void>(v_9);
        while (true) {
            v_1 = cursor;
            {
                if (!r_exception1()) {
                    goto lab0_1;
                }
                break;
            }
            lab0_1:;
            cursor = v_1;
            {
                {
                    if (cursor + 3 > limit) {
                        goto lab1_3;
                    }
                    cursor += 3;
                    goto lab0_2;
                }
                lab1_3:;
                break;
            }
            lab0_2:;
            cursor = v_1;
            r_prelude();
            r_mark_regions();
            limit_backward = cursor;
            cursor = limit;
            v_2 = limit - cursor;
            r_Step_1a();
            cursor = limit - v_2;
            v_3 = limit - cursor;
            r_Step_1b();
            cursor = limit - v_3;
            v_4 = limit - cursor;
            r_Step_1c();
            cursor = limit - v_4;
            v_5 = limit - cursor;
            r_Step_2();
            cursor = limit - v_5;
            v_6 = limit - cursor;
            r_Step_3();
            cursor = limit - v_6;
            v_7 = limit - cursor;
            r_Step_4();
            cursor = limit - v_7;
            v_8 = limit - cursor;
            r_Step_5();
            cursor = limit - v_8;
            cursor = limit_backward;
            v_9 = cursor;
            r_postlude();
            cursor = v_9;
            break;
        }
        return true;
    }

};

}  // namespace

std::u32string stem_english(std::u32string word) {
    EnglishStemmer stemmer;
    return stemmer.run(std::move(word));
}

}  // namespace bicross::stem
