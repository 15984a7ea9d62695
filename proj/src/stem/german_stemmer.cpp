// Generated by tools/stemgen/snowball_py2cpp.py from the Snowball german algorithm.
// Snowball is (c) Dr Martin Porter and Richard Boulton, BSD-licensed (https://snowballstem.org/).
// Do not edit by hand; regenerate instead.

#include "stem/snowball_runtime.hpp"
#include "stem/stemmers.hpp"

#pragma GCC diagnostic ignored "-Wunused-label"

namespace bicross::stem {
namespace {

const std::u32string_view g_v = U"aeiouyäöü";
const std::u32string_view g_et_ending = U"Udfgklmnrstzä";
const std::u32string_view g_s_ending = U"bdfghklmnrt";
const std::u32string_view g_st_ending = U"bdfghklmnt";

const Among a_0[] = {
    {U"", -1, 5},
    {U"ae", 0, 2},
    {U"oe", 0, 3},
    {U"qu", 0, -1},
    {U"ue", 0, 4},
    {U"ß", 0, 1},
};

const Among a_1[] = {
    {U"", -1, 5},
    {U"U", 0, 2},
    {U"Y", 0, 1},
    {U"ä", 0, 3},
    {U"ö", 0, 4},
    {U"ü", 0, 2},
};

const Among a_2[] = {
    {U"e", -1, 3},
    {U"em", -1, 1},
    {U"en", -1, 3},
    {U"erinnen", 2, 2},
    {U"erin", -1, 2},
    {U"ln", -1, 5},
    {U"ern", -1, 2},
    {U"er", -1, 2},
    {U"s", -1, 4},
    {U"es", 8, 3},
    {U"lns", 8, 5},
};

const Among a_3[] = {
    {U"tick", -1, -1},
    {U"plan", -1, -1},
    {U"geordn", -1, -1},
    {U"intern", -1, -1},
    {U"tr", -1, -1},
};

const Among a_4[] = {
    {U"en", -1, 1},
    {U"er", -1, 1},
    {U"et", -1, 3},
    {U"st", -1, 2},
    {U"est", 3, 1},
};

const Among a_5[] = {
    {U"ig", -1, 1},
    {U"lich", -1, 1},
};

const Among a_6[] = {
    {U"end", -1, 1},
    {U"ig", -1, 2},
    {U"ung", -1, 1},
    {U"lich", -1, 3},
    {U"isch", -1, 2},
    {U"ik", -1, 2},
    {U"heit", -1, 3},
    {U"keit", -1, 4},
};

const Among a_7[] = {
    {U"'", -1, 1},
    {U"'sch", -1, 1},
    {U"'s", -1, 1},
};

class GermanStemmer final : public SnowballBase {
public:
    std::u32string run(std::u32string word) {
        set_current(std::move(word));
        stem();
        return current;
    }

private:
    int I_p2 = 0;
    int I_p1 = 0;

    bool r_prelude() {
        int v_1 = 0, v_2 = 0, v_3 = 0, v_4 = 0, v_5 = 0, among_var = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        static_cast<void>(v_4);
        static_cast<void>(v_5);
        static_cast<void>(among_var);
        v_1 = cursor;
        while (true) {
            v_2 = cursor;
            {
                while (true) {
                    v_3 = cursor;
                    {
                        if (!in_grouping(g_v)) {
                            goto lab1_2;
                        }
                        bra = cursor;
                        while (true) {
                            v_4 = cursor;
                            {
                                if (cursor == limit || current[cursor] != U'u') {
                                    goto lab2_3;
                                }
                                cursor += 1;
                                ket = cursor;
                                if (!in_grouping(g_v)) {
                                    goto lab2_3;
                                }
                                slice_from(U"U");
                                break;
                            }
                            lab2_3:;
                            cursor = v_4;
                            if (cursor == limit || current[cursor] != U'y') {
                                goto lab1_2;
                            }
                            cursor += 1;
                            ket = cursor;
                            if (!in_grouping(g_v)) {
                                goto lab1_2;
                            }
                            slice_from(U"Y");
                            break;
                        }
                        cursor = v_3;
                        break;
                    }
                    lab1_2:;
                    cursor = v_3;
                    if (cursor >= limit) {
                        goto lab0_1;
                    }
                    cursor += 1;
                }
                continue;
            }
            lab0_1:;
            cursor = v_2;
            break;
        }
        cursor = v_1;
        while (true) {
            v_5 = cursor;
            {
                bra = cursor;
                among_var = find_among(a_0);
                ket = cursor;
                if (among_var == 1) {
                    slice_from(U"ss");
                }
                else if (among_var == 2) {
                    slice_from(U"ä");
                }
                else if (among_var == 3) {
                    slice_from(U"ö");
                }
                else if (among_var == 4) {
                    slice_from(U"ü");
                }
                else if (among_var == 5) {
                    if (cursor >= limit) {
                        goto lab0_4;
                    }
                    cursor += 1;
                }
                continue;
            }
            lab0_4:;
            cursor = v_5;
            break;
        }
        return true;
    }

    bool r_mark_regions() {
        int v_1 = 0, I_x = 0;
        static_cast<void>(v_1);
        static_cast<void>(I_x);
        I_p1 = limit;
        I_p2 = limit;
        v_1 = cursor;
        if (cursor + 3 > limit) {
            return false;
        }
        cursor += 3;
        I_x = cursor;
        cursor = v_1;
        if (!go_out_grouping(g_v)) {
            return false;
        }
        cursor += 1;
        if (!go_in_grouping(g_v)) {
            return false;
        }
        cursor += 1;
        I_p1 = cursor;
        {
            if (I_p1 >= I_x) {
                goto lab0_1;
            }
            I_p1 = I_x;
        }
        lab0_1:;
        if (!go_out_grouping(g_v)) {
            return false;
        }
        cursor += 1;
        if (!go_in_grouping(g_v)) {
            return false;
        }
        cursor += 1;
        I_p2 = cursor;
        return true;
    }

    bool r_postlude() {
        int v_1 = 0, among_var = 0;
        static_cast<void>(v_1);
        static_cast<void>(among_var);
        while (true) {
            v_1 = cursor;
            {
                bra = cursor;
                among_var = find_among(a_1);
                ket = cursor;
                if (among_var == 1) {
                    slice_from(U"y");
                }
                else if (among_var == 2) {
                    slice_from(U"u");
                }
                else if (among_var == 3) {
                    slice_from(U"a");
                }
                else if (among_var == 4) {
                    slice_from(U"o");
                }
                else {
                    if (cursor >= limit) {
                        goto lab0_1;
                    }
                    cursor += 1;
                }
                continue;
            }
            lab0_1:;
            cursor = v_1;
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

    bool r_standard_suffix() {
        int v_1 = 0, v_2 = 0, v_3 = 0, v_4 = 0, v_5 = 0, v_6 = 0, v_7 = 0, v_8 = 0, v_9 = 0, v_10 = 0, among_var = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        static_cast<void>(v_4);
        static_cast<void>(v_5);
        static_cast<void>(v_6);
        static_cast<void>(v_7);
        static_cast<void>(v_8);
        static_cast<void>(v_9);
        static_cast<void>(v_10);
        static_cast<void>(among_var);
        v_1 = limit - cursor;
        {
            ket = cursor;
            among_var = find_among_b(a_2);
            if (among_var == 0) {
                goto lab0_1;
            }
            bra = cursor;
            if (!r_R1()) {
                goto lab0_1;
            }
            if (among_var == 1) {
                {
                    if (!eq_s_b(U"syst")) {
                        goto lab1_2;
                    }
                    goto lab0_1;
                }
                lab1_2:;
                slice_del();
            }
            else if (among_var == 2) {
                slice_del();
            }
            else if (among_var == 3) {
                slice_del();
                v_2 = limit - cursor;
                {
                    ket = cursor;
                    if (cursor <= limit_backward || current[cursor - 1] != U's') {
                        cursor = limit - v_2;
                        goto lab1_3;
                    }
                    cursor -= 1;
                    bra = cursor;
                    if (!eq_s_b(U"nis")) {
                        cursor = limit - v_2;
                        goto lab1_3;
                    }
                    slice_del();
                }
                lab1_3:;
            }
            else if (among_var == 4) {
                if (!in_grouping_b(g_s_ending)) {
                    goto lab0_1;
                }
                slice_del();
            }
            else {
                slice_from(U"l");
            }
        }
        lab0_1:;
        cursor = limit - v_1;
        v_3 = limit - cursor;
        {
            ket = cursor;
            among_var = find_among_b(a_4);
            if (among_var == 0) {
                goto lab0_4;
            }
            bra = cursor;
            if (!r_R1()) {
                goto lab0_4;
            }
            if (among_var == 1) {
                slice_del();
            }
            else if (among_var == 2) {
                if (!in_grouping_b(g_st_ending)) {
                    goto lab0_4;
                }
                if (cursor - 3 < limit_backward) {
                    goto lab0_4;
                }
                cursor -= 3;
                slice_del();
            }
            else {
                v_4 = limit - cursor;
                if (!in_grouping_b(g_et_ending)) {
                    goto lab0_4;
                }
                cursor = limit - v_4;
                v_5 = limit - cursor;
                {
                    if (find_among_b(a_3) == 0) {
                        goto lab1_5;
                    }
                    goto lab0_4;
                }
                lab1_5:;
                cursor = limit - v_5;
                slice_del();
            }
        }
        lab0_4:;
        cursor = limit - v_3;
        v_6 = limit - cursor;
        {
            ket = cursor;
            among_var = find_among_b(a_6);
            if (among_var == 0) {
                goto lab0_6;
            }
            bra = cursor;
            if (!r_R2()) {
                goto lab0_6;
            }
            if (among_var == 1) {
                slice_del();
                v_7 = limit - cursor;
                {
                    ket = cursor;
                    if (!eq_s_b(U"ig")) {
                        cursor = limit - v_7;
                        goto lab1_7;
                    }
                    bra = cursor;
                    {
                        if (cursor <= limit_backward || current[cursor - 1] != U'e') {
                            goto lab2_8;
                        }
                        cursor -= 1;
                        cursor = limit - v_7;
                        goto lab1_7;
                    }
                    lab2_8:;
                    if (!r_R2()) {
                        cursor = limit - v_7;
                        goto lab1_7;
                    }
                    slice_del();
                }
                lab1_7:;
            }
            else if (among_var == 2) {
                {
                    if (cursor <= limit_backward || current[cursor - 1] != U'e') {
                        goto lab1_9;
                    }
                    cursor -= 1;
                    goto lab0_6;
                }
                lab1_9:;
                slice_del();
            }
            else if (among_var == 3) {
                slice_del();
                v_8 = limit - cursor;
                {
                    ket = cursor;
                    while (true) {
                        {
                            if (!eq_s_b(U"er")) {
                                goto lab2_11;
                            }
                            break;
                        }
                        lab2_11:;
                        if (!eq_s_b(U"en")) {
                            cursor = limit - v_8;
                            goto lab1_10;
                        }
                        break;
                    }
                    bra = cursor;
                    if (!r_R1()) {
                        cursor = limit - v_8;
                        goto lab1_10;
                    }
                    slice_del();
                }
                lab1_10:;
            }
            else {
                slice_del();
                v_9 = limit - cursor;
                {
                    ket = cursor;
                    if (find_among_b(a_5) == 0) {
                        cursor = limit - v_9;
                        goto lab1_12;
                    }
                    bra = cursor;
                    if (!r_R2()) {
                        cursor = limit - v_9;
                        goto lab1_12;
                    }
                    slice_del();
                }
                lab1_12:;
            }
        }
        lab0_6:;
        cursor = limit - v_6;
        v_10 = limit - cursor;
        {
            ket = cursor;
            if (find_among_b(a_7) == 0) {
                goto lab0_13;
            }
            bra = cursor;
            if (cursor <= limit_backward) {
                goto lab0_13;
            }
            cursor -= 1;
            if (cursor <= limit_backward) {
                goto lab0_13;
            }
            slice_del();
        }
        lab0_13:;
        cursor = limit - v_10;
        return true;
    }

    bool stem() {
        int v_1 = 0, v_2 = 0, v_3 = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        v_1 = cursor;
        r_prelude();
        cursor = v_1;
        v_2 = cursor;
        r_mark_regions();
        cursor = v_2;
        limit_backward = cursor;
        cursor = limit;
        r_standard_suffix();
        cursor = limit_backward;
        v_3 = cursor;
        r_postlude();
        cursor = v_3;
        return true;
    }

};

}  // namespace

std::u32string stem_german(std::u32string word) {
    GermanStemmer stemmer;
    return stemmer.run(std::move(word));
}

}  // namespace bicross::stem
