// Generated by tools/stemgen/snowball_py2cpp.py from the Snowball french algorithm.
// Snowball is (c) Dr Martin Porter and Richard Boulton, BSD-licensed (https://snowballstem.org/).
// Do not edit by hand; regenerate instead.

#include "stem/snowball_runtime.hpp"
#include "stem/stemmers.hpp"

#pragma GCC diagnostic ignored "-Wunused-label"

namespace bicross::stem {
namespace {

const std::u32string_view g_v = U"aeiouyàâèéêëîïôùû";
const std::u32string_view g_oux_ending = U"bhjlnp";
const std::u32string_view g_elision_char = U"cdjlmnst";
const std::u32string_view g_keep_with_s = U"aiosuè";

const Among a_0[] = {
    {U"col", -1, -1},
    {U"ni", -1, 1},
    {U"par", -1, -1},
    {U"tap", -1, -1},
};

const Among a_1[] = {
    {U"", -1, 7},
    {U"H", 0, 6},
    {U"He", 1, 4},
    {U"Hi", 1, 5},
    {U"I", 0, 1},
    {U"U", 0, 2},
    {U"Y", 0, 3},
};

const Among a_2[] = {
    {U"iqU", -1, 3},
    {U"abl", -1, 3},
    {U"Ièr", -1, 4},
    {U"ièr", -1, 4},
    {U"eus", -1, 2},
    {U"iv", -1, 1},
};

const Among a_3[] = {
    {U"ic", -1, 2},
    {U"abil", -1, 1},
    {U"iv", -1, 3},
};

const Among a_4[] = {
    {U"iqUe", -1, 1},
    {U"atrice", -1, 2},
    {U"ance", -1, 1},
    {U"ence", -1, 5},
    {U"logie", -1, 3},
    {U"able", -1, 1},
    {U"isme", -1, 1},
    {U"euse", -1, 12},
    {U"iste", -1, 1},
    {U"ive", -1, 8},
    {U"if", -1, 8},
    {U"usion", -1, 4},
    {U"ation", -1, 2},
    {U"ution", -1, 4},
    {U"ateur", -1, 2},
    {U"iqUes", -1, 1},
    {U"atrices", -1, 2},
    {U"ances", -1, 1},
    {U"ences", -1, 5},
    {U"logies", -1, 3},
    {U"ables", -1, 1},
    {U"ismes", -1, 1},
    {U"euses", -1, 12},
    {U"istes", -1, 1},
    {U"ives", -1, 8},
    {U"ifs", -1, 8},
    {U"usions", -1, 4},
    {U"ations", -1, 2},
    {U"utions", -1, 4},
    {U"ateurs", -1, 2},
    {U"ments", -1, 16},
    {U"ements", 30, 6},
    {U"issements", 31, 13},
    {U"ités", -1, 7},
    {U"ment", -1, 16},
    {U"ement", 34, 6},
    {U"issement", 35, 13},
    {U"amment", 34, 14},
    {U"emment", 34, 15},
    {U"aux", -1, 10},
    {U"eaux", 39, 9},
    {U"eux", -1, 1},
    {U"oux", -1, 11},
    {U"ité", -1, 7},
};

const Among a_5[] = {
    {U"ira", -1, 1},
    {U"ie", -1, 1},
    {U"isse", -1, 1},
    {U"issante", -1, 1},
    {U"i", -1, 1},
    {U"irai", 4, 1},
    {U"ir", -1, 1},
    {U"iras", -1, 1},
    {U"ies", -1, 1},
    {U"îmes", -1, 1},
    {U"isses", -1, 1},
    {U"issantes", -1, 1},
    {U"îtes", -1, 1},
    {U"is", -1, 1},
    {U"irais", 13, 1},
    {U"issais", 13, 1},
    {U"irions", -1, 1},
    {U"issions", -1, 1},
    {U"irons", -1, 1},
    {U"issons", -1, 1},
    {U"issants", -1, 1},
    {U"it", -1, 1},
    {U"irait", 21, 1},
    {U"issait", 21, 1},
    {U"issant", -1, 1},
    {U"iraIent", -1, 1},
    {U"issaIent", -1, 1},
    {U"irent", -1, 1},
    {U"issent", -1, 1},
    {U"iront", -1, 1},
    {U"ît", -1, 1},
    {U"iriez", -1, 1},
    {U"issiez", -1, 1},
    {U"irez", -1, 1},
    {U"issez", -1, 1},
};

const Among a_6[] = {
    {U"al", -1, 1},
    {U"épl", -1, -1},
    {U"auv", -1, -1},
};

const Among a_7[] = {
    {U"a", -1, 3},
    {U"era", 0, 2},
    {U"aise", -1, 4},
    {U"asse", -1, 3},
    {U"ante", -1, 3},
    {U"ée", -1, 2},
    {U"ai", -1, 3},
    {U"erai", 6, 2},
    {U"er", -1, 2},
    {U"as", -1, 3},
    {U"eras", 9, 2},
    {U"âmes", -1, 3},
    {U"aises", -1, 4},
    {U"asses", -1, 3},
    {U"antes", -1, 3},
    {U"âtes", -1, 3},
    {U"ées", -1, 2},
    {U"ais", -1, 4},
    {U"eais", 17, 2},
    {U"erais", 17, 2},
    {U"ions", -1, 1},
    {U"erions", 20, 2},
    {U"assions", 20, 3},
    {U"erons", -1, 2},
    {U"ants", -1, 3},
    {U"és", -1, 2},
    {U"ait", -1, 3},
    {U"erait", 26, 2},
    {U"ant", -1, 3},
    {U"aIent", -1, 3},
    {U"eraIent", 29, 2},
    {U"èrent", -1, 2},
    {U"assent", -1, 3},
    {U"eront", -1, 2},
    {U"ât", -1, 3},
    {U"ez", -1, 2},
    {U"iez", 35, 2},
    {U"eriez", 36, 2},
    {U"assiez", 36, 3},
    {U"erez", 35, 2},
    {U"é", -1, 2},
};

const Among a_8[] = {
    {U"e", -1, 3},
    {U"Ière", 0, 2},
    {U"ière", 0, 2},
    {U"ion", -1, 1},
    {U"Ier", -1, 2},
    {U"ier", -1, 2},
};

const Among a_9[] = {
    {U"ell", -1, -1},
    {U"eill", -1, -1},
    {U"enn", -1, -1},
    {U"onn", -1, -1},
    {U"ett", -1, -1},
};

class FrenchStemmer final : public SnowballBase {
public:
    std::u32string run(std::u32string word) {
        set_current(std::move(word));
        stem();
        return current;
    }

private:
    int I_p2 = 0;
    int I_p1 = 0;
    int I_pV = 0;

    bool r_elisions() {
        bra = cursor;
        while (true) {
            {
                if (!in_grouping(g_elision_char)) {
                    goto lab0_1;
                }
                break;
            }
            lab0_1:;
            if (!eq_s(U"qu")) {
                return false;
            }
            break;
        }
        if (cursor == limit || current[cursor] != U'\'') {
            return false;
        }
        cursor += 1;
        ket = cursor;
        if (cursor >= limit) {
            return false;
        }
        slice_del();
        return true;
    }

    bool r_prelude() {
        int v_1 = 0, v_2 = 0, v_3 = 0, v_4 = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        static_cast<void>(v_4);
        while (true) {
            v_1 = cursor;
            {
                while (true) {
                    v_2 = cursor;
                    {
                        while (true) {
                            v_3 = cursor;
                            {
                                if (!in_grouping(g_v)) {
                                    goto lab2_3;
                                }
                                bra = cursor;
                                while (true) {
                                    v_4 = cursor;
                                    {
                                        if (cursor == limit || current[cursor] != U'u') {
                                            goto lab3_4;
                                        }
                                        cursor += 1;
                                        ket = cursor;
                                        if (!in_grouping(g_v)) {
                                            goto lab3_4;
                                        }
                                        slice_from(U"U");
                                        break;
                                    }
                                    lab3_4:;
                                    cursor = v_4;
                                    {
                                        if (cursor == limit || current[cursor] != U'i') {
                                            goto lab3_5;
                                        }
                                        cursor += 1;
                                        ket = cursor;
                                        if (!in_grouping(g_v)) {
                                            goto lab3_5;
                                        }
                                        slice_from(U"I");
                                        break;
                                    }
                                    lab3_5:;
                                    cursor = v_4;
                                    if (cursor == limit || current[cursor] != U'y') {
                                        goto lab2_3;
                                    }
                                    cursor += 1;
                                    ket = cursor;
                                    slice_from(U"Y");
                                    break;
                                }
                                break;
                            }
                            lab2_3:;
                            cursor = v_3;
                            {
                                bra = cursor;
                                if (cursor == limit || current[cursor] != U'ë') {
                                    goto lab2_6;
                                }
                                cursor += 1;
                                ket = cursor;
                                slice_from(U"He");
                                break;
                            }
                            lab2_6:;
                            cursor = v_3;
                            {
                                bra = cursor;
                                if (cursor == limit || current[cursor] != U'ï') {
                                    goto lab2_7;
                                }
                                cursor += 1;
                                ket = cursor;
                                slice_from(U"Hi");
                                break;
                            }
                            lab2_7:;
                            cursor = v_3;
                            {
                                bra = cursor;
                                if (cursor == limit || current[cursor] != U'y') {
                                    goto lab2_8;
                                }
                                cursor += 1;
                                ket = cursor;
                                if (!in_grouping(g_v)) {
                                    goto lab2_8;
                                }
                                slice_from(U"Y");
                                break;
                            }
                            lab2_8:;
                            cursor = v_3;
                            if (cursor == limit || current[cursor] != U'q') {
                                goto lab1_2;
                            }
                            cursor += 1;
                            bra = cursor;
                            if (cursor == limit || current[cursor] != U'u') {
                                goto lab1_2;
                            }
                            cursor += 1;
                            ket = cursor;
                            slice_from(U"U");
                            break;
                        }
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
                continue;
            }
            lab0_1:;
            cursor = v_1;
            break;
        }
        return true;
    }

    bool r_mark_regions() {
        int v_1 = 0, v_2 = 0, v_3 = 0, among_var = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        static_cast<void>(among_var);
        I_pV = limit;
        I_p1 = limit;
        I_p2 = limit;
        v_1 = cursor;
        {
            while (true) {
                v_2 = cursor;
                {
                    if (!in_grouping(g_v)) {
                        goto lab1_2;
                    }
                    if (!in_grouping(g_v)) {
                        goto lab1_2;
                    }
                    if (cursor >= limit) {
                        goto lab1_2;
                    }
                    cursor += 1;
                    break;
                }
                lab1_2:;
                cursor = v_2;
                {
                    among_var = find_among(a_0);
                    if (among_var == 0) {
                        goto lab1_3;
                    }
                    if (among_var == 1) {
                        if (!in_grouping(g_v)) {
                            goto lab1_3;
                        }
                    }
                    break;
                }
                lab1_3:;
                cursor = v_2;
                if (cursor >= limit) {
                    goto lab0_1;
                }
                cursor += 1;
                if (!go_out_grouping(g_v)) {
                    goto lab0_1;
                }
                cursor += 1;
                break;
            }
            I_pV = cursor;
        }
        lab0_1:;
        cursor = v_1;
        v_3 = cursor;
        {
            if (!go_out_grouping(g_v)) {
                goto lab0_4;
            }
            cursor += 1;
            if (!go_in_grouping(g_v)) {
                goto lab0_4;
            }
            cursor += 1;
            I_p1 = cursor;
            if (!go_out_grouping(g_v)) {
                goto lab0_4;
            }
            cursor += 1;
            if (!go_in_grouping(g_v)) {
                goto lab0_4;
            }
            cursor += 1;
            I_p2 = cursor;
        }
        lab0_4:;
        cursor = v_3;
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
                    slice_from(U"i");
                }
                else if (among_var == 2) {
                    slice_from(U"u");
                }
                else if (among_var == 3) {
                    slice_from(U"y");
                }
                else if (among_var == 4) {
                    slice_from(U"ë");
                }
                else if (among_var == 5) {
                    slice_from(U"ï");
                }
                else if (among_var == 6) {
                    slice_del();
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

    bool r_RV() {
        return I_pV <= cursor;
    }

    bool r_R1() {
        return I_p1 <= cursor;
    }

    bool r_R2() {
        return I_p2 <= cursor;
    }

    bool r_standard_suffix() {
        int v_1 = 0, v_2 = 0, v_3 = 0, v_4 = 0, v_5 = 0, v_6 = 0, v_7 = 0, v_8 = 0, v_9 = 0, v_10 = 0, v_11 = 0, among_var = 0;
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
        static_cast<void>(v_11);
        static_cast<void>(among_var);
        ket = cursor;
        among_var = find_among_b(a_4);
        if (among_var == 0) {
            return false;
        }
        bra = cursor;
        if (among_var == 1) {
            if (!r_R2()) {
                return false;
            }
            slice_del();
        }
        else if (among_var == 2) {
            if (!r_R2()) {
                return false;
            }
            slice_del();
            v_1 = limit - cursor;
            {
                ket = cursor;
                if (!eq_s_b(U"ic")) {
                    cursor = limit - v_1;
                    goto lab0_1;
                }
                bra = cursor;
                while (true) {
                    v_2 = limit - cursor;
                    {
                        if (!r_R2()) {
                            goto lab1_2;
                        }
                        slice_del();
                        break;
                    }
                    lab1_2:;
                    cursor = limit - v_2;
                    slice_from(U"iqU");
                    break;
                }
            }
            lab0_1:;
        }
        else if (among_var == 3) {
            if (!r_R2()) {
                return false;
            }
            slice_from(U"log");
        }
        else if (among_var == 4) {
            if (!r_R2()) {
                return false;
            }
            slice_from(U"u");
        }
        else if (among_var == 5) {
            if (!r_R2()) {
                return false;
            }
            slice_from(U"ent");
        }
        else if (among_var == 6) {
            if (!r_RV()) {
                return false;
            }
            slice_del();
            v_3 = limit - cursor;
            {
                ket = cursor;
                among_var = find_among_b(a_2);
                if (among_var == 0) {
                    cursor = limit - v_3;
                    goto lab0_3;
                }
                bra = cursor;
                if (among_var == 1) {
                    if (!r_R2()) {
                        cursor = limit - v_3;
                        goto lab0_3;
                    }
                    slice_del();
                    ket = cursor;
                    if (!eq_s_b(U"at")) {
                        cursor = limit - v_3;
                        goto lab0_3;
                    }
                    bra = cursor;
                    if (!r_R2()) {
                        cursor = limit - v_3;
                        goto lab0_3;
                    }
                    slice_del();
                }
                else if (among_var == 2) {
                    while (true) {
                        v_4 = limit - cursor;
                        {
                            if (!r_R2()) {
                                goto lab1_4;
                            }
                            slice_del();
                            break;
                        }
                        lab1_4:;
                        cursor = limit - v_4;
                        if (!r_R1()) {
                            cursor = limit - v_3;
                            goto lab0_3;
                        }
                        slice_from(U"eux");
                        break;
                    }
                }
                else if (among_var == 3) {
                    if (!r_R2()) {
                        cursor = limit - v_3;
                        goto lab0_3;
                    }
                    slice_del();
                }
                else {
                    if (!r_RV()) {
                        cursor = limit - v_3;
                        goto lab0_3;
                    }
                    slice_from(U"i");
                }
            }
            lab0_3:;
        }
        else if (among_var == 7) {
            if (!r_R2()) {
                return false;
            }
            slice_del();
            v_5 = limit - cursor;
            {
                ket = cursor;
                among_var = find_among_b(a_3);
                if (among_var == 0) {
                    cursor = limit - v_5;
                    goto lab0_5;
                }
                bra = cursor;
                if (among_var == 1) {
                    while (true) {
                        v_6 = limit - cursor;
                        {
                            if (!r_R2()) {
                                goto lab1_6;
                            }
                            slice_del();
                            break;
                        }
                        lab1_6:;
                        cursor = limit - v_6;
                        slice_from(U"abl");
                        break;
                    }
                }
                else if (among_var == 2) {
                    while (true) {
                        v_7 = limit - cursor;
                        {
                            if (!r_R2()) {
                                goto lab1_7;
                            }
                            slice_del();
                            break;
                        }
                        lab1_7:;
                        cursor = limit - v_7;
                        slice_from(U"iqU");
                        break;
                    }
                }
                else {
                    if (!r_R2()) {
                        cursor = limit - v_5;
                        goto lab0_5;
                    }
                    slice_del();
                }
            }
            lab0_5:;
        }
        else if (among_var == 8) {
            if (!r_R2()) {
                return false;
            }
            slice_del();
            v_8 = limit - cursor;
            {
                ket = cursor;
                if (!eq_s_b(U"at")) {
                    cursor = limit - v_8;
                    goto lab0_8;
                }
                bra = cursor;
                if (!r_R2()) {
                    cursor = limit - v_8;
                    goto lab0_8;
                }
                slice_del();
                ket = cursor;
                if (!eq_s_b(U"ic")) {
                    cursor = limit - v_8;
                    goto lab0_8;
                }
                bra = cursor;
                while (true) {
                    v_9 = limit - cursor;
                    {
                        if (!r_R2()) {
                            goto lab1_9;
                        }
                        slice_del();
                        break;
                    }
                    lab1_9:;
                    cursor = limit - v_9;
                    slice_from(U"iqU");
                    break;
                }
            }
            lab0_8:;
        }
        else if (among_var == 9) {
            slice_from(U"eau");
        }
        else if (among_var == 10) {
            if (!r_R1()) {
                return false;
            }
            slice_from(U"al");
        }
        else if (among_var == 11) {
            if (!in_grouping_b(g_oux_ending)) {
                return false;
            }
            slice_from(U"ou");
        }
        else if (among_var == 12) {
            while (true) {
                v_10 = limit - cursor;
                {
                    if (!r_R2()) {
                        goto lab0_10;
                    }
                    slice_del();
                    break;
                }
                lab0_10:;
                cursor = limit - v_10;
                if (!r_R1()) {
                    return false;
                }
                slice_from(U"eux");
                break;
            }
        }
        else if (among_var == 13) {
            if (!r_R1()) {
                return false;
            }
            if (!out_grouping_b(g_v)) {
                return false;
            }
            slice_del();
        }
        else if (among_var == 14) {
            if (!r_RV()) {
                return false;
            }
            slice_from(U"ant");
            return false;
        }
        else if (among_var == 15) {
            if (!r_RV()) {
                return false;
            }
            slice_from(U"ent");
            return false;
        }
        else {
            v_11 = limit - cursor;
            if (!in_grouping_b(g_v)) {
                return false;
            }
            if (!r_RV()) {
                return false;
            }
            cursor = limit - v_11;
            slice_del();
            return false;
        }
        return true;
    }

    bool r_i_verb_suffix() {
        int v_2 = 0;
        static_cast<void>(v_2);
        if (cursor < I_pV) {
            return false;
        }
        v_2 = limit_backward;
        limit_backward = I_pV;
        ket = cursor;
        if (find_among_b(a_5) == 0) {
            limit_backward = v_2;
            return false;
        }
        bra = cursor;
        {
            if (cursor <= limit_backward || current[cursor - 1] != U'H') {
                goto lab0_1;
            }
            cursor -= 1;
            limit_backward = v_2;
            return false;
        }
        lab0_1:;
        if (!out_grouping_b(g_v)) {
            limit_backward = v_2;
            return false;
        }
        slice_del();
        limit_backward = v_2;
        return true;
    }

    bool r_verb_suffix() {
        int v_2 = 0, v_3 = 0, v_4 = 0, among_var = 0;
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        static_cast<void>(v_4);
        static_cast<void>(among_var);
        if (cursor < I_pV) {
            return false;
        }
        v_2 = limit_backward;
        limit_backward = I_pV;
        ket = cursor;
        among_var = find_among_b(a_7);
        if (among_var == 0) {
            limit_backward = v_2;
            return false;
        }
        bra = cursor;
        limit_backward = v_2;
        if (among_var == 1) {
            if (!r_R2()) {
                return false;
            }
            slice_del();
        }
        else if (among_var == 2) {
            slice_del();
        }
        else if (among_var == 3) {
            v_3 = limit - cursor;
            {
                if (cursor <= limit_backward || current[cursor - 1] != U'e') {
                    cursor = limit - v_3;
                    goto lab0_1;
                }
                cursor -= 1;
                if (!r_RV()) {
                    cursor = limit - v_3;
                    goto lab0_1;
                }
                bra = cursor;
            }
            lab0_1:;
            slice_del();
        }
        else {
            v_4 = limit - cursor;
            {
                among_var = find_among_b(a_6);
                if (among_var == 0) {
                    goto lab0_2;
                }
                if (among_var == 1) {
                    if (cursor <= limit_backward) {
                        goto lab0_2;
                    }
                    cursor -= 1;
                    if (cursor > limit_backward) {
                        goto lab0_2;
                    }
                }
                return false;
            }
            lab0_2:;
            cursor = limit - v_4;
            slice_del();
        }
        return true;
    }

    bool r_residual_suffix() {
        int v_1 = 0, v_2 = 0, v_4 = 0, among_var = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_4);
        static_cast<void>(among_var);
        v_1 = limit - cursor;
        {
            ket = cursor;
            if (cursor <= limit_backward || current[cursor - 1] != U's') {
                cursor = limit - v_1;
                goto lab0_1;
            }
            cursor -= 1;
            bra = cursor;
            v_2 = limit - cursor;
            while (true) {
                {
                    if (!eq_s_b(U"Hi")) {
                        goto lab1_2;
                    }
                    break;
                }
                lab1_2:;
                if (!out_grouping_b(g_keep_with_s)) {
                    cursor = limit - v_1;
                    goto lab0_1;
                }
                break;
            }
            cursor = limit - v_2;
            slice_del();
        }
        lab0_1:;
        if (cursor < I_pV) {
            return false;
        }
        v_4 = limit_backward;
        limit_backward = I_pV;
        ket = cursor;
        among_var = find_among_b(a_8);
        if (among_var == 0) {
            limit_backward = v_4;
            return false;
        }
        bra = cursor;
        if (among_var == 1) {
            if (!r_R2()) {
                limit_backward = v_4;
                return false;
            }
            while (true) {
                {
                    if (cursor <= limit_backward || current[cursor - 1] != U's') {
                        goto lab0_3;
                    }
                    cursor -= 1;
                    break;
                }
                lab0_3:;
                if (cursor <= limit_backward || current[cursor - 1] != U't') {
                    limit_backward = v_4;
                    return false;
                }
                cursor -= 1;
                break;
            }
            slice_del();
        }
        else if (among_var == 2) {
            slice_from(U"i");
        }
        else {
            slice_del();
        }
        limit_backward = v_4;
        return true;
    }

    bool r_un_double() {
        int v_1 = 0;
        static_cast<void>(v_1);
        v_1 = limit - cursor;
        if (find_among_b(a_9) == 0) {
            return false;
        }
        cursor = limit - v_1;
        ket = cursor;
        if (cursor <= limit_backward) {
            return false;
        }
        cursor -= 1;
        bra = cursor;
        slice_del();
        return true;
    }

    bool r_un_accent() {
        int v_1 = 0;
        static_cast<void>(v_1);
        v_1 = 1;
        while (true) {
            {
                if (!out_grouping_b(g_v)) {
                    goto lab0_1;
                }
                v_1 -= 1;
                continue;
            }
            lab0_1:;
            break;
        }
        if (v_1 > 0) {
            return false;
        }
        ket = cursor;
        while (true) {
            {
                if (cursor <= limit_backward || current[cursor - 1] != U'é') {
                    goto lab0_2;
                }
                cursor -= 1;
                break;
            }
            lab0_2:;
            if (cursor <= limit_backward || current[cursor - 1] != U'è') {
                return false;
            }
            cursor -= 1;
            break;
        }
        bra = cursor;
        slice_from(U"e");
        return true;
    }

    bool stem() {
        int v_1 = 0, v_2 = 0, v_3 = 0, v_4 = 0, v_5 = 0, v_6 = 0, v_7 = 0, v_8 = 0, v_9 = 0, v_10 = 0, v_11 = 0;
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
        static_cast<void>(v_11);
        v_1 = cursor;
        r_elisions();
        cursor = v_1;
        v_2 = cursor;
        r_prelude();
        cursor = v_2;
        r_mark_regions();
        limit_backward = cursor;
        cursor = limit;
        v_3 = limit - cursor;
        {
            while (true) {
                v_4 = limit - cursor;
                {
                    v_5 = limit - cursor;
                    while (true) {
                        v_6 = limit - cursor;
                        {
                            if (!r_standard_suffix()) {
                                goto lab2_3;
                            }
                            break;
                        }
                        lab2_3:;
                        cursor = limit - v_6;
                        {
                            if (!r_i_verb_suffix()) {
                                goto lab2_4;
                            }
                            break;
                        }
                        lab2_4:;
                        cursor = limit - v_6;
                        if (!r_verb_suffix()) {
                            goto lab1_2;
                        }
                        break;
                    }
                    cursor = limit - v_5;
                    v_7 = limit - cursor;
                    {
                        ket = cursor;
                        while (true) {
                            v_8 = limit - cursor;
                            {
                                if (cursor <= limit_backward || current[cursor - 1] != U'Y') {
                                    goto lab3_6;
                                }
                                cursor -= 1;
                                bra = cursor;
                                slice_from(U"i");
                                break;
                            }
                            lab3_6:;
                            cursor = limit - v_8;
                            if (cursor <= limit_backward || current[cursor - 1] != U'ç') {
                                cursor = limit - v_7;
                                goto lab2_5;
                            }
                            cursor -= 1;
                            bra = cursor;
                            slice_from(U"c");
                            break;
                        }
                    }
                    lab2_5:;
                    break;
                }
                lab1_2:;
                cursor = limit - v_4;
                if (!r_residual_suffix()) {
                    goto lab0_1;
                }
                break;
            }
        }
        lab0_1:;
        cursor = limit - v_3;
        v_9 = limit - cursor;
        r_un_double();
        cursor = limit - v_9;
        v_10 = limit - cursor;
        r_un_accent();
        cursor = limit - v_10;
        cursor = limit_backward;
        v_11 = cursor;
        r_postlude();
        cursor = v_11;
        return true;
    }

};

}  // namespace

std::u32string stem_french(std::u32string word) {
    FrenchStemmer stemmer;
    return stemmer.run(std::move(word));
}

}  // namespace bicross::stem
