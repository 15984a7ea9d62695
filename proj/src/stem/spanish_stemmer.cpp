// Generated by tools/stemgen/snowball_py2cpp.py from the Snowball spanish algorithm.
// Snowball is (c) Dr Martin Porter and Richard Boulton, BSD-licensed (https://snowballstem.org/).
// Do not edit by hand; regenerate instead.

#include "stem/snowball_runtime.hpp"
#include "stem/stemmers.hpp"

#pragma GCC diagnostic ignored "-Wunused-label"

namespace bicross::stem {
namespace {

const std::u32string_view g_v = U"aeiouáéíóúü";

const Among a_0[] = {
    {U"", -1, 6},
    {U"á", 0, 1},
    {U"é", 0, 2},
    {U"í", 0, 3},
    {U"ó", 0, 4},
    {U"ú", 0, 5},
};

const Among a_1[] = {
    {U"la", -1, -1},
    {U"sela", 0, -1},
    {U"le", -1, -1},
    {U"me", -1, -1},
    {U"se", -1, -1},
    {U"lo", -1, -1},
    {U"selo", 5, -1},
    {U"las", -1, -1},
    {U"selas", 7, -1},
    {U"les", -1, -1},
    {U"los", -1, -1},
    {U"selos", 10, -1},
    {U"nos", -1, -1},
};

const Among a_2[] = {
    {U"ando", -1, 6},
    {U"iendo", -1, 6},
    {U"yendo", -1, 7},
    {U"ándo", -1, 2},
    {U"iéndo", -1, 1},
    {U"ar", -1, 6},
    {U"er", -1, 6},
    {U"ir", -1, 6},
    {U"ár", -1, 3},
    {U"ér", -1, 4},
    {U"ír", -1, 5},
};

const Among a_3[] = {
    {U"ic", -1, -1},
    {U"ad", -1, -1},
    {U"os", -1, -1},
    {U"iv", -1, 1},
};

const Among a_4[] = {
    {U"able", -1, 1},
    {U"ible", -1, 1},
    {U"ante", -1, 1},
};

const Among a_5[] = {
    {U"ic", -1, 1},
    {U"abil", -1, 1},
    {U"iv", -1, 1},
};

const Among a_6[] = {
    {U"ica", -1, 1},
    {U"ancia", -1, 2},
    {U"encia", -1, 5},
    {U"adora", -1, 2},
    {U"osa", -1, 1},
    {U"ista", -1, 1},
    {U"iva", -1, 9},
    {U"anza", -1, 1},
    {U"logía", -1, 3},
    {U"idad", -1, 8},
    {U"able", -1, 1},
    {U"ible", -1, 1},
    {U"ante", -1, 2},
    {U"mente", -1, 7},
    {U"amente", 13, 6},
    {U"acion", -1, 2},
    {U"ucion", -1, 4},
    {U"ación", -1, 2},
    {U"ución", -1, 4},
    {U"ico", -1, 1},
    {U"ismo", -1, 1},
    {U"oso", -1, 1},
    {U"amiento", -1, 1},
    {U"imiento", -1, 1},
    {U"ivo", -1, 9},
    {U"ador", -1, 2},
    {U"icas", -1, 1},
    {U"ancias", -1, 2},
    {U"encias", -1, 5},
    {U"adoras", -1, 2},
    {U"osas", -1, 1},
    {U"istas", -1, 1},
    {U"ivas", -1, 9},
    {U"anzas", -1, 1},
    {U"logías", -1, 3},
    {U"idades", -1, 8},
    {U"ables", -1, 1},
    {U"ibles", -1, 1},
    {U"aciones", -1, 2},
    {U"uciones", -1, 4},
    {U"adores", -1, 2},
    {U"antes", -1, 2},
    {U"icos", -1, 1},
    {U"ismos", -1, 1},
    {U"osos", -1, 1},
    {U"amientos", -1, 1},
    {U"imientos", -1, 1},
    {U"ivos", -1, 9},
};

const Among a_7[] = {
    {U"ya", -1, 1},
    {U"ye", -1, 1},
    {U"yan", -1, 1},
    {U"yen", -1, 1},
    {U"yeron", -1, 1},
    {U"yendo", -1, 1},
    {U"yo", -1, 1},
    {U"yas", -1, 1},
    {U"yes", -1, 1},
    {U"yais", -1, 1},
    {U"yamos", -1, 1},
    {U"yó", -1, 1},
};

const Among a_8[] = {
    {U"aba", -1, 2},
    {U"ada", -1, 2},
    {U"ida", -1, 2},
    {U"ara", -1, 2},
    {U"iera", -1, 2},
    {U"ía", -1, 2},
    {U"aría", 5, 2},
    {U"ería", 5, 2},
    {U"iría", 5, 2},
    {U"ad", -1, 2},
    {U"ed", -1, 2},
    {U"id", -1, 2},
    {U"ase", -1, 2},
    {U"iese", -1, 2},
    {U"aste", -1, 2},
    {U"iste", -1, 2},
    {U"an", -1, 2},
    {U"aban", 16, 2},
    {U"aran", 16, 2},
    {U"ieran", 16, 2},
    {U"ían", 16, 2},
    {U"arían", 20, 2},
    {U"erían", 20, 2},
    {U"irían", 20, 2},
    {U"en", -1, 1},
    {U"asen", 24, 2},
    {U"iesen", 24, 2},
    {U"aron", -1, 2},
    {U"ieron", -1, 2},
    {U"arán", -1, 2},
    {U"erán", -1, 2},
    {U"irán", -1, 2},
    {U"ado", -1, 2},
    {U"ido", -1, 2},
    {U"ando", -1, 2},
    {U"iendo", -1, 2},
    {U"ar", -1, 2},
    {U"er", -1, 2},
    {U"ir", -1, 2},
    {U"as", -1, 2},
    {U"abas", 39, 2},
    {U"adas", 39, 2},
    {U"idas", 39, 2},
    {U"aras", 39, 2},
    {U"ieras", 39, 2},
    {U"ías", 39, 2},
    {U"arías", 45, 2},
    {U"erías", 45, 2},
    {U"irías", 45, 2},
    {U"es", -1, 1},
    {U"ases", 49, 2},
    {U"ieses", 49, 2},
    {U"abais", -1, 2},
    {U"arais", -1, 2},
    {U"ierais", -1, 2},
    {U"íais", -1, 2},
    {U"aríais", 55, 2},
    {U"eríais", 55, 2},
    {U"iríais", 55, 2},
    {U"aseis", -1, 2},
    {U"ieseis", -1, 2},
    {U"asteis", -1, 2},
    {U"isteis", -1, 2},
    {U"áis", -1, 2},
    {U"éis", -1, 1},
    {U"aréis", 64, 2},
    {U"eréis", 64, 2},
    {U"iréis", 64, 2},
    {U"ados", -1, 2},
    {U"idos", -1, 2},
    {U"amos", -1, 2},
    {U"ábamos", 70, 2},
    {U"áramos", 70, 2},
    {U"iéramos", 70, 2},
    {U"íamos", 70, 2},
    {U"aríamos", 74, 2},
    {U"eríamos", 74, 2},
    {U"iríamos", 74, 2},
    {U"emos", -1, 1},
    {U"aremos", 78, 2},
    {U"eremos", 78, 2},
    {U"iremos", 78, 2},
    {U"ásemos", 78, 2},
    {U"iésemos", 78, 2},
    {U"imos", -1, 2},
    {U"arás", -1, 2},
    {U"erás", -1, 2},
    {U"irás", -1, 2},
    {U"ís", -1, 2},
    {U"ará", -1, 2},
    {U"erá", -1, 2},
    {U"irá", -1, 2},
    {U"aré", -1, 2},
    {U"eré", -1, 2},
    {U"iré", -1, 2},
    {U"ió", -1, 2},
};

const Among a_9[] = {
    {U"a", -1, 1},
    {U"e", -1, 2},
    {U"o", -1, 1},
    {U"os", -1, 1},
    {U"á", -1, 1},
    {U"é", -1, 2},
    {U"í", -1, 1},
    {U"ó", -1, 1},
};

class SpanishStemmer final : public SnowballBase {
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

    bool r_mark_regions() {
        int v_1 = 0, v_2 = 0, v_3 = 0, v_4 = 0, v_5 = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        static_cast<void>(v_4);
        static_cast<void>(v_5);
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
                    while (true) {
                        v_3 = cursor;
                        {
                            if (!out_grouping(g_v)) {
                                goto lab2_3;
                            }
                            if (!go_out_grouping(g_v)) {
                                goto lab2_3;
                            }
                            cursor += 1;
                            break;
                        }
                        lab2_3:;
                        cursor = v_3;
                        if (!in_grouping(g_v)) {
                            goto lab1_2;
                        }
                        if (!go_in_grouping(g_v)) {
                            goto lab1_2;
                        }
                        cursor += 1;
                        break;
                    }
                    break;
                }
                lab1_2:;
                cursor = v_2;
                if (!out_grouping(g_v)) {
                    goto lab0_1;
                }
                while (true) {
                    v_4 = cursor;
                    {
                        if (!out_grouping(g_v)) {
                            goto lab1_4;
                        }
                        if (!go_out_grouping(g_v)) {
                            goto lab1_4;
                        }
                        cursor += 1;
                        break;
                    }
                    lab1_4:;
                    cursor = v_4;
                    if (!in_grouping(g_v)) {
                        goto lab0_1;
                    }
                    if (cursor >= limit) {
                        goto lab0_1;
                    }
                    cursor += 1;
                    break;
                }
                break;
            }
            I_pV = cursor;
        }
        lab0_1:;
        cursor = v_1;
        v_5 = cursor;
        {
            if (!go_out_grouping(g_v)) {
                goto lab0_5;
            }
            cursor += 1;
            if (!go_in_grouping(g_v)) {
                goto lab0_5;
            }
            cursor += 1;
            I_p1 = cursor;
            if (!go_out_grouping(g_v)) {
                goto lab0_5;
            }
            cursor += 1;
            if (!go_in_grouping(g_v)) {
                goto lab0_5;
            }
            cursor += 1;
            I_p2 = cursor;
        }
        lab0_5:;
        cursor = v_5;
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
                among_var = find_among(a_0);
                ket = cursor;
                if (among_var == 1) {
                    slice_from(U"a");
                }
                else if (among_var == 2) {
                    slice_from(U"e");
                }
                else if (among_var == 3) {
                    slice_from(U"i");
                }
                else if (among_var == 4) {
                    slice_from(U"o");
                }
                else if (among_var == 5) {
                    slice_from(U"u");
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

    bool r_R2() {
        return I_p2 <= cursor;
    }

    bool r_attached_pronoun() {
        int among_var = 0;
        static_cast<void>(among_var);
        ket = cursor;
        if (find_among_b(a_1) == 0) {
            return false;
        }
        bra = cursor;
        among_var = find_among_b(a_2);
        if (among_var == 0) {
            return false;
        }
        if (!r_RV()) {
            return false;
        }
        if (among_var == 1) {
            bra = cursor;
            slice_from(U"iendo");
        }
        else if (among_var == 2) {
            bra = cursor;
            slice_from(U"ando");
        }
        else if (among_var == 3) {
            bra = cursor;
            slice_from(U"ar");
        }
        else if (among_var == 4) {
            bra = cursor;
            slice_from(U"er");
        }
        else if (among_var == 5) {
            bra = cursor;
            slice_from(U"ir");
        }
        else if (among_var == 6) {
            slice_del();
        }
        else {
            if (cursor <= limit_backward || current[cursor - 1] != U'u') {
                return false;
            }
            cursor -= 1;
            slice_del();
        }
        return true;
    }

    bool r_standard_suffix() {
        int v_1 = 0, v_2 = 0, v_3 = 0, v_4 = 0, v_5 = 0, among_var = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        static_cast<void>(v_4);
        static_cast<void>(v_5);
        static_cast<void>(among_var);
        ket = cursor;
        among_var = find_among_b(a_6);
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
                if (!r_R2()) {
                    cursor = limit - v_1;
                    goto lab0_1;
                }
                slice_del();
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
            slice_from(U"ente");
        }
        else if (among_var == 6) {
            if (I_p1 > cursor) {
                return false;
            }
            slice_del();
            v_2 = limit - cursor;
            {
                ket = cursor;
                among_var = find_among_b(a_3);
                if (among_var == 0) {
                    cursor = limit - v_2;
                    goto lab0_2;
                }
                bra = cursor;
                if (!r_R2()) {
                    cursor = limit - v_2;
                    goto lab0_2;
                }
                slice_del();
                if (among_var == 1) {
                    ket = cursor;
                    if (!eq_s_b(U"at")) {
                        cursor = limit - v_2;
                        goto lab0_2;
                    }
                    bra = cursor;
                    if (!r_R2()) {
                        cursor = limit - v_2;
                        goto lab0_2;
                    }
                    slice_del();
                }
            }
            lab0_2:;
        }
        else if (among_var == 7) {
            if (!r_R2()) {
                return false;
            }
            slice_del();
            v_3 = limit - cursor;
            {
                ket = cursor;
                if (find_among_b(a_4) == 0) {
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
            lab0_3:;
        }
        else if (among_var == 8) {
            if (!r_R2()) {
                return false;
            }
            slice_del();
            v_4 = limit - cursor;
            {
                ket = cursor;
                if (find_among_b(a_5) == 0) {
                    cursor = limit - v_4;
                    goto lab0_4;
                }
                bra = cursor;
                if (!r_R2()) {
                    cursor = limit - v_4;
                    goto lab0_4;
                }
                slice_del();
            }
            lab0_4:;
        }
        else {
            if (!r_R2()) {
                return false;
            }
            slice_del();
            v_5 = limit - cursor;
            {
                ket = cursor;
                if (!eq_s_b(U"at")) {
                    cursor = limit - v_5;
                    goto lab0_5;
                }
                bra = cursor;
                if (!r_R2()) {
                    cursor = limit - v_5;
                    goto lab0_5;
                }
                slice_del();
            }
            lab0_5:;
        }
        return true;
    }

    bool r_y_verb_suffix() {
        int v_2 = 0;
        static_cast<void>(v_2);
        if (cursor < I_pV) {
            return false;
        }
        v_2 = limit_backward;
        limit_backward = I_pV;
        ket = cursor;
        if (find_among_b(a_7) == 0) {
            limit_backward = v_2;
            return false;
        }
        bra = cursor;
        limit_backward = v_2;
        if (cursor <= limit_backward || current[cursor - 1] != U'u') {
            return false;
        }
        cursor -= 1;
        slice_del();
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
        among_var = find_among_b(a_8);
        if (among_var == 0) {
            limit_backward = v_2;
            return false;
        }
        bra = cursor;
        limit_backward = v_2;
        if (among_var == 1) {
            v_3 = limit - cursor;
            {
                if (cursor <= limit_backward || current[cursor - 1] != U'u') {
                    cursor = limit - v_3;
                    goto lab0_1;
                }
                cursor -= 1;
                v_4 = limit - cursor;
                if (cursor <= limit_backward || current[cursor - 1] != U'g') {
                    cursor = limit - v_3;
                    goto lab0_1;
                }
                cursor -= 1;
                cursor = limit - v_4;
            }
            lab0_1:;
            bra = cursor;
            slice_del();
        }
        else {
            slice_del();
        }
        return true;
    }

    bool r_residual_suffix() {
        int v_1 = 0, v_2 = 0, among_var = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(among_var);
        ket = cursor;
        among_var = find_among_b(a_9);
        if (among_var == 0) {
            return false;
        }
        bra = cursor;
        if (among_var == 1) {
            if (!r_RV()) {
                return false;
            }
            slice_del();
        }
        else {
            if (!r_RV()) {
                return false;
            }
            slice_del();
            v_1 = limit - cursor;
            {
                ket = cursor;
                if (cursor <= limit_backward || current[cursor - 1] != U'u') {
                    cursor = limit - v_1;
                    goto lab0_1;
                }
                cursor -= 1;
                bra = cursor;
                v_2 = limit - cursor;
                if (cursor <= limit_backward || current[cursor - 1] != U'g') {
                    cursor = limit - v_1;
                    goto lab0_1;
                }
                cursor -= 1;
                cursor = limit - v_2;
                if (!r_RV()) {
                    cursor = limit - v_1;
                    goto lab0_1;
                }
                slice_del();
            }
            lab0_1:;
        }
        return true;
    }

    bool stem() {
        int v_1 = 0, v_2 = 0, v_3 = 0, v_4 = 0, v_5 = 0;
        static_cast<void>(v_1);
        static_cast<void>(v_2);
        static_cast<void>(v_3);
        static_cast<void>(v_4);
        static_cast<void>(v_5);
        r_mark_regions();
        limit_backward = cursor;
        cursor = limit;
        v_1 = limit - cursor;
        r_attached_pronoun();
        cursor = limit - v_1;
        v_2 = limit - cursor;
        {
            while (true) {
                v_3 = limit - cursor;
                {
                    if (!r_standard_suffix()) {
                        goto lab1_2;
                    }
                    break;
                }
                lab1_2:;
                cursor = limit - v_3;
                {
                    if (!r_y_verb_suffix()) {
                        goto lab1_3;
                    }
                    break;
                }
                lab1_3:;
                cursor = limit - v_3;
                if (!r_verb_suffix()) {
                    goto lab0_1;
                }
                break;
            }
        }
        lab0_1:;
        cursor = limit - v_2;
        v_4 = limit - cursor;
        r_residual_suffix();
        cursor = limit - v_4;
        cursor = limit_backward;
        v_5 = cursor;
        r_postlude();
        cursor = v_5;
        return true;
    }

};

}  // namespace

std::u32string stem_spanish(std::u32string word) {
    SpanishStemmer stemmer;
    return stemmer.run(std::move(word));
}

}  // namespace bicross::stem
