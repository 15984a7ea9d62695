"""Freeze reference stems from the Python snowballstemmer package.

Words are synthesized as base x suffix, with suffixes drawn from each
stemmer's own among tables, so every rule branch gets exercised.

    python3 tests/oracles/gen_stem_fixtures.py tests/fixtures
"""
import random
import sys
from pathlib import Path

import snowballstemmer
from snowballstemmer import english_stemmer, french_stemmer, german_stemmer, spanish_stemmer

CLASSES = {
    "en": ("english", english_stemmer.EnglishStemmer),
    "es": ("spanish", spanish_stemmer.SpanishStemmer),
    "fr": ("french", french_stemmer.FrenchStemmer),
    "de": ("german", german_stemmer.GermanStemmer),
}

BASES = {
    "en": ["generat", "kill", "virus", "nation", "hop", "run", "happ", "sky", "cri", "agre", "feed", "troubl",
           "sens", "argu", "condition", "relat", "digit", "formal", "electr", "adopt", "communi", "univers",
           "gener", "past", "bias", "tie", "lie", "dying", "news", "howe", "atlas", "cosmos", "early", "only",
           "singl", "proceed", "exceed", "succeed", "inning", "outing", "canning", "herring", "earring",
           "andes", "idly", "gently", "ugly", "skis", "sky", "dies", "spread", "infect", "effect", "vaccin"],
    "es": ["cas", "perr", "habl", "com", "viv", "nacion", "rapid", "feliz", "trabaj", "vacun", "contagi",
           "corr", "enfermed", "luz", "mat", "efic", "tratamient", "pandem", "sanit", "camin", "llam"],
    "fr": ["maison", "chant", "fin", "parl", "nation", "heureu", "rapid", "vaccin", "malad", "trait", "tu",
           "efficac", "lumi", "contag", "pandém", "jou", "finiss", "mang", "aim", "cré", "gouvern"],
    "de": ["haus", "kind", "mach", "spiel", "frei", "schön", "impf", "krank", "wirk", "test", "licht",
           "ansteck", "behandl", "arbeit", "glück", "lauf", "sag", "freund", "schul", "zeit", "bäum"],
}

EXTRA = {
    "en": ["viruses", "killed", "kills", "coronavirus", "effective", "light", "uv", "lights", "generously",
           "consign", "consigned", "consigning", "consignment", "knack", "knackeries", "skies", "dying",
           "lying", "tying", "innings", "outings", "cannings", "proceeds", "exceeding", "succeeded", "news",
           "gently", "early", "idly", "atlas", "cosmos", "bias", "andes", "howe", "communism", "generation",
           "universities", "arsenal", "commune", "'s", "apostrophe's", "yelling", "yay", "y"],
    "es": ["mataría", "vacunación", "enfermedades", "eficaz", "luz", "ultravioleta", "coronavirus",
           "rápidamente", "felicidad", "nacionalidades", "trabajadoras", "corriendo", "cantábamos", "tratamientos"],
    "fr": ["tuer", "lumière", "efficace", "coronavirus", "maladies", "vaccination", "traitements",
           "nationalité", "heureusement", "rapidement", "contagieux", "pandémie", "jouaient", "finissons",
           "gouvernement", "créées", "aimeraient", "ultraviolet", "eau", "yeux", "quand", "qui"],
    "de": ["töten", "licht", "wirksam", "coronavirus", "krankheiten", "impfung", "behandlungen",
           "freundlichkeit", "schönheit", "arbeitete", "glücklich", "häuser", "bäume", "kinder",
           "ansteckend", "ultraviolett", "aufeinanderfolgenden", "größe", "straße", "müssen", "qu", "ueber"],
}


def suffixes(cls):
    out = set()
    for name in dir(cls):
        if name.startswith("a_"):
            for among in getattr(cls, name):
                if among.s:
                    out.add(among.s)
    return sorted(out)


def main(out_dir):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20240611)
    for lang, (algo, cls) in CLASSES.items():
        stemmer = snowballstemmer.stemmer(algo)
        sufs = suffixes(cls)
        words = set(EXTRA[lang])
        for base in BASES[lang]:
            words.add(base)
            for suf in rng.sample(sufs, min(len(sufs), 60)):
                words.add(base + suf)
        for _ in range(1500):
            words.add(rng.choice(BASES[lang]) + rng.choice(sufs) + (rng.choice(sufs) if rng.random() < 0.3 else ""))
        with open(out_dir / f"stem_{lang}.tsv", "w", encoding="utf-8") as fh:
            for w in sorted(words):
                if "\t" in w or "\n" in w:
                    continue
                fh.write(f"{w}\t{stemmer.stemWord(w)}\n")
        print(lang, len(words))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures")
