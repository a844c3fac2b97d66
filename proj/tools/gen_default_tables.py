#!/usr/bin/env python3
"""Generates the shipped romanization tables in data/tables/.

Most tables are curated codepoint→Latin maps with cluster rules expanded
for abugidas (consonant × vowel-sign / virama combinations). Ethiopic is
derived from character names; Han readings come from the pinyin-pro
package via tools/dump_pinyin.js (run `npm install` inside tools/ first).

Run from the repository root:  python3 tools/gen_default_tables.py
"""

import os
import subprocess
import sys
import unicodedata as ud

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
OUT_DIR = os.path.join(ROOT, "data", "tables")


def header(title, extra=()):
    lines = [f"# {title}",
             "# format: source<TAB>target[<TAB>scope=...][<TAB>prio=...]",
             "# generated by tools/gen_default_tables.py; do not hand-edit"]
    lines.extend(f"# {x}" for x in extra)
    return lines


def write_table(name, lines):
    os.makedirs(OUT_DIR, exist_ok=True)
    path = os.path.join(OUT_DIR, name + ".rules")
    kept = []
    dropped = 0
    seen = set()
    for line in lines:
        if line and line[0] != "#":
            source = ud.normalize("NFKD", line.split("\t")[0])
            # The engine matches over compatibility-decomposed text and
            # passes ASCII through; a source that normalizes to ASCII can
            # never fire and would be rejected by the loader. Sources that
            # collide after normalization keep their first entry.
            if all(ord(c) < 0x80 for c in source) or source in seen:
                dropped += 1
                continue
            seen.add(source)
        kept.append(line)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in kept:
            f.write(line + "\n")
    note = f" ({dropped} redundant after normalization, dropped)" \
        if dropped else ""
    print(f"{name}.rules: "
          f"{sum(1 for l in kept if l and l[0] != '#')} rules{note}")


def rule(source, target):
    assert source and "\t" not in source
    assert all(0x20 <= ord(c) <= 0x7E for c in target), repr(target)
    return f"{source}\t{target}"


# --------------------------------------------------------------------------
# Devanagari: consonants carry inherent "a"; vowel signs replace it; virama
# strips it; word-final schwa handling lives in the engine.

DEVA_CONSONANTS = {
    "क": "k", "ख": "kh", "ग": "g", "घ": "gh", "ङ": "ng",
    "च": "ch", "छ": "chh", "ज": "j", "झ": "jh", "ञ": "ny",
    "ट": "t", "ठ": "th", "ड": "d", "ढ": "dh", "ण": "n",
    "त": "t", "थ": "th", "द": "d", "ध": "dh", "न": "n",
    "प": "p", "फ": "ph", "ब": "b", "भ": "bh", "म": "m",
    "य": "y", "र": "r", "ल": "l", "ळ": "l", "व": "v",
    "श": "sh", "ष": "sh", "स": "s", "ह": "h",
    # nukta letters (decompose to base + nukta; the loader normalizes)
    "क़": "q", "ख़": "kh", "ग़": "g", "ज़": "z", "ड़": "r", "ढ़": "rh",
    "फ़": "f", "य़": "y",
}

DEVA_SIGNS = {
    "ा": "aa", "ि": "i", "ी": "ii", "ु": "u", "ू": "uu",
    "ृ": "ri", "ॄ": "rri", "ॅ": "e", "ॆ": "e", "े": "e", "ै": "ai",
    "ॉ": "o", "ॊ": "o", "ो": "o", "ौ": "au",
}

DEVA_VIRAMA = "्"

DEVA_STANDALONE = {
    "अ": "a", "आ": "aa", "इ": "i", "ई": "ii", "उ": "u", "ऊ": "uu",
    "ऋ": "ri", "ॠ": "rri", "ऌ": "li", "ॡ": "lli",
    "ऍ": "e", "ऎ": "e", "ए": "e", "ऐ": "ai",
    "ऑ": "o", "ऒ": "o", "ओ": "o", "औ": "au",
    "ं": "n", "ँ": "n", "ः": "h",
    "ॐ": "om", "ऽ": "'",
    "।": ".", "॥": ".",
    DEVA_VIRAMA: "", "़": "",
}


def devanagari():
    lines = header("Devanagari")
    for cons, base in DEVA_CONSONANTS.items():
        lines.append(rule(cons, base + "a"))
        lines.append(rule(cons + DEVA_VIRAMA, base))
        for sign, v in DEVA_SIGNS.items():
            lines.append(rule(cons + sign, base + v))
    for src, tgt in DEVA_STANDALONE.items():
        lines.append(rule(src, tgt))
    for sign, v in DEVA_SIGNS.items():
        lines.append(rule(sign, v))  # orphan sign: emit its vowel
    return lines


# --------------------------------------------------------------------------
# Sinhala: same abugida scheme; al-lakuna is the vowel killer.

SINH_CONSONANTS = {
    "ක": "k", "ඛ": "kh", "ග": "g", "ඝ": "gh", "ඞ": "ng", "ඟ": "ng",
    "ච": "ch", "ඡ": "chh", "ජ": "j", "ඣ": "jh", "ඤ": "ny", "ඥ": "gn",
    "ඦ": "nj", "ට": "t", "ඨ": "tt", "ඩ": "d", "ඪ": "dd", "ණ": "n",
    "ඬ": "nd", "ත": "t", "ථ": "th", "ද": "d", "ධ": "dh", "න": "n",
    "ඳ": "nd", "ප": "p", "ඵ": "ph", "බ": "b", "භ": "bh", "ම": "m",
    "ඹ": "mb", "ය": "y", "ර": "r", "ල": "l", "ව": "v", "ශ": "sh",
    "ෂ": "sh", "ස": "s", "හ": "h", "ළ": "l", "ෆ": "f",
}

SINH_SIGNS = {
    "ා": "aa", "ැ": "ae", "ෑ": "aae", "ි": "i", "ී": "ii",
    "ු": "u", "ූ": "uu", "ෘ": "ru", "ෲ": "ruu", "ෟ": "lu",
    "ෙ": "e", "ේ": "ee", "ෛ": "ai",
    "ො": "o", "ෝ": "oo", "ෞ": "au",
}

SINH_VIRAMA = "්"

SINH_STANDALONE = {
    "අ": "a", "ආ": "aa", "ඇ": "ae", "ඈ": "aae", "ඉ": "i", "ඊ": "ii",
    "උ": "u", "ඌ": "uu", "ඍ": "ri", "ඎ": "rii", "ඏ": "li", "ඐ": "lii",
    "එ": "e", "ඒ": "ee", "ඓ": "ai", "ඔ": "o", "ඕ": "oo", "ඖ": "au",
    "ං": "n", "ඃ": "h",
    SINH_VIRAMA: "",
}


def sinhala():
    lines = header("Sinhala")
    for cons, base in SINH_CONSONANTS.items():
        lines.append(rule(cons, base + "a"))
        lines.append(rule(cons + SINH_VIRAMA, base))
        for sign, v in SINH_SIGNS.items():
            lines.append(rule(cons + sign, base + v))
    for src, tgt in SINH_STANDALONE.items():
        lines.append(rule(src, tgt))
    for sign, v in SINH_SIGNS.items():
        lines.append(rule(sign, v))
    return lines


# --------------------------------------------------------------------------
# Arabic script, including letters used by Sindhi, Urdu, Uyghur, Kurdish.

ARABIC = {
    "ا": "a", "ب": "b", "ت": "t", "ث": "th", "ج": "j", "ح": "h",
    "خ": "kh", "د": "d", "ذ": "dh", "ر": "r", "ز": "z", "س": "s",
    "ش": "sh", "ص": "s", "ض": "d", "ط": "t", "ظ": "z", "ع": "'",
    "غ": "gh", "ف": "f", "ق": "q", "ك": "k", "ل": "l", "م": "m",
    "ن": "n", "ه": "h", "و": "w", "ي": "y",
    "ء": "'", "آ": "aa", "أ": "a", "ؤ": "u", "إ": "i", "ئ": "y",
    "ة": "h", "ى": "a", "ٱ": "a",
    # Persian / Urdu / Sindhi / Pashto extensions
    "پ": "p", "چ": "ch", "ژ": "zh", "گ": "g", "ک": "k", "ی": "y",
    "ے": "e", "ٹ": "t", "ڈ": "d", "ڑ": "r", "ں": "n", "ہ": "h",
    "ھ": "h", "ۂ": "h", "ۃ": "h", "ۓ": "e",
    "ٻ": "b", "ڀ": "bh", "ٺ": "th", "ٽ": "t", "ٿ": "th", "ڄ": "j",
    "ڃ": "ny", "ڇ": "chh", "ڊ": "d", "ڌ": "dh", "ڍ": "dh", "ڏ": "d",
    "ڙ": "r", "ڦ": "ph", "ڻ": "n", "ڪ": "k", "ڳ": "g", "ڱ": "ng",
    # Uyghur / Kurdish vowels and consonants
    "ې": "e", "ۆ": "o", "ۇ": "u", "ۈ": "u", "ۋ": "w", "ە": "e",
    "ڭ": "ng", "ڵ": "l", "ڕ": "r", "ڤ": "v",
    # harakat and modifiers
    "َ": "a", "ِ": "i", "ُ": "u", "ً": "an", "ٍ": "in", "ٌ": "un",
    "ْ": "", "ّ": "", "ٰ": "a", "ٔ": "", "ٕ": "",
    "ـ": "",
    # punctuation
    "،": ",", "؛": ";", "؟": "?", "۔": ".", "٪": "%", "٫": ".",
    "٬": ",",
}


def arabic():
    lines = header("Arabic script (Arabic, Sindhi, Urdu, Uyghur, Kurdish)")
    for src, tgt in ARABIC.items():
        lines.append(rule(src, tgt))
    return lines


# --------------------------------------------------------------------------
# Cyrillic, with extensions used by Uralic and Mongolic languages.

CYRILLIC_LOWER = {
    "а": "a", "б": "b", "в": "v", "г": "g", "д": "d", "е": "e",
    "ё": "yo", "ж": "zh", "з": "z", "и": "i", "й": "y", "к": "k",
    "л": "l", "м": "m", "н": "n", "о": "o", "п": "p", "р": "r",
    "с": "s", "т": "t", "у": "u", "ф": "f", "х": "kh", "ц": "ts",
    "ч": "ch", "ш": "sh", "щ": "shch", "ъ": "", "ы": "y", "ь": "",
    "э": "e", "ю": "yu", "я": "ya",
    # Ukrainian / Belarusian / Serbian / Macedonian
    "і": "i", "ї": "yi", "є": "ye", "ґ": "g", "ў": "w",
    "ђ": "dj", "ј": "j", "љ": "lj", "њ": "nj", "ћ": "c", "џ": "dzh",
    "ѓ": "gj", "ќ": "kj", "ѕ": "dz",
    # Uralic (Mari, Erzya, Komi), Turkic, Mongolic extensions
    "ӱ": "u", "ӧ": "o", "ӹ": "y", "ӓ": "a", "ҥ": "ng", "ӥ": "i",
    "ә": "a", "ө": "o", "ү": "u", "һ": "h", "җ": "j", "ң": "ng",
    "ғ": "gh", "қ": "q", "ҳ": "h", "ҷ": "j", "ҹ": "j", "ӣ": "ii",
    "ӯ": "uu", "ҕ": "g", "ҡ": "q", "ҙ": "z", "ҫ": "s", "ӝ": "dzh",
    "ӟ": "dz", "ӵ": "ch", "ӑ": "a", "ӗ": "e", "ҽ": "ch", "ҿ": "ch",
    "ӏ": "'", "ѣ": "e",
}


def cyrillic():
    lines = header("Cyrillic, with Uralic/Turkic/Mongolic extensions")
    for src, tgt in CYRILLIC_LOWER.items():
        lines.append(rule(src, tgt))
        upper = src.upper()
        if upper != src and len(upper) == 1:
            lines.append(rule(upper, tgt))
    return lines


# --------------------------------------------------------------------------
# Georgian: mkhedruli plus the mtavruli and asomtavruli case ranges.

GEORGIAN = {
    "ა": "a", "ბ": "b", "გ": "g", "დ": "d", "ე": "e", "ვ": "v",
    "ზ": "z", "თ": "t", "ი": "i", "კ": "k", "ლ": "l", "მ": "m",
    "ნ": "n", "ო": "o", "პ": "p", "ჟ": "zh", "რ": "r", "ს": "s",
    "ტ": "t", "უ": "u", "ფ": "p", "ქ": "k", "ღ": "gh", "ყ": "q",
    "შ": "sh", "ჩ": "ch", "ც": "ts", "ძ": "dz", "წ": "ts", "ჭ": "ch",
    "ხ": "kh", "ჯ": "j", "ჰ": "h", "ჱ": "he", "ჲ": "y", "ჳ": "w",
    "ჴ": "qh", "ჵ": "oh", "ჶ": "f", "ჷ": "e", "ჸ": "y", "ჹ": "g",
    "ჺ": "a",
}


def georgian():
    lines = header("Georgian")
    for src, tgt in GEORGIAN.items():
        lines.append(rule(src, tgt))
        cp = ord(src)
        if 0x10D0 <= cp <= 0x10FA:
            mtavruli = cp - 0x10D0 + 0x1C90
            lines.append(rule(chr(mtavruli), tgt))
            if cp <= 0x10F5:
                asomtavruli = cp - 0x10D0 + 0x10A0
                lines.append(rule(chr(asomtavruli), tgt))
    return lines


# --------------------------------------------------------------------------
# Ethiopic: syllable values come straight from character names
# ("ETHIOPIC SYLLABLE QWA" → "qwa").

def ethiopic():
    lines = header("Ethiopic", ["syllable values from character names"])
    for cp in list(range(0x1200, 0x13A0)) + list(range(0x2D80, 0x2DE0)) + \
            list(range(0xAB00, 0xAB30)):
        name = ud.name(chr(cp), "")
        if " SYLLABLE " not in name:
            continue
        token = name.split()[-1].lower()
        value = "".join(c for c in token if c.isalpha())
        if value:
            lines.append(rule(chr(cp), value))
    punct = {"፡": " ", "።": ".", "፣": ",", "፤": ";", "፥": ":", "፦": ":",
             "፧": "?", "፨": ".",
             "፩": "1", "፪": "2", "፫": "3", "፬": "4", "፭": "5",
             "፮": "6", "፯": "7", "፰": "8", "፱": "9", "፲": "10",
             "፳": "20", "፴": "30", "፵": "40", "፶": "50", "፷": "60",
             "፸": "70", "፹": "80", "፺": "90", "፻": "100", "፼": "10000"}
    for src, tgt in punct.items():
        lines.append(rule(src, tgt))
    return lines


# --------------------------------------------------------------------------
# Thaana: consonants are bare; the fili signs carry every vowel.

THAANA_CONSONANTS = {
    "ހ": "h", "ށ": "sh", "ނ": "n", "ރ": "r", "ބ": "b", "ޅ": "lh",
    "ކ": "k", "އ": "", "ވ": "v", "މ": "m", "ފ": "f", "ދ": "dh",
    "ތ": "th", "ލ": "l", "ގ": "g", "ޏ": "gn", "ސ": "s", "ޑ": "d",
    "ޒ": "z", "ޓ": "t", "ޔ": "y", "ޕ": "p", "ޖ": "j", "ޗ": "ch",
    "ޘ": "th", "ޙ": "h", "ޚ": "kh", "ޛ": "dh", "ޜ": "z", "ޝ": "sh",
    "ޞ": "s", "ޟ": "d", "ޠ": "t", "ޡ": "z", "ޢ": "a", "ޣ": "gh",
    "ޤ": "q", "ޥ": "w",
}

THAANA_SIGNS = {
    "ަ": "a", "ާ": "aa", "ި": "i", "ީ": "ee", "ު": "u", "ޫ": "oo",
    "ެ": "e", "ޭ": "ey", "ޮ": "o", "ޯ": "oa", "ް": "",
}


def thaana():
    lines = header("Thaana")
    for src, tgt in THAANA_CONSONANTS.items():
        if tgt == "":
            # alifu is a pure vowel carrier; keep it only as sign clusters
            for sign, v in THAANA_SIGNS.items():
                if v:
                    lines.append(rule(src + sign, v))
            lines.append(rule(src, "a"))
            lines.append(rule(src + "ް", ""))
            continue
        lines.append(rule(src, tgt))
    for sign, v in THAANA_SIGNS.items():
        lines.append(rule(sign, v))
    return lines


# --------------------------------------------------------------------------
# Khmer: letter names carry base + inherent vowel ("KHMER LETTER KO" → k/o);
# coeng acts as a vowel killer on the preceding consonant.

KHMER_INDEPENDENT = {
    "ឥ": "i", "ឦ": "ii", "ឧ": "u", "ឨ": "uk", "ឩ": "uu", "ឪ": "uuv",
    "ឫ": "ry", "ឬ": "ryy", "ឭ": "ly", "ឮ": "lyy", "ឯ": "e", "ឰ": "ai",
    "ឱ": "o", "ឲ": "o", "ឳ": "au",
}

KHMER_SIGNS = {
    "ា": "aa", "ិ": "i", "ី": "ii", "ឹ": "oe", "ឺ": "oeu", "ុ": "u",
    "ូ": "uu", "ួ": "uo", "ើ": "aeu", "ឿ": "oea", "ៀ": "ie", "េ": "e",
    "ែ": "ae", "ៃ": "ai", "ោ": "ao", "ៅ": "au", "ំ": "am", "ះ": "ah",
    "ៈ": "a",
}

KHMER_COENG = "្"

KHMER_SILENT_SIGNS = ["៉", "៊", "់", "៌", "៍", "៎", "៏", "័", "៑", "៝"]


def khmer():
    lines = header("Khmer", ["letter values from character names"])
    for cp in range(0x1780, 0x17A3):
        ch = chr(cp)
        name = ud.name(ch, "")
        if not name.startswith("KHMER LETTER "):
            continue
        value = name.split()[-1].lower()
        if ch == "អ":
            value, base = "a", ""
        else:
            base = value.rstrip("aeiou")
        lines.append(rule(ch, value))
        lines.append(rule(ch + KHMER_COENG, base))
        for sign, v in KHMER_SIGNS.items():
            lines.append(rule(ch + sign, base + v))
    for src, tgt in KHMER_INDEPENDENT.items():
        lines.append(rule(src, tgt))
    for sign, v in KHMER_SIGNS.items():
        lines.append(rule(sign, v))
    for sign in KHMER_SILENT_SIGNS:
        lines.append(rule(sign, ""))
    lines.append(rule(KHMER_COENG, ""))
    lines.append(rule("។", "."))
    lines.append(rule("៕", "."))
    lines.append(rule("៖", ":"))
    return lines


# --------------------------------------------------------------------------
# Tibetan: Wylie-like bare consonants (no inherent vowel); explicit vowel
# signs; tsek maps to a space so downstream whitespace tokenization sees
# word-sized units.

TIBETAN_LETTERS = {
    "ཀ": "k", "ཁ": "kh", "ག": "g", "ང": "ng", "ཅ": "c", "ཆ": "ch",
    "ཇ": "j", "ཉ": "ny", "ཊ": "t", "ཋ": "th", "ཌ": "d", "ཎ": "n",
    "ཏ": "t", "ཐ": "th", "ད": "d", "ན": "n", "པ": "p", "ཕ": "ph",
    "བ": "b", "མ": "m", "ཙ": "ts", "ཚ": "tsh", "ཛ": "dz", "ཝ": "w",
    "ཞ": "zh", "ཟ": "z", "འ": "'", "ཡ": "y", "ར": "r", "ལ": "l",
    "ཤ": "sh", "ཥ": "sh", "ས": "s", "ཧ": "h",
}

TIBETAN_SIGNS = {
    "ི": "i", "ུ": "u", "ེ": "e", "ོ": "o", "ཱ": "aa", "ྀ": "i",
    "ཻ": "ai", "ཽ": "au",
}


def tibetan():
    lines = header("Tibetan", ["bare-consonant (Wylie-like) scheme"])
    for src, tgt in TIBETAN_LETTERS.items():
        lines.append(rule(src, tgt))
        # each letter has a subjoined form one fixed offset away
        sub = chr(ord(src) + 0x50)
        if ud.name(sub, "").startswith("TIBETAN SUBJOINED LETTER"):
            lines.append(rule(sub, tgt))
    lines.append(rule("ཨ", "a"))
    for sign, v in TIBETAN_SIGNS.items():
        lines.append(rule("ཨ" + sign, v))
        lines.append(rule(sign, v))
    lines.append(rule("ྸ", "a"))
    lines.append(rule("ཪ", "r"))   # fixed-form ra
    lines.append(rule("་", " "))   # tsek: word separator
    lines.append(rule("༌", " "))   # no-break tsek
    lines.append(rule("།", "."))
    lines.append(rule("༎", "."))
    lines.append(rule("༄", ""))
    lines.append(rule("༅", ""))
    lines.append(rule("༔", ":"))
    lines.append(rule("ཿ", "h"))
    lines.append(rule("ཾ", "m"))
    return lines


# --------------------------------------------------------------------------
# Hangul: the engine decomposes syllables to conjoining jamo, so the table
# is written in jamo (revised-romanization-like values).

HANGUL_INITIAL = ["g", "kk", "n", "d", "tt", "r", "m", "b", "pp", "s",
                  "ss", "", "j", "jj", "ch", "k", "t", "p", "h"]
HANGUL_MEDIAL = ["a", "ae", "ya", "yae", "eo", "e", "yeo", "ye", "o", "wa",
                 "wae", "oe", "yo", "u", "wo", "we", "wi", "yu", "eu", "ui",
                 "i"]
HANGUL_FINAL = ["g", "kk", "ks", "n", "nj", "nh", "d", "l", "lg", "lm",
                "lb", "ls", "lt", "lp", "lh", "m", "b", "bs", "s", "ss",
                "ng", "j", "ch", "k", "t", "p", "h"]


def hangul():
    lines = header("Hangul (conjoining jamo)")
    for i, v in enumerate(HANGUL_INITIAL):
        lines.append(rule(chr(0x1100 + i), v))
    for i, v in enumerate(HANGUL_MEDIAL):
        lines.append(rule(chr(0x1161 + i), v))
    for i, v in enumerate(HANGUL_FINAL):
        lines.append(rule(chr(0x11A8 + i), v))
    return lines


# --------------------------------------------------------------------------
# Han: toneless pinyin readings from pinyin-pro.

def han():
    dump = subprocess.run(
        ["node", os.path.join(ROOT, "tools", "dump_pinyin.js")],
        capture_output=True, text=True, check=True)
    lines = header("Han (toneless pinyin readings via pinyin-pro)")
    count = 0
    for entry in dump.stdout.splitlines():
        ch, reading = entry.split("\t")
        lines.append(rule(ch, reading))
        count += 1
    assert count > 20000, count
    lines.append(rule("〇", "ling"))  # ideographic zero: outside the block
    return lines


# --------------------------------------------------------------------------
# Greek and Hebrew.

GREEK = {
    "α": "a", "β": "v", "γ": "g", "δ": "d", "ε": "e", "ζ": "z",
    "η": "i", "θ": "th", "ι": "i", "κ": "k", "λ": "l", "μ": "m",
    "ν": "n", "ξ": "x", "ο": "o", "π": "p", "ρ": "r", "σ": "s",
    "ς": "s", "τ": "t", "υ": "y", "φ": "f", "χ": "ch", "ψ": "ps",
    "ω": "o",
}


def greek():
    lines = header("Greek")
    for src, tgt in GREEK.items():
        lines.append(rule(src, tgt))
        upper = src.upper()
        if upper != src and len(upper) == 1 and upper != "Σ":
            lines.append(rule(upper, tgt))
    lines.append(rule("Σ", "s"))  # shared uppercase of sigma/final sigma
    return lines


HEBREW = {
    "א": "a", "ב": "b", "ג": "g", "ד": "d", "ה": "h", "ו": "v",
    "ז": "z", "ח": "ch", "ט": "t", "י": "y", "כ": "k", "ך": "k",
    "ל": "l", "מ": "m", "ם": "m", "נ": "n", "ן": "n", "ס": "s",
    "ע": "'", "פ": "p", "ף": "f", "צ": "ts", "ץ": "ts", "ק": "k",
    "ר": "r", "ש": "sh", "ת": "t",
    "׳": "'", "״": "\"",
}


def hebrew():
    lines = header("Hebrew")
    for src, tgt in HEBREW.items():
        lines.append(rule(src, tgt))
    return lines


# --------------------------------------------------------------------------
# Script-independent punctuation and symbols.

COMMON = {
    "。": ".", "、": ",", "，": ",", "；": ";", "：": ":", "？": "?",
    "！": "!", "（": "(", "）": ")", "【": "(", "】": ")", "《": "\"",
    "》": "\"", "「": "\"", "」": "\"", "『": "\"", "』": "\"",
    "〈": "\"", "〉": "\"", "〔": "(", "〕": ")", "・": " ",
    "–": "-", "—": "-", "―": "-", "‐": "-",
    "‘": "'", "’": "'", "‚": "'", "“": "\"", "”": "\"", "„": "\"",
    "‹": "'", "›": "'", "«": "\"", "»": "\"",
    "…": "...", "•": "-", "·": "-", "⁄": "/", "′": "'", "″": "\"",
    "※": "*", "〜": "~", "¡": "!", "¿": "?", "±": "+-", "×": "x",
    "÷": "/", "−": "-", "†": "+", "‡": "+", "§": "s", "¶": "p",
}


def common():
    lines = header("Common punctuation and symbols")
    for src, tgt in COMMON.items():
        lines.append(rule(src, tgt))
    return lines


def main():
    write_table("arabic", arabic())
    write_table("common", common())
    write_table("cyrillic", cyrillic())
    write_table("devanagari", devanagari())
    write_table("ethiopic", ethiopic())
    write_table("georgian", georgian())
    write_table("greek", greek())
    write_table("han", han())
    write_table("hangul", hangul())
    write_table("hebrew", hebrew())
    write_table("khmer", khmer())
    write_table("sinhala", sinhala())
    write_table("thaana", thaana())
    write_table("tibetan", tibetan())


if __name__ == "__main__":
    sys.exit(main())
