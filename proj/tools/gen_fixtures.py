#!/usr/bin/env python3
"""Generate the shipped fixture corpora, romanized goldens, and the
Latin-dominant base vocabulary under data/fixtures/.

Synthesizes ≥500-sentence corpora per script from the unit inventory of the
shipped rule tables (seeded, so reruns reproduce the committed files given
the same interpreter), romanizes them once with the built CLI to produce the
golden outputs, and assembles a base vocabulary that is dominantly Latin
(full ASCII letter coverage plus frequent romanized fragments) with a
minority of original-script units.

Usage: tools/gen_fixtures.py [path-to-romankit-binary]
"""

import collections
import json
import pathlib
import random
import subprocess
import sys
import unicodedata

ROOT = pathlib.Path(__file__).resolve().parent.parent
TABLES = ROOT / "data" / "tables"
FIXTURES = ROOT / "data" / "fixtures"

# language label -> (table file, RNG seed)
LANGUAGES = {
    "hindi": ("devanagari.rules", 101),
    "sinhala": ("sinhala.rules", 102),
    "arabic": ("arabic.rules", 103),
    "khmer": ("khmer.rules", 104),
    "russian": ("cyrillic.rules", 105),
    "greek": ("greek.rules", 106),
}

SENTENCES_PER_LANGUAGE = 520
WORD_POOL_SIZE = 400
WORD_LENGTHS = ([1] * 2 + [2] * 5 + [3] * 6 + [4] * 4 + [5] * 3)


def table_units(table_file):
    """Word-formable source units of one rule table: plain (unscoped)
    letter-bearing sources, skipping digits and one-char ASCII targets of
    punctuation-like rows."""
    units = []
    seen = set()
    for line in (TABLES / table_file).read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) < 2 or any(f.startswith("scope=") for f in fields[2:]):
            continue
        source, target = fields[0], fields[1]
        if source in seen:
            continue
        if any(ch.isdigit() or unicodedata.category(ch)[0] in "PSZ"
               for ch in source):
            continue
        if not target or not any(c.isalpha() or c == "'" for c in target):
            continue
        seen.add(source)
        units.append(source)
    if len(units) < 30:
        raise SystemExit(f"{table_file}: only {len(units)} usable units")
    return units


def build_corpus(units, seed):
    rng = random.Random(seed)
    # Zipf-ish unit weights make merges and shared fragments meaningful.
    ranked = units[:]
    rng.shuffle(ranked)
    weights = [1.0 / (rank + 3) for rank in range(len(ranked))]

    pool = []
    seen = set()
    while len(pool) < WORD_POOL_SIZE:
        length = rng.choice(WORD_LENGTHS)
        word = "".join(rng.choices(ranked, weights=weights, k=length))
        if word not in seen:
            seen.add(word)
            pool.append(word)

    word_weights = [1.0 / (rank + 5) for rank in range(len(pool))]
    sentences = []
    for _ in range(SENTENCES_PER_LANGUAGE):
        n_words = rng.randint(3, 8)
        sentences.append(" ".join(rng.choices(pool, weights=word_weights,
                                              k=n_words)))
    return sentences


def romanize(cli, source, destination):
    subprocess.run(
        [cli, "--quiet", "romanize", "--input", str(source), "--output",
         str(destination)],
        check=True,
        cwd=ROOT,
    )


def main():
    cli = sys.argv[1] if len(sys.argv) > 1 else str(ROOT / "build" /
                                                    "romankit")
    FIXTURES.mkdir(parents=True, exist_ok=True)

    corpora = {}
    for language, (table_file, seed) in LANGUAGES.items():
        units = table_units(table_file)
        sentences = build_corpus(units, seed)
        corpora[language] = (units, sentences)
        path = FIXTURES / f"{language}.txt"
        path.write_text("\n".join(sentences) + "\n", encoding="utf-8")
        print(f"{language}: {len(sentences)} sentences from "
              f"{len(units)} units -> {path.relative_to(ROOT)}")

    golden_charset = set()
    word_counts = collections.Counter()
    for language in LANGUAGES:
        source = FIXTURES / f"{language}.txt"
        golden = FIXTURES / f"{language}.roman.txt"
        romanize(cli, source, golden)
        text = golden.read_text(encoding="utf-8")
        if not text or any(ord(c) > 126 for c in text):
            raise SystemExit(f"{golden}: golden is not printable ASCII")
        for line in text.splitlines():
            for word in line.split():
                word_counts[word] += 1
                golden_charset.update(word)
        print(f"{language}: golden -> {golden.relative_to(ROOT)}")

    # ----- Latin-dominant base vocabulary -------------------------------
    tokens = []
    seen = set()

    def add(token):
        if token and token not in seen:
            seen.add(token)
            tokens.append(token)

    for special in ("[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"):
        add(special)
    # Full coverage of the romanized character set plus the ASCII letters
    # and digits, bare and as continuations — the Latin backbone.
    for c in "abcdefghijklmnopqrstuvwxyz0123456789":
        golden_charset.add(c)
    for c in sorted(golden_charset):
        add(c)
        add("##" + c)
    for c in ".,-?!'":
        add(c)
        add("##" + c)

    # Frequent romanized words and their continuation suffixes: the Latin
    # subword inventory a multilingual base model would carry.
    top_words = [w for w, _ in word_counts.most_common(300)]
    for word in top_words:
        add(word)
    suffix_counts = collections.Counter()
    for word, count in word_counts.items():
        for start in range(1, min(len(word), 6)):
            suffix = word[start:]
            if 1 < len(suffix) <= 6:
                suffix_counts["##" + suffix] += count
    for suffix, _ in suffix_counts.most_common(200):
        add(suffix)

    # A minority of original-script units, bare only (no continuations):
    # the token-level long tail such models keep for foreign scripts.
    rng = random.Random(9)
    original_units = []
    for language, (units, _sentences) in corpora.items():
        picked = rng.sample(units, min(40, len(units)))
        original_units.extend(picked)
    for unit in original_units:
        add(unit)

    latin_count = sum(1 for t in tokens if all(ord(c) < 128 for c in t))
    base_path = FIXTURES / "base.vocab"
    base_path.write_text("\n".join(tokens) + "\n", encoding="utf-8")
    print(f"base vocabulary: {len(tokens)} tokens "
          f"({latin_count} Latin, {len(tokens) - latin_count} original-"
          f"script) -> {base_path.relative_to(ROOT)}")

    manifest = {
        "languages": {
            lang: {
                "table": LANGUAGES[lang][0],
                "seed": LANGUAGES[lang][1],
                "sentences": SENTENCES_PER_LANGUAGE,
            }
            for lang in LANGUAGES
        },
        "base_vocab_tokens": len(tokens),
        "base_vocab_latin_tokens": latin_count,
    }
    (FIXTURES / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n",
        encoding="utf-8")


if __name__ == "__main__":
    main()
