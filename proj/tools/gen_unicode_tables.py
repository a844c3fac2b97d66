#!/usr/bin/env python3
"""Generates the vendored Unicode property tables (src/generated/) and the
normalization test fixtures (tests/data/).

Property source: this interpreter's unicodedata module, which pins the
Unicode version recorded in the generated header. Script ranges come from
the helper dump_script_ranges.js and are filtered down to codepoints the
pinned version assigns, so the shipped snapshot is internally consistent.

Run from the repository root:  python3 tools/gen_unicode_tables.py
"""

import json
import os
import random
import re
import subprocess
import sys
import unicodedata as ud

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
GEN_DIR = os.path.join(ROOT, "src", "generated")
TESTDATA_DIR = os.path.join(ROOT, "tests", "data")
CACHE = os.path.join(ROOT, "tools", ".cache_script_ranges.json")

MAX_CP = 0x110000
SURROGATE_LO, SURROGATE_HI = 0xD800, 0xDFFF

ALGO_NAME = re.compile(
    r"^(CJK UNIFIED IDEOGRAPH|CJK COMPATIBILITY IDEOGRAPH|TANGUT IDEOGRAPH"
    r"|KHITAN SMALL SCRIPT CHARACTER|NUSHU CHARACTER)-[0-9A-F]+$"
    r"|^TANGUT COMPONENT-\d+$"
    r"|^HANGUL SYLLABLE "
)

# Jamo short names (Jamo.txt), validated below against unicodedata's own
# Hangul syllable names.
JAMO_L = ["G", "GG", "N", "D", "DD", "R", "M", "B", "BB", "S", "SS", "",
          "J", "JJ", "C", "K", "T", "P", "H"]
JAMO_V = ["A", "AE", "YA", "YAE", "EO", "E", "YEO", "YE", "O", "WA", "WAE",
          "OE", "YO", "U", "WEO", "WE", "WI", "YU", "EU", "YI", "I"]
JAMO_T = ["", "G", "GG", "GS", "N", "NJ", "NH", "D", "L", "LG", "LM", "LB",
          "LS", "LT", "LP", "LH", "M", "B", "BS", "S", "SS", "NG", "J", "C",
          "K", "T", "P", "H"]


def scalar_values():
    for cp in range(MAX_CP):
        if SURROGATE_LO <= cp <= SURROGATE_HI:
            continue
        yield cp


def load_script_ranges():
    if os.path.exists(CACHE):
        with open(CACHE) as f:
            return json.load(f)
    print("sweeping script properties via node (slow, cached afterwards)...")
    out = subprocess.run(
        ["node", os.path.join(ROOT, "tools", "dump_script_ranges.js")],
        capture_output=True, text=True, check=True)
    data = json.loads(out.stdout)
    with open(CACHE, "w") as f:
        json.dump(data, f)
    return data


def ranges_from_set(cps):
    out = []
    lo = prev = None
    for cp in sorted(cps):
        if lo is None:
            lo = prev = cp
        elif cp == prev + 1:
            prev = cp
        else:
            out.append((lo, prev))
            lo = prev = cp
    if lo is not None:
        out.append((lo, prev))
    return out


def full_decomposition(cp, compat):
    """Fully expanded decomposition; canonical-only unless compat=True.
    Hangul syllables are left alone (handled algorithmically at runtime)."""
    if 0xAC00 <= cp <= 0xD7A3:
        return [cp]
    raw = ud.decomposition(chr(cp))
    if not raw:
        return [cp]
    parts = raw.split()
    if parts[0].startswith("<"):
        if not compat:
            return [cp]
        parts = parts[1:]
    result = []
    for p in parts:
        result.extend(full_decomposition(int(p, 16), compat))
    return result


def main():
    version = ud.unidata_version
    print(f"pinned unicode version: {version}")

    assigned = set()
    names = {}
    categories = {}
    for cp in scalar_values():
        ch = chr(cp)
        cat = ud.category(ch)
        if cat != "Cn":
            assigned.add(cp)
            categories[cp] = cat
        name = ud.name(ch, None)
        if name:
            names[cp] = name

    # -------- scripts --------
    script_data = load_script_ranges()
    print(f"script sweep unicode version: {script_data['unicode']}")
    cp_script = {}
    for sname, ranges in script_data["scripts"].items():
        for lo, hi in ranges:
            for cp in range(lo, hi + 1):
                if cp in assigned:
                    cp_script[cp] = sname
    # Private-use codepoints are assigned but carry Script=Unknown.
    missing = [cp for cp in assigned
               if cp not in cp_script and categories[cp] != "Co"]
    if missing:
        raise SystemExit(
            f"{len(missing)} assigned cps without script, first: "
            f"{[hex(c) for c in missing[:10]]}")

    used_scripts = sorted(set(cp_script.values()) - {"Common", "Inherited"})
    script_ids = {"Unknown": 0, "Common": 1, "Inherited": 2}
    for i, s in enumerate(used_scripts):
        script_ids[s] = 3 + i
    id_scripts = {v: k for k, v in script_ids.items()}

    script_ranges = []
    cur = None
    for cp in range(MAX_CP):
        sid = script_ids.get(cp_script.get(cp, "Unknown"), 0)
        if sid == 0:
            if cur:
                script_ranges.append(cur)
                cur = None
            continue
        if cur and cur[1] == cp - 1 and cur[2] == sid:
            cur = (cur[0], cp, sid)
        else:
            if cur:
                script_ranges.append(cur)
            cur = (cp, cp, sid)
    if cur:
        script_ranges.append(cur)

    # -------- category ranges --------
    mark_cps = {cp for cp, c in categories.items() if c in ("Mn", "Mc", "Me")}
    letter_cps = {cp for cp, c in categories.items() if c.startswith("L")}
    mark_ranges = ranges_from_set(mark_cps)
    letter_ranges = ranges_from_set(letter_cps)

    # -------- decimal digits --------
    digit_zeros = []
    for cp in sorted(assigned):
        if categories[cp] == "Nd":
            v = ud.decimal(chr(cp), None)
            if v == 0:
                digit_zeros.append(cp)
    for z in digit_zeros:
        for d in range(10):
            assert ud.decimal(chr(z + d), None) == d, hex(z)

    # -------- combining classes --------
    ccc_entries = [(cp, ud.combining(chr(cp)))
                   for cp in sorted(assigned) if ud.combining(chr(cp))]

    # -------- decompositions (fully expanded) --------
    canon, compat = [], []
    for cp in sorted(assigned):
        c = full_decomposition(cp, compat=False)
        if c != [cp]:
            canon.append((cp, c))
        k = full_decomposition(cp, compat=True)
        if k != [cp]:
            compat.append((cp, k))

    pool = []
    pool_index = {}

    def intern(seq):
        key = tuple(seq)
        if key in pool_index:
            return pool_index[key]
        off = len(pool)
        pool.extend(seq)
        pool_index[key] = off
        return off

    canon_entries = [(cp, intern(seq), len(seq)) for cp, seq in canon]
    compat_entries = [(cp, intern(seq), len(seq)) for cp, seq in compat]

    # -------- canonical composition pairs --------
    comp_pairs = []
    for cp in sorted(assigned):
        if 0xAC00 <= cp <= 0xD7A3:
            continue
        raw = ud.decomposition(chr(cp))
        if not raw or raw.startswith("<"):
            continue
        parts = [int(p, 16) for p in raw.split()]
        if len(parts) != 2:
            continue
        ch = chr(cp)
        if ud.normalize("NFC", ud.normalize("NFD", ch)) == ch:
            comp_pairs.append((parts[0], parts[1], cp))
    comp_pairs.sort()

    # -------- names --------
    algo_kinds = {
        "CJK UNIFIED IDEOGRAPH-": 0,
        "CJK COMPATIBILITY IDEOGRAPH-": 1,
        "TANGUT IDEOGRAPH-": 2,
        "TANGUT COMPONENT-": 3,
        "KHITAN SMALL SCRIPT CHARACTER-": 4,
        "NUSHU CHARACTER-": 5,
        "HANGUL SYLLABLE ": 6,
    }
    # CPython's unicodedata does not synthesize TANGUT IDEOGRAPH names,
    # though the standard defines them (name derivation rule NR2). Add them
    # for assigned ideographs in the Tangut blocks.
    for lo, hi in ((0x17000, 0x187FF), (0x18D00, 0x18D8F)):
        for cp in range(lo, hi + 1):
            if cp in assigned and categories[cp] == "Lo" and cp not in names:
                names[cp] = f"TANGUT IDEOGRAPH-{cp:04X}"

    algo_cps = {}
    stored_names = {}
    for cp, name in names.items():
        if ALGO_NAME.match(name):
            for prefix, kind in algo_kinds.items():
                if name.startswith(prefix):
                    algo_cps[cp] = kind
                    break
        else:
            stored_names[cp] = name

    algo_ranges = []
    for kind in range(7):
        for lo, hi in ranges_from_set(
                {cp for cp, k in algo_cps.items() if k == kind}):
            algo_ranges.append((lo, hi, kind))
    algo_ranges.sort()

    # validate runtime synthesis rules against unicodedata
    for lo, hi, kind in algo_ranges:
        for cp in range(lo, hi + 1):
            name = names[cp]
            if kind in (0, 1, 2, 4, 5):
                prefix = [k for k, v in algo_kinds.items() if v == kind][0]
                assert name == f"{prefix}{cp:04X}", (hex(cp), name)
            elif kind == 3:
                assert name == f"TANGUT COMPONENT-{cp - 0x18800 + 1:03d}", name
            else:
                s = cp - 0xAC00
                l, v, t = s // 588, (s % 588) // 28, s % 28
                assert name == ("HANGUL SYLLABLE "
                                + JAMO_L[l] + JAMO_V[v] + JAMO_T[t]), name

    name_items = sorted(stored_names.items())
    name_pool = []
    name_offsets = []
    off = 0
    for _, name in name_items:
        name_offsets.append(off)
        name_pool.append(name)
        off += len(name)
    name_offsets.append(off)

    # -------- emit C++ --------
    os.makedirs(GEN_DIR, exist_ok=True)
    hpp = os.path.join(GEN_DIR, "unicode_tables.hpp")
    cpp = os.path.join(GEN_DIR, "unicode_tables.cpp")

    script_enum = ",\n  ".join(
        f"{id_scripts[i]} = {i}" for i in range(len(script_ids)))

    with open(hpp, "w") as f:
        f.write(f"""// Generated by tools/gen_unicode_tables.py -- do not edit.
// Unicode property snapshot, version {version}.
#pragma once

#include <cstddef>
#include <cstdint>

namespace romankit::ucd {{

inline constexpr const char* kUnicodeVersion = "{version}";

enum class Script : uint16_t {{
  {script_enum}
}};

inline constexpr uint16_t kScriptCount = {len(script_ids)};

struct ScriptRange {{ uint32_t lo; uint32_t hi; uint16_t script; }};
struct Range {{ uint32_t lo; uint32_t hi; }};
struct CccEntry {{ uint32_t cp; uint8_t ccc; }};
struct DecompEntry {{ uint32_t cp; uint32_t offset; uint16_t len; }};
struct CompEntry {{ uint32_t first; uint32_t second; uint32_t composite; }};
struct AlgoNameRange {{ uint32_t lo; uint32_t hi; uint8_t kind; }};

// AlgoNameRange kinds: 0 CJK UNIFIED IDEOGRAPH-XXXX, 1 CJK COMPATIBILITY
// IDEOGRAPH-XXXX, 2 TANGUT IDEOGRAPH-XXXX, 3 TANGUT COMPONENT-NNN (decimal,
// cp-0x18800+1), 4 KHITAN SMALL SCRIPT CHARACTER-XXXX, 5 NUSHU
// CHARACTER-XXXX, 6 HANGUL SYLLABLE (jamo composition).

extern const char* const kScriptNames[{len(script_ids)}];
extern const ScriptRange kScriptRanges[];
extern const size_t kScriptRangeCount;
extern const Range kMarkRanges[];
extern const size_t kMarkRangeCount;
extern const Range kLetterRanges[];
extern const size_t kLetterRangeCount;
extern const uint32_t kDigitZeros[];
extern const size_t kDigitZeroCount;
extern const CccEntry kCcc[];
extern const size_t kCccCount;
extern const DecompEntry kCanonDecomp[];
extern const size_t kCanonDecompCount;
extern const DecompEntry kCompatDecomp[];
extern const size_t kCompatDecompCount;
extern const char32_t kDecompPool[];
extern const CompEntry kComp[];
extern const size_t kCompCount;
extern const AlgoNameRange kAlgoNameRanges[];
extern const size_t kAlgoNameRangeCount;
extern const uint32_t kNameCps[];
extern const size_t kNameCount;
extern const uint32_t kNameOffsets[];  // kNameCount + 1 entries
extern const char kNamePool[];
extern const char* const kJamoL[19];
extern const char* const kJamoV[21];
extern const char* const kJamoT[28];

}}  // namespace romankit::ucd
""")

    def fmt_rows(rows, per_line=6):
        lines = []
        for i in range(0, len(rows), per_line):
            lines.append("  " + " ".join(rows[i:i + per_line]))
        return "\n".join(lines)

    W = []
    W.append(f"""// Generated by tools/gen_unicode_tables.py -- do not edit.
// Unicode property snapshot, version {version}.
#include "unicode_tables.hpp"

namespace romankit::ucd {{
""")
    W.append(f"const char* const kScriptNames[{len(script_ids)}] = {{\n"
             + fmt_rows([f'"{id_scripts[i]}",' for i in range(len(script_ids))], 4)
             + "\n};\n")

    W.append("const ScriptRange kScriptRanges[] = {\n" + fmt_rows(
        [f"{{0x{lo:X},0x{hi:X},{sid}}}," for lo, hi, sid in script_ranges])
        + "\n};\n"
        f"const size_t kScriptRangeCount = {len(script_ranges)};\n")

    W.append("const Range kMarkRanges[] = {\n" + fmt_rows(
        [f"{{0x{lo:X},0x{hi:X}}}," for lo, hi in mark_ranges]) + "\n};\n"
        f"const size_t kMarkRangeCount = {len(mark_ranges)};\n")

    W.append("const Range kLetterRanges[] = {\n" + fmt_rows(
        [f"{{0x{lo:X},0x{hi:X}}}," for lo, hi in letter_ranges]) + "\n};\n"
        f"const size_t kLetterRangeCount = {len(letter_ranges)};\n")

    W.append("const uint32_t kDigitZeros[] = {\n" + fmt_rows(
        [f"0x{z:X}," for z in digit_zeros], 8) + "\n};\n"
        f"const size_t kDigitZeroCount = {len(digit_zeros)};\n")

    W.append("const CccEntry kCcc[] = {\n" + fmt_rows(
        [f"{{0x{cp:X},{c}}}," for cp, c in ccc_entries]) + "\n};\n"
        f"const size_t kCccCount = {len(ccc_entries)};\n")

    W.append("const char32_t kDecompPool[] = {\n" + fmt_rows(
        [f"0x{c:X}," for c in pool], 10) + "\n};\n")

    W.append("const DecompEntry kCanonDecomp[] = {\n" + fmt_rows(
        [f"{{0x{cp:X},{off},{ln}}}," for cp, off, ln in canon_entries])
        + "\n};\n"
        f"const size_t kCanonDecompCount = {len(canon_entries)};\n")

    W.append("const DecompEntry kCompatDecomp[] = {\n" + fmt_rows(
        [f"{{0x{cp:X},{off},{ln}}}," for cp, off, ln in compat_entries])
        + "\n};\n"
        f"const size_t kCompatDecompCount = {len(compat_entries)};\n")

    W.append("const CompEntry kComp[] = {\n" + fmt_rows(
        [f"{{0x{a:X},0x{b:X},0x{c:X}}}," for a, b, c in comp_pairs])
        + "\n};\n"
        f"const size_t kCompCount = {len(comp_pairs)};\n")

    W.append("const AlgoNameRange kAlgoNameRanges[] = {\n" + fmt_rows(
        [f"{{0x{lo:X},0x{hi:X},{k}}}," for lo, hi, k in algo_ranges])
        + "\n};\n"
        f"const size_t kAlgoNameRangeCount = {len(algo_ranges)};\n")

    W.append("const uint32_t kNameCps[] = {\n" + fmt_rows(
        [f"0x{cp:X}," for cp, _ in name_items], 8) + "\n};\n"
        f"const size_t kNameCount = {len(name_items)};\n")

    W.append("const uint32_t kNameOffsets[] = {\n" + fmt_rows(
        [f"{o}," for o in name_offsets], 10) + "\n};\n")

    pool_str = "".join(name_pool)
    chunks = []
    for i in range(0, len(pool_str), 100):
        chunks.append('  "' + pool_str[i:i + 100] + '"')
    W.append("const char kNamePool[] =\n" + "\n".join(chunks) + ";\n")

    for arr, vals in (("kJamoL[19]", JAMO_L), ("kJamoV[21]", JAMO_V),
                      ("kJamoT[28]", JAMO_T)):
        W.append(f"const char* const {arr} = {{"
                 + ", ".join(f'"{v}"' for v in vals) + "};\n")

    W.append("\n}  // namespace romankit::ucd\n")

    with open(cpp, "w") as f:
        f.write("\n".join(W))

    # -------- test fixtures --------
    os.makedirs(TESTDATA_DIR, exist_ok=True)
    rng = random.Random(20240817)

    def esc(s):
        return " ".join(f"{ord(c):04X}" for c in s)

    with open(os.path.join(TESTDATA_DIR, "norm_fixtures.tsv"), "w") as f:
        f.write("# input<TAB>NFC<TAB>NFKD (codepoints in hex)\n")
        samples = []
        seeds = ["é", "é", "්‍", "Å",
                 "ﬁ", "क़", "가", "가",
                 "㌀", "①", "x̨̖́",
                 "ཷ", "ǆ", "ẛ̣"]
        samples.extend(seeds)
        # Known hard cases: squared Hangul (syllables inside a compat
        # mapping), wide ligatures, non-BMP decompositions, singletons.
        for cp in (0x327C, 0x3260, 0xFDFA, 0x0958, 0x1E9B, 0x0390,
                   0x1D160, 0xF900, 0x2FA1D, 0x2126, 0x212B, 0x1F82,
                   0xFB2C, 0x0CCB, 0x0DDD, 0x0931, 0x09CB, 0x0B94):
            samples.append(chr(cp))
            samples.append(chr(cp) + "́")
        assigned_list = sorted(assigned)
        for _ in range(400):
            n = rng.randint(1, 8)
            s = "".join(chr(rng.choice(assigned_list)) for _ in range(n))
            samples.append(s)
        for s in samples:
            f.write(f"{esc(s)}\t{esc(ud.normalize('NFC', s))}\t"
                    f"{esc(ud.normalize('NFKD', s))}\n")

    with open(os.path.join(TESTDATA_DIR, "prop_fixtures.tsv"), "w") as f:
        f.write("# cp<TAB>script<TAB>is_mark<TAB>digit_or_-<TAB>name\n")
        spot = set()
        for _ in range(600):
            spot.add(rng.choice(assigned_list))
        spot.update([0x61, 0x31, 0x91C, 0x17D2, 0x10D0, 0x0969, 0x00E9,
                     0x200D, 0x4E8C, 0xAC01, 0x1F600])
        for cp in sorted(spot):
            f.write(f"{cp:04X}\t{cp_script.get(cp, 'Unknown')}\t"
                    f"{1 if cp in mark_cps else 0}\t"
                    f"{ud.decimal(chr(cp), '-')}\t"
                    f"{names.get(cp, '')}\n")

    print(f"scripts: {len(script_ids)} ids, {len(script_ranges)} ranges")
    print(f"marks: {len(mark_ranges)} ranges, letters: {len(letter_ranges)}")
    print(f"digit runs: {len(digit_zeros)}, ccc: {len(ccc_entries)}")
    print(f"decomp canon/compat: {len(canon_entries)}/{len(compat_entries)},"
          f" pool {len(pool)}")
    print(f"comp pairs: {len(comp_pairs)}")
    print(f"names stored: {len(name_items)} ({len(pool_str)} bytes),"
          f" algo ranges: {len(algo_ranges)}")


if __name__ == "__main__":
    sys.exit(main())
