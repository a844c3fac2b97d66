#include "romankit/unicode.hpp"

#include <algorithm>
#include <cstdio>

namespace romankit {

namespace {

using ucd::AlgoNameRange;
using ucd::CccEntry;
using ucd::CompEntry;
using ucd::DecompEntry;
using ucd::Range;
using ucd::ScriptRange;

// Hangul syllable composition constants (Unicode chapter 3.12).
constexpr char32_t kSBase = 0xAC00;
constexpr char32_t kLBase = 0x1100;
constexpr char32_t kVBase = 0x1161;
constexpr char32_t kTBase = 0x11A7;
constexpr int kLCount = 19;
constexpr int kVCount = 21;
constexpr int kTCount = 28;
constexpr int kNCount = kVCount * kTCount;  // 588
constexpr int kSCount = kLCount * kNCount;  // 11172

template <typename T>
const T* find_in_ranges(const T* first, size_t count, char32_t cp) {
  const T* last = first + count;
  auto it = std::upper_bound(first, last, cp, [](char32_t v, const T& r) {
    return v < r.lo;
  });
  if (it == first) return nullptr;
  --it;
  return cp <= it->hi ? &*it : nullptr;
}

const DecompEntry* find_decomp(const DecompEntry* first, size_t count,
                               char32_t cp) {
  const DecompEntry* last = first + count;
  auto it = std::lower_bound(first, last, cp,
                             [](const DecompEntry& e, char32_t v) {
                               return e.cp < v;
                             });
  return (it != last && it->cp == cp) ? &*it : nullptr;
}

bool is_hangul_syllable(char32_t cp) {
  return cp >= kSBase && cp < kSBase + kSCount;
}

void append_hangul_decomposition(char32_t cp, std::u32string& out) {
  char32_t s = cp - kSBase;
  out.push_back(kLBase + s / kNCount);
  out.push_back(kVBase + (s % kNCount) / kTCount);
  char32_t t = s % kTCount;
  if (t != 0) out.push_back(kTBase + t);
}

// Appends the full decomposition of cp using the given table (entries are
// pre-expanded except for Hangul syllables, which can appear inside
// compatibility mappings and are expanded algorithmically here).
void append_decomposition(char32_t cp, const DecompEntry* table, size_t count,
                          std::u32string& out) {
  if (is_hangul_syllable(cp)) {
    append_hangul_decomposition(cp, out);
    return;
  }
  const DecompEntry* e = find_decomp(table, count, cp);
  if (!e) {
    out.push_back(cp);
    return;
  }
  const char32_t* seq = ucd::kDecompPool + e->offset;
  for (uint16_t i = 0; i < e->len; ++i) {
    if (is_hangul_syllable(seq[i])) {
      append_hangul_decomposition(seq[i], out);
    } else {
      out.push_back(seq[i]);
    }
  }
}

// Canonical ordering: stable insertion over runs of nonzero combining class.
void canonical_order(std::u32string& s) {
  for (size_t i = 1; i < s.size(); ++i) {
    uint8_t cc = combining_class(s[i]);
    if (cc == 0) continue;
    size_t j = i;
    while (j > 0 && combining_class(s[j - 1]) > cc) {
      std::swap(s[j - 1], s[j]);
      --j;
    }
  }
}

std::optional<char32_t> compose_pair(char32_t a, char32_t b) {
  // Algorithmic Hangul composition.
  if (a >= kLBase && a < kLBase + kLCount && b >= kVBase &&
      b < kVBase + kVCount) {
    return kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
  }
  if (is_hangul_syllable(a) && (a - kSBase) % kTCount == 0 && b > kTBase &&
      b < kTBase + kTCount) {
    return a + (b - kTBase);
  }
  const CompEntry* first = ucd::kComp;
  const CompEntry* last = first + ucd::kCompCount;
  auto it = std::lower_bound(first, last, std::pair<char32_t, char32_t>{a, b},
                             [](const CompEntry& e,
                                const std::pair<char32_t, char32_t>& key) {
                               if (e.first != key.first)
                                 return e.first < key.first;
                               return e.second < key.second;
                             });
  if (it != last && it->first == a && it->second == b) return it->composite;
  return std::nullopt;
}

std::u32string decompose(std::u32string_view text, const DecompEntry* table,
                         size_t count) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_decomposition(cp, table, count, out);
  canonical_order(out);
  return out;
}

// Canonical composition over a canonically-ordered decomposed sequence
// (UAX #15 composition algorithm).
std::u32string canonical_compose(std::u32string decomposed) {
  std::u32string& s = decomposed;
  std::u32string out;
  out.reserve(s.size());
  ptrdiff_t last_starter = -1;
  uint8_t prev_cc = 0;
  for (char32_t cp : s) {
    uint8_t cc = combining_class(cp);
    if (last_starter >= 0) {
      bool adjacent = static_cast<ptrdiff_t>(out.size()) - 1 == last_starter;
      bool blocked = !adjacent && (prev_cc == 0 || prev_cc >= cc);
      if (!blocked) {
        if (auto p = compose_pair(out[last_starter], cp)) {
          out[last_starter] = *p;
          continue;
        }
      }
    }
    if (cc == 0) last_starter = static_cast<ptrdiff_t>(out.size());
    prev_cc = cc;
    out.push_back(cp);
  }
  return out;
}

}  // namespace

Utf8Error::Utf8Error(size_t byte_offset)
    : std::runtime_error("malformed UTF-8 at byte offset " +
                         std::to_string(byte_offset)),
      byte_offset_(byte_offset) {}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    const size_t start = i;
    uint8_t b0 = static_cast<uint8_t>(text[i]);
    char32_t cp;
    int trail;
    char32_t min_value;
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      trail = 1;
      min_value = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      trail = 2;
      min_value = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      trail = 3;
      min_value = 0x10000;
    } else {
      throw Utf8Error(start);
    }
    if (i + trail >= n) throw Utf8Error(start);
    for (int k = 1; k <= trail; ++k) {
      uint8_t b = static_cast<uint8_t>(text[i + k]);
      if ((b & 0xC0) != 0x80) throw Utf8Error(start);
      cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min_value || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw Utf8Error(start);
    }
    out.push_back(cp);
    i += 1 + trail;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) out += encode_utf8(cp);
  return out;
}

Script script_of(char32_t cp) noexcept {
  const ScriptRange* r =
      find_in_ranges(ucd::kScriptRanges, ucd::kScriptRangeCount, cp);
  return r ? static_cast<Script>(r->script) : Script::Unknown;
}

std::string_view script_name(Script s) noexcept {
  uint16_t id = static_cast<uint16_t>(s);
  return id < ucd::kScriptCount ? ucd::kScriptNames[id] : "Unknown";
}

std::optional<Script> script_from_name(std::string_view name) noexcept {
  for (uint16_t id = 0; id < ucd::kScriptCount; ++id) {
    if (name == ucd::kScriptNames[id]) return static_cast<Script>(id);
  }
  return std::nullopt;
}

bool is_combining_mark(char32_t cp) noexcept {
  return find_in_ranges(ucd::kMarkRanges, ucd::kMarkRangeCount, cp) != nullptr;
}

bool is_letter(char32_t cp) noexcept {
  return find_in_ranges(ucd::kLetterRanges, ucd::kLetterRangeCount, cp) !=
         nullptr;
}

std::optional<int> decimal_digit_value(char32_t cp) noexcept {
  const uint32_t* first = ucd::kDigitZeros;
  const uint32_t* last = first + ucd::kDigitZeroCount;
  auto it = std::upper_bound(first, last, static_cast<uint32_t>(cp));
  if (it == first) return std::nullopt;
  uint32_t zero = *(it - 1);
  if (cp >= zero && cp <= zero + 9) return static_cast<int>(cp - zero);
  return std::nullopt;
}

uint8_t combining_class(char32_t cp) noexcept {
  const CccEntry* first = ucd::kCcc;
  const CccEntry* last = first + ucd::kCccCount;
  auto it = std::lower_bound(first, last, cp,
                             [](const CccEntry& e, char32_t v) {
                               return e.cp < v;
                             });
  return (it != last && it->cp == cp) ? it->ccc : 0;
}

std::string unicode_name(char32_t cp) {
  if (const AlgoNameRange* r =
          find_in_ranges(ucd::kAlgoNameRanges, ucd::kAlgoNameRangeCount, cp)) {
    char buf[16];
    switch (r->kind) {
      case 0:
        std::snprintf(buf, sizeof buf, "%04X", cp);
        return std::string("CJK UNIFIED IDEOGRAPH-") + buf;
      case 1:
        std::snprintf(buf, sizeof buf, "%04X", cp);
        return std::string("CJK COMPATIBILITY IDEOGRAPH-") + buf;
      case 2:
        std::snprintf(buf, sizeof buf, "%04X", cp);
        return std::string("TANGUT IDEOGRAPH-") + buf;
      case 3:
        std::snprintf(buf, sizeof buf, "%03u",
                      static_cast<unsigned>(cp - 0x18800 + 1));
        return std::string("TANGUT COMPONENT-") + buf;
      case 4:
        std::snprintf(buf, sizeof buf, "%04X", cp);
        return std::string("KHITAN SMALL SCRIPT CHARACTER-") + buf;
      case 5:
        std::snprintf(buf, sizeof buf, "%04X", cp);
        return std::string("NUSHU CHARACTER-") + buf;
      case 6: {
        char32_t s = cp - kSBase;
        std::string name = "HANGUL SYLLABLE ";
        name += ucd::kJamoL[s / kNCount];
        name += ucd::kJamoV[(s % kNCount) / kTCount];
        name += ucd::kJamoT[s % kTCount];
        return name;
      }
    }
  }
  const uint32_t* first = ucd::kNameCps;
  const uint32_t* last = first + ucd::kNameCount;
  auto it = std::lower_bound(first, last, static_cast<uint32_t>(cp));
  if (it == last || *it != cp) return std::string();
  size_t idx = static_cast<size_t>(it - first);
  return std::string(ucd::kNamePool + ucd::kNameOffsets[idx],
                     ucd::kNamePool + ucd::kNameOffsets[idx + 1]);
}

CharRecord char_record(char32_t cp) {
  CharRecord rec;
  rec.codepoint = cp;
  rec.script = script_of(cp);
  rec.is_combining_mark = is_combining_mark(cp);
  rec.decimal_digit_value = decimal_digit_value(cp);
  rec.unicode_name = unicode_name(cp);
  return rec;
}

std::u32string nfd(std::u32string_view text) {
  return decompose(text, ucd::kCanonDecomp, ucd::kCanonDecompCount);
}

std::u32string nfkd(std::u32string_view text) {
  return decompose(text, ucd::kCompatDecomp, ucd::kCompatDecompCount);
}

std::u32string nfc(std::u32string_view text) {
  return canonical_compose(nfd(text));
}

std::string normalize(std::string_view text, NormalForm form,
                      bool strip_joiners) {
  std::u32string cps = decode_utf8(text);
  std::u32string normalized;
  if (form == NormalForm::kComposed) {
    normalized = nfc(cps);
  } else {
    normalized = nfkd(cps);
    if (strip_joiners) {
      std::erase_if(normalized, [](char32_t cp) {
        return cp == kZwj || cp == kZwnj;
      });
    }
  }
  return encode_utf8(normalized);
}

}  // namespace romankit
