#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "generated/unicode_tables.hpp"

namespace romankit {

using ucd::Script;

// Thrown on malformed UTF-8; byte_offset points at the first byte of the
// offending sequence.
class Utf8Error : public std::runtime_error {
 public:
  explicit Utf8Error(size_t byte_offset);
  size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  size_t byte_offset_;
};

// --- UTF-8 transcoding -----------------------------------------------------

// Strict decoding: rejects overlong forms, surrogates, values past U+10FFFF,
// and truncated sequences. Throws Utf8Error.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view cps);
std::string encode_utf8(char32_t cp);

// --- Character properties --------------------------------------------------

Script script_of(char32_t cp) noexcept;
std::string_view script_name(Script s) noexcept;
std::optional<Script> script_from_name(std::string_view name) noexcept;

bool is_combining_mark(char32_t cp) noexcept;
bool is_letter(char32_t cp) noexcept;
std::optional<int> decimal_digit_value(char32_t cp) noexcept;
uint8_t combining_class(char32_t cp) noexcept;

// Printable ASCII (U+0020–U+007E) or ASCII whitespace — the only
// codepoints romanized output may contain.
constexpr bool is_ascii_printable_or_ws(char32_t cp) noexcept {
  return (cp >= 0x20 && cp <= 0x7E) || cp == U'\t' || cp == U'\n' ||
         cp == U'\v' || cp == U'\f' || cp == U'\r';
}

// Character name per the vendored data; algorithmic names (CJK, Tangut,
// Khitan, Nushu, Hangul syllables) are synthesized. Empty if unnamed.
std::string unicode_name(char32_t cp);

struct CharRecord {
  char32_t codepoint = 0;
  Script script = Script::Unknown;
  bool is_combining_mark = false;
  std::optional<int> decimal_digit_value;
  std::string unicode_name;
};

CharRecord char_record(char32_t cp);

// --- Normalization ---------------------------------------------------------

// Codepoint-level normal forms.
std::u32string nfd(std::u32string_view text);
std::u32string nfc(std::u32string_view text);
std::u32string nfkd(std::u32string_view text);

enum class NormalForm {
  kComposed,                  // canonical composition (NFC)
  kCompatibilityDecomposed,   // compatibility decomposition (NFKD)
};

inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;

// String-level normalization. Malformed input throws Utf8Error. In the
// compatibility-decomposed form, zero-width joiners/non-joiners are stripped
// when strip_joiners is set (the default policy): they carry rendering, not
// romanization, information. The composed form never strips them.
std::string normalize(std::string_view text, NormalForm form,
                      bool strip_joiners = true);

}  // namespace romankit
