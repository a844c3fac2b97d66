#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "romankit/romanizer.hpp"

namespace romankit {

// The three transliteration strategies compared in the study: UNIVERSAL
// (default rule tables), BORROW (a foreign table), RAND (a seeded arbitrary
// codepoint→letter association).
enum class StrategyKind {
  kUniversal,
  kBorrow,
  kRand,
};

struct StrategySpec {
  StrategyKind kind = StrategyKind::kUniversal;
  std::string table_path;  // BORROW: a .rules file or a directory of them
  std::uint64_t seed = 0;  // RAND: mandatory association seed
};

// Keyed hash of (seed, codepoint) reduced to 'a'..'z':
//   letter = 'a' + splitmix64_mix(seed XOR (cp * 0x9E3779B97F4A7C15)) mod 26
// Pure and platform-independent; the same seed associates every codepoint
// with the same letter forever. Throws std::invalid_argument for ASCII
// codepoints (contract: ch > 127).
char rand_char(std::uint64_t seed, char32_t cp);

// Lazy total map from codepoints to ASCII: identity on ASCII (so whitespace
// and Latin text survive untouched), rand_char everywhere else.
class RandMap {
 public:
  explicit RandMap(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  // Image of one codepoint: printable ASCII and whitespace map to
  // themselves, other ASCII (C0 controls, DEL) to the empty string, and
  // everything above 127 to one lowercase letter.
  std::string map(char32_t cp) const;

  // Codepoint-wise application. Throws Utf8Error on malformed input.
  std::string apply(std::string_view text) const;

 private:
  std::uint64_t seed_;
};

// A deterministic text transformer; all implementations map arbitrary UTF-8
// into printable-ASCII-plus-whitespace (the romanize output contract).
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string apply(std::string_view text) const = 0;
  virtual std::string_view name() const noexcept = 0;
};

// Builds the transformer for spec: universal loads the default table
// directory, borrow loads spec.table_path (file or directory), rand wraps a
// RandMap. Table load failures propagate as RuleError; a borrow spec with
// no path is std::invalid_argument.
std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec,
                                        const RomanizeOptions& opts = {});

}  // namespace romankit
