#include "romankit/strategy.hpp"

#include <filesystem>
#include <stdexcept>
#include <utility>

#include "romankit/rng.hpp"

namespace romankit {

namespace {

class RomanizeStrategy final : public Strategy {
 public:
  RomanizeStrategy(RuleSet rules, RomanizeOptions opts, std::string_view name)
      : rules_(std::move(rules)), opts_(opts), name_(name) {}

  std::string apply(std::string_view text) const override {
    return romanize(text, rules_, opts_);
  }
  std::string_view name() const noexcept override { return name_; }

 private:
  RuleSet rules_;
  RomanizeOptions opts_;
  std::string_view name_;
};

class RandStrategy final : public Strategy {
 public:
  explicit RandStrategy(std::uint64_t seed) : map_(seed) {}

  std::string apply(std::string_view text) const override {
    return map_.apply(text);
  }
  std::string_view name() const noexcept override { return "rand"; }

 private:
  RandMap map_;
};

}  // namespace

char rand_char(std::uint64_t seed, char32_t cp) {
  if (cp <= 127) {
    throw std::invalid_argument(
        "rand_char: codepoint " + std::to_string(cp) +
        " is ASCII; the RAND association only covers codepoints above 127");
  }
  std::uint64_t mixed =
      splitmix64_mix(seed ^ (static_cast<std::uint64_t>(cp) * kSplitMixGamma));
  return static_cast<char>('a' + static_cast<char>(mixed % 26));
}

std::string RandMap::map(char32_t cp) const {
  if (cp <= 127) {
    // Same output alphabet as romanize: printable ASCII and whitespace are
    // the identity; other ASCII (C0 controls, DEL) drops.
    if (is_ascii_printable_or_ws(cp)) {
      return std::string(1, static_cast<char>(cp));
    }
    return "";
  }
  return std::string(1, rand_char(seed_, cp));
}

std::string RandMap::apply(std::string_view text) const {
  std::u32string cps = decode_utf8(text);
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp <= 127) {
      if (is_ascii_printable_or_ws(cp)) {
        out.push_back(static_cast<char>(cp));
      }
    } else {
      out.push_back(rand_char(seed_, cp));
    }
  }
  return out;
}

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec,
                                        const RomanizeOptions& opts) {
  switch (spec.kind) {
    case StrategyKind::kUniversal:
      return std::make_unique<RomanizeStrategy>(
          load_table_dir(default_table_dir()), opts, "universal");
    case StrategyKind::kBorrow: {
      if (spec.table_path.empty()) {
        throw std::invalid_argument("borrow strategy requires a table path");
      }
      RuleSet rules =
          std::filesystem::is_directory(spec.table_path)
              ? load_table_dir(spec.table_path, "borrow:" + spec.table_path)
              : RuleSet::load_file(spec.table_path);
      return std::make_unique<RomanizeStrategy>(std::move(rules), opts,
                                                "borrow");
    }
    case StrategyKind::kRand:
      return std::make_unique<RandStrategy>(spec.seed);
  }
  throw std::logic_error("unhandled strategy kind");
}

}  // namespace romankit
