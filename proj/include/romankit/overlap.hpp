#pragma once

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "romankit/wordpiece.hpp"

namespace romankit {

class OverlapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-token embedding-initialization directive: reuse the base row for the
// identical string, or draw fresh from a numbered random slot.
struct OverlapEntry {
  std::int32_t new_id = 0;
  std::string token;
  bool copy = false;              // true → copy_from_base
  std::int64_t base_id = -1;      // valid when copy
  std::uint64_t seed_slot = 0;    // valid when !copy; sequential in id order
  bool special = false;
};

// The Emb_Lex initialization plan. Entries partition the new vocabulary in
// id order. overlap_ratio is computed over non-special tokens only (the
// specials are excluded from the ratio by design; their entries remain in
// the plan so downstream initializers still know what to do with them).
struct OverlapPlan {
  std::vector<OverlapEntry> entries;
  double overlap_ratio = 0.0;
  std::uint64_t copy_count = 0;        // all entries
  std::uint64_t random_count = 0;      // all entries
  std::uint64_t considered = 0;        // non-special entries
  std::uint64_t considered_copies = 0; // non-special copy entries
};

// Exact string-match policy, continuation prefix included: a new token
// copies iff the identical string appears in base_vocab. Duplicate base
// tokens are an error naming the token and both positions.
OverlapPlan overlap_plan(const TokenizerModel& new_vocab,
                         const std::vector<std::string>& base_vocab);

// Summary record: counts by category, the ratio, and the first top_n shared
// tokens in new-vocab id order, plus the full per-token directive list.
nlohmann::json overlap_report(const OverlapPlan& plan, std::size_t top_n = 20);

// Plan rows as CSV: token,new_id,directive,base_id,seed_slot,special.
std::string overlap_plan_csv(const OverlapPlan& plan);

}  // namespace romankit
