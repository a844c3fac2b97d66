#include "romankit/overlap.hpp"

#include <unordered_map>

#include "romankit/metrics.hpp"

namespace romankit {

OverlapPlan overlap_plan(const TokenizerModel& new_vocab,
                         const std::vector<std::string>& base_vocab) {
  std::unordered_map<std::string, std::int64_t> base_ids;
  base_ids.reserve(base_vocab.size());
  for (size_t i = 0; i < base_vocab.size(); ++i) {
    auto [it, inserted] =
        base_ids.emplace(base_vocab[i], static_cast<std::int64_t>(i));
    if (!inserted) {
      throw OverlapError("duplicate base token \"" + base_vocab[i] +
                         "\" at positions " + std::to_string(it->second) +
                         " and " + std::to_string(i));
    }
  }

  OverlapPlan plan;
  plan.entries.reserve(new_vocab.id_to_token.size());
  std::uint64_t next_slot = 0;
  for (size_t id = 0; id < new_vocab.id_to_token.size(); ++id) {
    OverlapEntry entry;
    entry.new_id = static_cast<std::int32_t>(id);
    entry.token = new_vocab.id_to_token[id];
    entry.special = new_vocab.is_special(entry.token);
    auto it = base_ids.find(entry.token);
    if (it != base_ids.end()) {
      entry.copy = true;
      entry.base_id = it->second;
      plan.copy_count += 1;
    } else {
      entry.copy = false;
      entry.seed_slot = next_slot++;
      plan.random_count += 1;
    }
    if (!entry.special) {
      plan.considered += 1;
      if (entry.copy) plan.considered_copies += 1;
    }
    plan.entries.push_back(std::move(entry));
  }
  if (plan.considered > 0) {
    plan.overlap_ratio = static_cast<double>(plan.considered_copies) /
                         static_cast<double>(plan.considered);
  }
  return plan;
}

nlohmann::json overlap_report(const OverlapPlan& plan, std::size_t top_n) {
  nlohmann::json shared = nlohmann::json::array();
  for (const OverlapEntry& e : plan.entries) {
    if (shared.size() >= top_n) break;
    if (!e.copy) continue;
    shared.push_back({{"token", e.token},
                      {"new_id", e.new_id},
                      {"base_id", e.base_id},
                      {"special", e.special}});
  }
  nlohmann::json entries = nlohmann::json::array();
  for (const OverlapEntry& e : plan.entries) {
    nlohmann::json row{{"token", e.token},
                       {"new_id", e.new_id},
                       {"special", e.special}};
    if (e.copy) {
      row["init"] = "copy_from_base";
      row["base_id"] = e.base_id;
    } else {
      row["init"] = "random_init";
      row["seed_slot"] = e.seed_slot;
    }
    entries.push_back(std::move(row));
  }
  return nlohmann::json{
      {"overlap_ratio", plan.overlap_ratio},
      {"copy_count", plan.copy_count},
      {"random_count", plan.random_count},
      {"considered", plan.considered},
      {"considered_copies", plan.considered_copies},
      {"top_shared", std::move(shared)},
      {"entries", std::move(entries)},
  };
}

std::string overlap_plan_csv(const OverlapPlan& plan) {
  std::string out = "token,new_id,directive,base_id,seed_slot,special\n";
  for (const OverlapEntry& e : plan.entries) {
    out += e.token + "," + std::to_string(e.new_id) + "," +
           (e.copy ? "copy_from_base" : "random_init") + "," +
           (e.copy ? std::to_string(e.base_id) : "") + "," +
           (e.copy ? "" : std::to_string(e.seed_slot)) + "," +
           (e.special ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace romankit
