#pragma once

// JSON renderings. Integers that may exceed 64 bits and all ratios are
// emitted as decimal strings ("8/11"), never as floating point.

#include <json.hpp>

#include "gbp/greedy.hpp"
#include "gbp/poset.hpp"
#include "gbp/theorems.hpp"
#include "gbp/verify.hpp"

namespace gbp {

nlohmann::ordered_json poset_json(const Poset& p);
nlohmann::ordered_json ratio_json(const Ratio& r);
nlohmann::ordered_json balance_json(const Poset& p, const BalanceReport& report);
nlohmann::ordered_json witness_json(const Poset& p, const WitnessPair& w, const Ratio& verified);
nlohmann::ordered_json suite_json(const SuiteResult& result);

// Re-derives best pair, best level and the alpha verdict from the pair
// ratios stored in a balance_json document.
struct BalanceVerdict {
  std::optional<Pair> best_pair;
  std::optional<Ratio> best_level;
  std::optional<bool> meets_alpha;
};
BalanceVerdict rederive_balance(const nlohmann::ordered_json& doc);

}  // namespace gbp
