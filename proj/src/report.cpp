#include "gbp/report.hpp"

namespace gbp {

using nlohmann::ordered_json;

ordered_json poset_json(const Poset& p) {
  ordered_json covers = ordered_json::array();
  for (const auto& [x, y] : p.cover_pairs()) covers.push_back({x, y});
  ordered_json out{{"n", p.size()}, {"covers", covers}};
  if (p.has_labels()) out["labels"] = p.labels();
  return out;
}

ordered_json ratio_json(const Ratio& r) {
  return {{"value", r.str()}, {"count", r.raw_count().str()}, {"total", r.raw_total().str()}};
}

ordered_json balance_json(const Poset& p, const BalanceReport& report) {
  ordered_json pairs = ordered_json::array();
  for (const PairBalance& b : report.pairs) {
    pairs.push_back({{"x", b.x},
                     {"y", b.y},
                     {"x_name", p.name(b.x)},
                     {"y_name", p.name(b.y)},
                     {"before", b.before.str()},
                     {"total", report.total.str()},
                     {"ratio", b.ratio.str()},
                     {"reverse_ratio", b.ratio.complement().str()}});
  }
  ordered_json out{{"extensions", report.kind == ExtensionKind::Greedy ? "greedy" : "all"},
                   {"total", report.total.str()},
                   {"pairs", pairs}};
  out["best_pair"] = report.best_pair
                         ? ordered_json{report.best_pair->first, report.best_pair->second}
                         : ordered_json(nullptr);
  out["best_level"] = report.best_level ? ordered_json(report.best_level->str()) : nullptr;
  out["alpha"] = report.alpha ? ordered_json(report.alpha->str()) : nullptr;
  out["meets_alpha"] = report.meets_alpha ? ordered_json(*report.meets_alpha) : nullptr;
  return out;
}

ordered_json witness_json(const Poset& p, const WitnessPair& w, const Ratio& verified) {
  ordered_json trace = ordered_json::array();
  for (const WitnessStep& s : w.trace) {
    if (s.kind == WitnessStep::Kind::RemovedMinimal) {
      trace.push_back({{"step", "removed_minimal"}, {"element", s.first}});
    } else {
      trace.push_back({{"step", "autonomous_pair"}, {"pair", {s.first, s.second}}});
    }
  }
  return {{"pair", {w.x, w.y}},
          {"names", {p.name(w.x), p.name(w.y)}},
          {"ratio", ratio_json(verified)},
          {"is_half", verified == half()},
          {"trace", trace}};
}

ordered_json suite_json(const SuiteResult& result) {
  ordered_json props = ordered_json::array();
  for (const PropertyResult& p : result.properties) {
    props.push_back({{"property", p.name}, {"passed", p.passed}, {"detail", p.detail}});
  }
  return {{"suite", result.suite},
          {"passed", result.passed()},
          {"properties", props},
          {"findings", result.findings}};
}

BalanceVerdict rederive_balance(const ordered_json& doc) {
  BalanceVerdict v;
  for (const auto& pair : doc.at("pairs")) {
    const Ratio r = Ratio::parse(pair.at("ratio").get<std::string>());
    const Ratio level = std::min(r, r.complement());
    if (!v.best_level || level > *v.best_level) {
      v.best_level = level;
      v.best_pair = Pair{pair.at("x").get<ElementId>(), pair.at("y").get<ElementId>()};
    }
  }
  if (!doc.at("alpha").is_null()) {
    const Ratio alpha = Ratio::parse(doc.at("alpha").get<std::string>());
    v.meets_alpha = v.best_level && *v.best_level >= alpha;
  }
  return v;
}

}  // namespace gbp
