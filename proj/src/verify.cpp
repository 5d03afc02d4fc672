#include "gbp/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gbp/error.hpp"
#include "gbp/fixtures.hpp"
#include "gbp/generators.hpp"
#include "gbp/greedy.hpp"
#include "gbp/io.hpp"
#include "gbp/theorems.hpp"

namespace gbp {

namespace {

// Records the first failing instance of a property, counts the rest.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked_;
    if (ok) return;
    if (failed_ == 0) first_failure_ = describe();
    ++failed_;
  }

  PropertyResult result() const {
    PropertyResult r{name_, failed_ == 0, {}};
    r.detail = std::to_string(checked_ - failed_) + "/" + std::to_string(checked_) + " held";
    if (failed_ > 0) r.detail += "; first failure: " + first_failure_;
    return r;
  }

 private:
  std::string name_;
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

std::string one_line(const Poset& p) {
  std::string text = "poset " + std::to_string(p.size());
  for (const auto& [x, y] : p.cover_pairs()) {
    text += ", " + std::to_string(x) + "<" + std::to_string(y);
  }
  return text;
}

Poset random_component(Rng& rng, std::size_t n) {
  switch (rng.below(4)) {
    case 0: return random_poset(n, 0.2 + 0.5 * rng.unit(), rng.next());
    case 1: return random_sp(n, rng.next());
    case 2: return random_nfree(n, rng.next());
    default: return rng.chance(0.5) ? chain(n) : antichain(n);
  }
}

std::vector<Poset> random_component_list(Rng& rng, std::size_t max_total) {
  const std::size_t max_parts = std::min<std::size_t>(4, max_total);
  const std::size_t m = max_parts <= 2 ? max_parts : 2 + rng.below(max_parts - 1);
  const std::size_t total = m + rng.below(max_total - m + 1);
  std::vector<std::size_t> sizes(m, 1);
  for (std::size_t left = total - m; left > 0; --left) ++sizes[rng.below(m)];
  std::vector<Poset> out;
  out.reserve(m);
  for (std::size_t s : sizes) out.push_back(random_component(rng, s));
  return out;
}

// N-free, not a chain, 2 <= n <= max_n; alternates SP and rejection draws.
Poset random_nfree_nonchain(Rng& rng, std::size_t max_n, std::size_t i) {
  for (;;) {
    const std::size_t n = 2 + rng.below(max_n - 1);
    Poset p = (i % 2 == 0) ? random_sp(n, rng.next()) : random_nfree(n, rng.next());
    if (!is_chain(p)) return p;
  }
}

std::string ratio_or_none(const std::optional<Ratio>& r) { return r ? r->str() : "none"; }

SuiteResult suite_fig3() {
  SuiteResult out{"fig3", {}, {}};
  const Poset p = fixtures::n_plus_point();
  const BigInt count = greedy_count(p);
  out.properties.push_back({"greedy count is 11", count == 11, "count " + count.str()});
  const Ratio ba = gp_ratio(p, 1, 0);
  out.properties.push_back({"GP(b<a) = 8/11", ba == Ratio(8, 11), ba.detailed()});
  const Ratio bc = gp_ratio(p, 1, 2);
  out.properties.push_back({"GP(b<c) = 8/11", bc == Ratio(8, 11), bc.detailed()});

  const Ratio cd = gp_ratio(p, 2, 3);
  const auto filtered = greedy_by_permutation_filter(p);
  const auto before = std::count_if(filtered.begin(), filtered.end(), [](const auto& order) {
    return std::find(order.begin(), order.end(), 2) < std::find(order.begin(), order.end(), 3);
  });
  const Ratio oracle(static_cast<long long>(before), static_cast<long long>(filtered.size()));
  out.properties.push_back({"GP(c<d) matches permutation filter", cd == oracle,
                            "engine " + cd.detailed() + ", filter " + oracle.detailed()});
  if (cd != Ratio(8, 11)) {
    out.findings.push_back("GP(c<d) = " + cd.str() + ", not the 8/11 quoted alongside GP(b<a)");
  }
  return out;
}

SuiteResult suite_chains() {
  SuiteResult out{"chains", {}, {}};
  Tally tally("count_chain_sum(m) = m! = greedy count of m disjoint chains, m = 1..6");
  for (std::size_t m = 1; m <= 6; ++m) {
    std::vector<Poset> parts;
    for (std::size_t i = 0; i < m; ++i) parts.push_back(chain(1 + i % 3));
    const BigInt formula = count_chain_sum(m);
    const BigInt direct = greedy_count(disjoint_sum(parts));
    const BigInt fact = factorial(static_cast<unsigned>(m));
    tally.check(formula == fact && direct == fact, [&] {
      return "m=" + std::to_string(m) + " formula " + formula.str() + " direct " + direct.str();
    });
  }
  out.properties.push_back(tally.result());
  out.properties.push_back(
      {"6 chains give 720", count_chain_sum(6) == 720, "count " + count_chain_sum(6).str()});
  return out;
}

SuiteResult suite_sum(bool disjoint, const SuiteOptions& opt) {
  const std::size_t instances = opt.instances.value_or(disjoint ? 200 : 100);
  const std::size_t max_n = std::max<std::size_t>(2, opt.max_n.value_or(10));
  SuiteResult out{disjoint ? "disjoint-sum" : "linear-sum", {}, {}};
  Tally tally(disjoint ? "jump-profile formula = greedy count of disjoint sum"
                       : "product of counts = greedy count of linear sum");
  Rng rng(opt.seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const auto parts = random_component_list(rng, max_n);
    const Poset sum = disjoint ? disjoint_sum(parts) : linear_sum(parts);
    const BigInt formula = disjoint ? count_disjoint_sum(parts) : count_linear_sum(parts);
    const BigInt direct = greedy_count(sum);
    tally.check(formula == direct, [&] {
      return one_line(sum) + ": formula " + formula.str() + ", direct " + direct.str();
    });
  }
  out.properties.push_back(tally.result());
  return out;
}

SuiteResult suite_main_theorem(const SuiteOptions& opt) {
  const std::size_t instances = opt.instances.value_or(500);
  const std::size_t max_n = std::max<std::size_t>(2, opt.max_n.value_or(9));
  SuiteResult out{"main-theorem", {}, {}};
  Tally found("witness found on N-free non-chain input");
  Tally split("witness pair splits greedy extensions exactly in half");
  Tally even("greedy count is even");
  Rng rng(opt.seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const Poset p = random_nfree_nonchain(rng, max_n, i);
    std::optional<WitnessPair> w;
    try {
      w = half_balanced_witness(p);
    } catch (const std::exception& e) {
      found.check(false, [&] { return one_line(p) + ": " + e.what(); });
      continue;
    }
    found.check(true, {});
    ExtensionCounter counter(p, ExtensionKind::Greedy);
    const Ratio r(counter.before(w->x, w->y), counter.total());
    split.check(r == half(), [&] {
      return one_line(p) + ": pair (" + std::to_string(w->x) + "," + std::to_string(w->y) +
             ") ratio " + r.detailed();
    });
    even.check(counter.total() % 2 == 0,
               [&] { return one_line(p) + ": count " + counter.total().str(); });
  }
  out.properties = {found.result(), split.result(), even.result()};
  return out;
}

SuiteResult suite_removal(const SuiteOptions& opt) {
  const std::size_t instances = opt.instances.value_or(300);
  const std::size_t max_n = std::max<std::size_t>(3, opt.max_n.value_or(8));
  SuiteResult out{"removal", {}, {}};
  Tally counts("removing a removable minimal keeps the greedy count");
  Tally befores("before-counts of pairs avoiding the removed element are kept");
  Tally bijection("lift and project are inverse bijections of the greedy sets");
  Rng rng(opt.seed);
  std::size_t with_removable = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 2 + rng.below(max_n - 1);
    const Poset p = (i % 2 == 0) ? random_poset(n, 0.2 + 0.5 * rng.unit(), rng.next())
                                 : random_nfree(n, rng.next());
    const auto removable = removable_minimals(p);
    if (!removable.empty()) ++with_removable;
    for (ElementId a : removable) {
      const Deletion del = delete_element(p, a);
      ExtensionCounter full(p, ExtensionKind::Greedy);
      ExtensionCounter reduced(del.poset, ExtensionKind::Greedy);
      counts.check(full.total() == reduced.total(), [&] {
        return one_line(p) + " removing " + std::to_string(a) + ": " + full.total().str() +
               " vs " + reduced.total().str();
      });
      const auto fb = full.before_matrix();
      const auto rb = reduced.before_matrix();
      bool kept = true;
      for (ElementId x = 0; x < p.size(); ++x) {
        for (ElementId y = 0; y < p.size(); ++y) {
          if (x == a || y == a || x == y || p.comparable(x, y)) continue;
          kept = kept && fb[x][y] == rb[*del.old_to_new[x]][*del.old_to_new[y]];
        }
      }
      befores.check(kept, [&] { return one_line(p) + " removing " + std::to_string(a); });

      const auto big = greedy_extensions(p);
      const auto small = greedy_extensions(del.poset);
      std::set<std::vector<ElementId>> projected;
      bool inverse = true;
      for (const auto& l : big) {
        const LinearExtension down = project_extension(p, a, l);
        inverse = inverse && lift_extension(p, a, down) == l;
        projected.insert(down.order());
      }
      for (const auto& l : small) {
        inverse = inverse && project_extension(p, a, lift_extension(p, a, l)) == l;
      }
      inverse = inverse && projected.size() == small.size();
      bijection.check(inverse, [&] { return one_line(p) + " removing " + std::to_string(a); });
    }
  }
  out.properties = {counts.result(), befores.result(), bijection.result()};
  out.findings.push_back(std::to_string(with_removable) + " of " + std::to_string(instances) +
                         " instances had a removable minimal element");
  return out;
}

SuiteResult suite_reversibility(const SuiteOptions& opt) {
  const std::size_t instances = opt.instances.value_or(200);
  const std::size_t max_n = std::max<std::size_t>(2, opt.max_n.value_or(8));
  SuiteResult out{"reversibility", {}, {}};
  Tally tally("reversed greedy set equals the dual's greedy set on N-free input");
  Rng rng(opt.seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 1 + rng.below(max_n);
    const Poset p = (i % 2 == 0) ? random_sp(n, rng.next()) : random_nfree(n, rng.next());
    std::set<LinearExtension> reversed;
    for (const auto& l : greedy_extensions(p)) reversed.insert(dual_extension(l));
    const auto dual_set = greedy_extensions(dual(p));
    const std::set<LinearExtension> expected(dual_set.begin(), dual_set.end());
    tally.check(reversed == expected, [&] { return one_line(p); });
  }
  out.properties.push_back(tally.result());
  const auto witness = find_non_reversible(5);
  out.properties.push_back({"a labeled poset with n <= 5 is not reversible", witness.has_value(),
                            witness ? one_line(*witness) : "none found"});
  return out;
}

SuiteResult suite_soundness(const SuiteOptions& opt) {
  const std::size_t instances = opt.instances.value_or(200);
  const std::size_t max_n = std::min<std::size_t>(8, opt.max_n.value_or(6));
  SuiteResult out{"soundness", {}, {}};
  Tally sets("greedy enumeration equals the permutation filter");
  Tally before("every pair with y not below x has a greedy extension putting x first");
  auto check = [&](const Poset& p) {
    std::vector<std::vector<ElementId>> engine;
    for (const auto& l : greedy_extensions(p)) engine.push_back(l.order());
    const auto filtered = greedy_by_permutation_filter(p);
    sets.check(engine == filtered, [&] { return one_line(p); });
    for (ElementId x = 0; x < p.size(); ++x) {
      for (ElementId y = 0; y < p.size(); ++y) {
        if (x == y || p.less(y, x)) continue;
        const auto l = exists_greedy_before(p, x, y);
        before.check(l && is_greedy(p, *l) && l->before(x, y), [&] {
          return one_line(p) + " x=" + std::to_string(x) + " y=" + std::to_string(y);
        });
      }
    }
  };
  for (std::size_t n = 1; n <= 4; ++n) for_each_labeled_poset(n, check);
  Rng rng(opt.seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 1 + rng.below(max_n);
    check(random_poset(n, rng.unit(), rng.next()));
  }
  out.properties = {sets.result(), before.result()};
  return out;
}

SuiteResult suite_width2(const SuiteOptions& opt) {
  const std::size_t max_n = opt.max_n.value_or(6);
  SuiteResult out{"width2", {}, {}};
  const Width2Sweep sweep = sweep_width2(max_n);
  out.properties.push_back({"sweep internally consistent", sweep.consistent,
                            sweep.consistent ? std::to_string(sweep.instances) + " instances"
                                             : sweep.inconsistency});
  out.properties.push_back({"the N attains exactly 1/3", sweep.n_attains_third, ""});
  std::ostringstream min;
  min << "minimum best level " << ratio_or_none(sweep.min_level) << " over " << sweep.instances
      << " width-2 posets with n <= " << max_n;
  out.findings.push_back(min.str());
  if (sweep.below_third > 0) {
    out.findings.push_back(std::to_string(sweep.below_third) +
                           " instances have no pair within [1/3, 2/3]; first: " +
                           one_line(*sweep.first_below_third));
  } else {
    out.findings.push_back("every instance has a pair within [1/3, 2/3]");
  }
  return out;
}

SuiteResult suite_autonomous(const SuiteOptions& opt) {
  const std::size_t instances = opt.instances.value_or(100);
  const std::size_t max_n = std::max<std::size_t>(3, opt.max_n.value_or(9));
  SuiteResult out{"autonomous", {}, {}};
  Tally tally("an autonomous 2-antichain splits greedy extensions in half");
  Rng rng(opt.seed);
  for (std::size_t i = 0; i < instances; ++i) {
    // Substitute a 2-antichain for one point of a random index poset.
    const std::size_t k = 2 + rng.below(std::min<std::size_t>(4, max_n - 2));
    const Poset index = random_poset(k, 0.2 + 0.6 * rng.unit(), rng.next());
    const std::size_t slot = rng.below(k);
    std::size_t budget = max_n - k - 1;
    std::vector<Poset> parts;
    ElementId first = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == slot) {
        first = std::accumulate(parts.begin(), parts.end(), std::size_t{0},
                                [](std::size_t s, const Poset& c) { return s + c.size(); });
        parts.push_back(antichain(2));
        continue;
      }
      const std::size_t extra = budget == 0 ? 0 : rng.below(std::min<std::size_t>(budget, 2) + 1);
      budget -= extra;
      parts.push_back(random_component(rng, 1 + extra));
    }
    const Poset p = lex_sum(index, parts);
    const bool autonomous = is_autonomous(p, bit(first) | bit(first + 1));
    const Ratio r = gp_ratio(p, first, first + 1);
    tally.check(autonomous && r == half(), [&] {
      return one_line(p) + " pair (" + std::to_string(first) + "," +
             std::to_string(first + 1) + ") ratio " + r.detailed();
    });
  }
  out.properties.push_back(tally.result());
  return out;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "fig3",      "chains",        "disjoint-sum", "linear-sum", "main-theorem",
      "removal",   "reversibility", "soundness",    "width2",     "autonomous"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& opt) {
  if (name == "fig3") return suite_fig3();
  if (name == "chains") return suite_chains();
  if (name == "disjoint-sum") return suite_sum(true, opt);
  if (name == "linear-sum") return suite_sum(false, opt);
  if (name == "main-theorem") return suite_main_theorem(opt);
  if (name == "removal") return suite_removal(opt);
  if (name == "reversibility") return suite_reversibility(opt);
  if (name == "soundness") return suite_soundness(opt);
  if (name == "width2") return suite_width2(opt);
  if (name == "autonomous") return suite_autonomous(opt);
  throw Error(ErrorCode::PreconditionViolated, "unknown suite '" + std::string(name) + "'");
}

std::vector<std::vector<ElementId>> greedy_by_permutation_filter(const Poset& p) {
  std::vector<ElementId> order(p.size());
  std::iota(order.begin(), order.end(), ElementId{0});
  std::vector<std::vector<ElementId>> out;
  do {
    if (is_linear_extension(p, order) && is_greedy(p, LinearExtension(order))) {
      out.push_back(order);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Width2Sweep sweep_width2(std::size_t max_n) {
  Width2Sweep sweep;
  sweep.max_n = max_n;
  sweep.instances_by_n.assign(max_n + 1, 0);
  const Ratio third(1, 3);
  const Poset n_shape = fixtures::n_poset();
  for (std::size_t n = 2; n <= max_n; ++n) {
    for_each_labeled_poset(
        n,
        [&](const Poset& p) {
          if (width(p) != 2) return;
          ++sweep.instances;
          ++sweep.instances_by_n[n];
          ExtensionCounter counter(p, ExtensionKind::Greedy);
          const auto before = counter.before_matrix();
          std::optional<Ratio> best;
          for (ElementId x = 0; x < n; ++x) {
            for (ElementId y : elements_of(p.incomparable_to(x) & ~full_mask(x + 1))) {
              if (before[x][y] + before[y][x] != counter.total() && sweep.consistent) {
                sweep.consistent = false;
                sweep.inconsistency = "ratios of a pair do not sum to 1 in " + one_line(p);
              }
              const Ratio r(before[x][y], counter.total());
              const Ratio level = std::min(r, r.complement());
              if (!best || level > *best) best = level;
            }
          }
          if (!best || *best > half()) {
            if (sweep.consistent) {
              sweep.consistent = false;
              sweep.inconsistency = "best level missing or above 1/2 in " + one_line(p);
            }
            return;
          }
          if (!sweep.min_level || *best < *sweep.min_level) {
            sweep.min_level = best;
            sweep.argmin = p;
          }
          if (*best < third) {
            if (sweep.below_third == 0) sweep.first_below_third = p;
            ++sweep.below_third;
          }
          if (p.same_order(n_shape) && *best == third) sweep.n_attains_third = true;
        },
        std::max<std::size_t>(max_n, kDefaultLabeledLimit));
  }
  return sweep;
}

std::optional<Poset> find_non_reversible(std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::optional<Poset> found;
    for_each_labeled_poset(
        n,
        [&](const Poset& p) {
          if (!found && !is_reversible(p)) found = p;
        },
        std::max<std::size_t>(max_n, kDefaultLabeledLimit));
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace gbp
