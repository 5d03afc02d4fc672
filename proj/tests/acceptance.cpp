// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "gbp/generators.hpp"
#include "gbp/greedy.hpp"
#include "gbp/io.hpp"
#include "gbp/poset.hpp"
#include "gbp/theorems.hpp"
#include "gbp/verify.hpp"
#include "oracle.hpp"

namespace {

using namespace gbp;
using Ids = std::vector<ElementId>;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later checks still run so counts stay honest.
struct Checker {
  Outcome out;
  std::size_t failures = 0;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures++ == 0) out.detail = what;
    out.ok = false;
  }
  Outcome done(const std::string& summary) {
    if (out.ok) {
      out.detail = summary;
    } else {
      out.detail += " (" + std::to_string(failures) + " failures)";
    }
    return out;
  }
};

std::string str(const Poset& p) {
  std::string s = format_poset(p);
  for (char& c : s)
    if (c == '\n') c = ';';
  return s;
}

std::set<Ids> orders(const std::vector<LinearExtension>& ls) {
  std::set<Ids> out;
  for (const auto& l : ls) out.insert(l.order());
  return out;
}

std::set<Ids> reversed(const std::set<Ids>& s) {
  std::set<Ids> out;
  for (Ids o : s) {
    std::reverse(o.begin(), o.end());
    out.insert(o);
  }
  return out;
}

Outcome figure_three() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  const Poset p = read_document(GBP_DATA_DIR "/fig3.poset").poset;
  const std::vector<Pair> covers{{0, 2}, {0, 3}, {1, 3}};
  c.expect(p.same_order(Poset::from_pairs(5, covers)), "fixture encoding differs");
  c.expect(greedy_count(p) == 11, "greedy_count != 11");
  c.expect(gp_ratio(p, 1, 0) == Ratio(8, 11), "GP(1<0) != 8/11");
  c.expect(gp_ratio(p, 1, 2) == Ratio(8, 11), "GP(1<2) != 8/11");
  const auto g = oracle::greedy_set(p);
  c.expect(g.size() == 11, "oracle count != 11");
  const Ratio cd(oracle::count_before(g, 2, 3), g.size());
  const Ratio engine = gp_ratio(p, 2, 3);
  c.expect(engine == cd, "GP(2<3) engine " + engine.str() + " vs oracle " + cd.str());
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
  return c.done("count 11, GP(1<0)=GP(1<2)=8/11, GP(2<3)=" + engine.str() + " matches oracle; " +
                (engine == Ratio(8, 11) ? "equals" : "differs from") + " the stated 8/11");
}

Outcome chain_corollary() {
  Checker c;
  for (std::size_t m = 1; m <= 6; ++m) {
    std::vector<Poset> parts;
    for (std::size_t i = 0; i < m; ++i) parts.push_back(chain(1 + i % 3));
    const BigInt f = factorial(static_cast<unsigned>(m));
    c.expect(count_chain_sum(m) == f, "count_chain_sum(" + std::to_string(m) + ")");
    c.expect(greedy_count(disjoint_sum(parts)) == f, "engine at m=" + std::to_string(m));
    std::vector<Poset> points(m, chain(1));
    c.expect(greedy_count(disjoint_sum(points)) == f, "singletons at m=" + std::to_string(m));
  }
  c.expect(count_chain_sum(6) == 720, "m=6 != 720");
  return c.done("m=1..6 match m!, 720 at m=6");
}

std::vector<Poset> random_parts(Rng& rng, std::size_t max_total) {
  std::vector<Poset> parts;
  const std::size_t k = 2 + rng.below(3);
  std::size_t total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t n = 1 + rng.below(3);
    if (total + n > max_total) break;
    total += n;
    parts.push_back(rng.chance(0.5) ? random_poset(n, 0.2 + 0.6 * rng.unit(), rng.next())
                                    : random_sp(n, rng.next()));
  }
  return parts;
}

Outcome disjoint_sum_formula() {
  Checker c;
  Rng rng(2024);
  std::size_t lists = 0;
  for (; lists < 250; ++lists) {
    const auto parts = random_parts(rng, 10);
    const Poset sum = disjoint_sum(parts);
    c.expect(sum.size() <= 10, "total n > 10");
    c.expect(count_disjoint_sum(parts) == greedy_count(sum), "mismatch on " + str(sum));
    if (sum.size() <= 7) {
      c.expect(greedy_count(sum) == oracle::greedy_set(sum).size(), "oracle mismatch " + str(sum));
    }
  }
  return c.done(std::to_string(lists) + " lists, zero failures");
}

Outcome linear_sum_product() {
  Checker c;
  Rng rng(77);
  std::size_t lists = 0;
  for (; lists < 150; ++lists) {
    const auto parts = random_parts(rng, 10);
    const Poset sum = linear_sum(parts);
    BigInt product = 1;
    for (const Poset& q : parts) product *= static_cast<unsigned>(oracle::greedy_set(q).size());
    c.expect(count_linear_sum(parts) == greedy_count(sum), "mismatch on " + str(sum));
    c.expect(product == greedy_count(sum), "oracle product mismatch on " + str(sum));
  }
  return c.done(std::to_string(lists) + " lists, zero failures");
}

Outcome main_theorem() {
  Checker c;
  std::size_t done = 0, sp = 0, rejection = 0;
  for (std::uint64_t seed = 0; done < 520; ++seed) {
    const std::size_t n = 2 + seed % 8;
    const bool use_sp = seed % 2 == 0;
    const Poset p = use_sp ? random_sp(n, seed) : random_nfree(n, seed);
    if (is_chain(p)) continue;
    ++done;
    (use_sp ? sp : rejection)++;
    c.expect(!oracle::has_n(p), "generator produced an N");
    WitnessPair w;
    try {
      w = half_balanced_witness(p);
    } catch (const std::exception& e) {
      c.expect(false, std::string("witness threw: ") + e.what() + " on " + str(p));
      continue;
    }
    c.expect(gp_ratio(p, w.x, w.y) == half(), "ratio != 1/2 on " + str(p));
    c.expect(greedy_count(p) % 2 == 0, "odd greedy count on " + str(p));
    if (n <= 7) {
      const auto g = oracle::greedy_set(p);
      c.expect(2 * oracle::count_before(g, w.x, w.y) == g.size(), "oracle ratio != 1/2 on " + str(p));
    }
  }
  return c.done(std::to_string(done) + " N-free non-chains (" + std::to_string(sp) + " SP, " +
                std::to_string(rejection) + " rejection-sampled), zero failures");
}

Outcome removal_lemma() {
  Checker c;
  std::size_t instances = 0, removals = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const Poset p = seed % 3 == 0 ? random_poset(n, 0.35, seed) : random_nfree(n, seed);
    const auto removable = removable_minimals(p);
    if (removable.empty()) continue;
    ++instances;
    const auto g = greedy_extensions(p);
    const ExtensionCounter full(p, ExtensionKind::Greedy);
    for (ElementId a : removable) {
      ++removals;
      const Deletion d = delete_element(p, a);
      c.expect(greedy_count(d.poset) == greedy_count(p), "count changed removing " +
                                                            std::to_string(a) + " from " + str(p));
      const ExtensionCounter reduced(d.poset, ExtensionKind::Greedy);
      for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
          if (x == a || y == a || !oracle::incomparable(p, x, y)) continue;
          c.expect(full.before(x, y) == reduced.before(*d.old_to_new[x], *d.old_to_new[y]),
                   "before-count changed on " + str(p));
        }
      std::set<Ids> projected;
      for (const auto& l : g) {
        const LinearExtension r = project_extension(p, a, l);
        c.expect(lift_extension(p, a, r) == l, "lift(project(L)) != L on " + str(p));
        projected.insert(r.order());
      }
      const auto reduced_set = orders(greedy_extensions(d.poset));
      c.expect(projected == reduced_set, "projection not onto G(P-a) on " + str(p));
      for (const Ids& r : reduced_set) {
        const LinearExtension back = project_extension(p, a, lift_extension(p, a, LinearExtension(r)));
        c.expect(back.order() == r, "project(lift(L)) != L on " + str(p));
      }
    }
  }
  c.expect(instances >= 50, "too few instances with a removable minimal");
  return c.done(std::to_string(instances) + " instances, " + std::to_string(removals) +
                " removals, all identities hold");
}

Outcome reversibility() {
  Checker c;
  std::size_t done = 0;
  for (std::uint64_t seed = 0; done < 220; ++seed) {
    const Poset p = random_nfree(3 + seed % 5, seed + 5000);
    ++done;
    const auto dualized = reversed(orders(greedy_extensions(p)));
    c.expect(dualized == oracle::as_set(oracle::greedy_set(dual(p))), "G(P) reversed != G(P^d) on " + str(p));
  }
  std::optional<Poset> first;
  for (std::size_t n = 1; n <= 5 && !first; ++n) {
    for (const Poset& p : enumerate_labeled_posets(n)) {
      const auto rev = reversed(oracle::as_set(oracle::greedy_set(p)));
      const auto target = oracle::as_set(oracle::greedy_set(dual(p)));
      if (!std::includes(target.begin(), target.end(), rev.begin(), rev.end())) {
        first = p;
        break;
      }
    }
  }
  c.expect(first.has_value(), "no non-reversible poset with n <= 5");
  if (first) c.expect(!is_reversible(*first), "engine calls " + str(*first) + " reversible");
  return c.done(std::to_string(done) + " N-free posets reversible; non-reversible example " +
                (first ? str(*first) : std::string("none")));
}

Outcome soundness() {
  Checker c;
  std::size_t posets = 0, pairs = 0;
  auto check = [&](const Poset& p) {
    ++posets;
    const auto expected = oracle::as_set(oracle::greedy_set(p));
    c.expect(orders(greedy_extensions(p)) == expected, "greedy set differs on " + str(p));
    for (ElementId x = 0; x < p.size(); ++x)
      for (ElementId y = 0; y < p.size(); ++y) {
        if (x == y || p.less(y, x)) continue;
        ++pairs;
        bool any = false;
        for (const Ids& o : expected)
          if (std::find(o.begin(), o.end(), x) < std::find(o.begin(), o.end(), y)) any = true;
        c.expect(any, "no greedy extension with x first on " + str(p));
        const auto l = exists_greedy_before(p, x, y);
        c.expect(l && expected.contains(l->order()) && l->before(x, y),
                 "exists_greedy_before wrong on " + str(p));
      }
  };
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : oracle::all_labeled_posets(n)) check(p);
  Rng rng(99);
  for (int i = 0; i < 150; ++i) check(random_poset(5 + rng.below(2), 0.1 + 0.6 * rng.unit(), rng.next()));
  return c.done(std::to_string(posets) + " posets, " + std::to_string(pairs) +
                " ordered pairs, set equality throughout");
}

Outcome width2_sweep() {
  Checker c;
  std::optional<Ratio> min_level;
  std::size_t instances = 0, below = 0;
  bool n_third = false;
  for (std::size_t n = 2; n <= 6; ++n) {
    for_each_labeled_poset(n, [&](const Poset& p) {
      if (width(p) != 2) return;
      ++instances;
      const BalanceReport r = balance_report(p);
      if (!r.best_level) {
        c.expect(false, "width-2 poset without incomparable pair");
        return;
      }
      if (!min_level || *r.best_level < *min_level) min_level = r.best_level;
      if (*r.best_level < Ratio(1, 3)) ++below;
      if (n == 4 && find_n(p) && p.cover_count() == 3) n_third = n_third || *r.best_level == Ratio(1, 3);
    });
  }
  c.expect(n_third, "an N did not attain exactly 1/3");
  const Width2Sweep lib = sweep_width2(6);
  c.expect(lib.consistent, "library sweep inconsistent: " + lib.inconsistency);
  c.expect(lib.instances == instances, "library sweep saw a different instance count");
  c.expect(lib.min_level == min_level, "library sweep minimum differs");
  c.expect(lib.below_third == below, "library sweep below-1/3 count differs");
  std::string summary = std::to_string(instances) + " width-2 posets, min best_level " +
                        (min_level ? min_level->str() : "none") + ", N attains 1/3";
  summary += below == 0 ? ", none below 1/3" : ", FINDING: " + std::to_string(below) + " below 1/3";
  return c.done(summary);
}

Outcome autonomous_pairs() {
  Checker c;
  Rng rng(31337);
  std::size_t built = 0;
  for (; built < 150; ++built) {
    const std::size_t k = 2 + rng.below(3);
    const Poset index = random_poset(k, 0.2 + 0.6 * rng.unit(), rng.next());
    const std::size_t slot = rng.below(k);
    std::vector<Poset> parts;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == slot) {
        parts.push_back(antichain(2));
      } else {
        parts.push_back(random_poset(1 + rng.below(2), 0.5, rng.next()));
        if (i < slot) offset += parts.back().size();
      }
    }
    const Poset p = lex_sum(index, parts);
    const ElementId x = offset, y = offset + 1;
    c.expect(oracle::incomparable(p, x, y) && oracle::autonomous(p, {x, y}),
             "constructed pair not an autonomous antichain in " + str(p));
    c.expect(gp_ratio(p, x, y) == half(), "GP != 1/2 on " + str(p));
    if (p.size() <= 7) {
      const auto g = oracle::greedy_set(p);
      c.expect(2 * oracle::count_before(g, x, y) == g.size(), "oracle GP != 1/2 on " + str(p));
    }
  }
  return c.done(std::to_string(built) + " constructed posets, every pair at exactly 1/2");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"figure-3 reproduction", figure_three},
      {"chain corollary", chain_corollary},
      {"disjoint-sum formula", disjoint_sum_formula},
      {"linear-sum product", linear_sum_product},
      {"main theorem witness", main_theorem},
      {"minimal removal", removal_lemma},
      {"reversibility", reversibility},
      {"greedy soundness/completeness", soundness},
      {"width-2 sweep", width2_sweep},
      {"autonomous pair is 1/2", autonomous_pairs},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
