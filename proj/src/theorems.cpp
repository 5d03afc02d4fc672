#include "gbp/theorems.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "gbp/error.hpp"

namespace gbp {

JumpProfile jump_profile(const Poset& p, std::uint64_t cap) {
  JumpProfile profile;
  for_each_extension(
      p, ExtensionKind::Greedy,
      [&](const LinearExtension& l) { profile[blocks(p, l).jump_count] += 1; }, cap);
  return profile;
}

BigInt multinomial(std::span<const std::size_t> parts) {
  // Product of binomials C(a_1 + ... + a_k, a_k), built incrementally.
  BigInt out = 1;
  std::size_t sum = 0;
  for (std::size_t part : parts) {
    for (std::size_t i = 1; i <= part; ++i) {
      ++sum;
      out *= sum;
      out /= i;
    }
  }
  return out;
}

BigInt count_disjoint_sum(std::span<const JumpProfile> profiles) {
  if (profiles.empty()) throw Error(ErrorCode::ArityMismatch, "empty component list");
  // total blocks placed so far -> weighted number of interleavings
  std::map<std::size_t, BigInt> acc{{0, 1}};
  for (const JumpProfile& profile : profiles) {
    std::map<std::size_t, BigInt> next;
    for (const auto& [placed, weight] : acc) {
      for (const auto& [jumps, count] : profile) {
        const std::array<std::size_t, 2> parts{placed, jumps + 1};
        next[placed + jumps + 1] += weight * count * multinomial(parts);
      }
    }
    acc = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [placed, weight] : acc) total += weight;
  return total;
}

BigInt count_disjoint_sum(std::span<const Poset> components, std::uint64_t cap) {
  if (components.empty()) throw Error(ErrorCode::ArityMismatch, "empty component list");
  if (components.size() == 1) return greedy_count(components.front(), cap);
  std::vector<JumpProfile> profiles;
  profiles.reserve(components.size());
  for (const Poset& c : components) profiles.push_back(jump_profile(c, cap));
  return count_disjoint_sum(profiles);
}

BigInt count_linear_sum(std::span<const Poset> components, std::uint64_t cap) {
  if (components.empty()) throw Error(ErrorCode::ArityMismatch, "empty component list");
  BigInt product = 1;
  for (const Poset& c : components) product *= greedy_count(c, cap);
  return product;
}

BigInt count_chain_sum(std::size_t m) { return factorial(static_cast<unsigned>(m)); }

std::vector<ElementId> removable_minimals(const Poset& p) {
  std::vector<ElementId> out;
  for (ElementId a : minimals(p)) {
    const Mask ups = p.upper_cover_mask(a);
    if (ups == 0) continue;
    bool sole = true;
    for (ElementId u : elements_of(ups)) sole = sole && p.lower_cover_mask(u) == bit(a);
    if (sole) out.push_back(a);
  }
  return out;
}

namespace {

void require_removable(const Poset& p, ElementId a) {
  if (a >= p.size()) throw Error(ErrorCode::IndexOutOfRange, "element out of range");
  const auto removable = removable_minimals(p);
  if (std::find(removable.begin(), removable.end(), a) == removable.end()) {
    throw Error(ErrorCode::PreconditionViolated,
                "element " + p.name(a) + " is not a removable minimal element");
  }
}

bool greedy_in(const Poset& p, const LinearExtension& l) {
  return is_linear_extension(p, l.order()) && is_greedy(p, l);
}

}  // namespace

LinearExtension project_extension(const Poset& p, ElementId a, const LinearExtension& l) {
  require_removable(p, a);
  if (!greedy_in(p, l)) {
    throw Error(ErrorCode::PreconditionViolated, "extension is not greedy in the poset");
  }
  const Deletion del = delete_element(p, a);
  std::vector<ElementId> order;
  order.reserve(l.size() - 1);
  for (ElementId x : l.order()) {
    if (x != a) order.push_back(*del.old_to_new[x]);
  }
  return LinearExtension(std::move(order));
}

LinearExtension lift_extension(const Poset& p, ElementId a, const LinearExtension& reduced) {
  require_removable(p, a);
  const Deletion del = delete_element(p, a);
  if (!greedy_in(del.poset, reduced)) {
    throw Error(ErrorCode::PreconditionViolated,
                "extension is not greedy in the poset with the element removed");
  }
  std::vector<ElementId> order;
  order.reserve(p.size());
  bool inserted = false;
  for (ElementId x : reduced.order()) {
    const ElementId old = del.new_to_old[x];
    if (!inserted && p.covered_by(a, old)) {
      order.push_back(a);
      inserted = true;
    }
    order.push_back(old);
  }
  return LinearExtension(std::move(order));
}

std::optional<Pair> autonomous_minimal_pair(const Poset& p) {
  const auto mins = minimals(p);
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      if (is_autonomous(p, bit(mins[i]) | bit(mins[j]))) return Pair{mins[i], mins[j]};
    }
  }
  return std::nullopt;
}

WitnessPair half_balanced_witness(const Poset& p) {
  if (auto n = find_n(p)) {
    throw Error(ErrorCode::NotNFree,
                "input contains an N: " + p.name(n->a) + " < " + p.name(n->b) + " > " +
                    p.name(n->c) + " < " + p.name(n->d));
  }
  if (is_chain(p)) throw Error(ErrorCode::IsChain, "input is a chain");

  WitnessPair out;
  Poset current = p;
  std::vector<ElementId> to_original(p.size());
  for (ElementId x = 0; x < p.size(); ++x) to_original[x] = x;

  for (;;) {
    const auto removable = removable_minimals(current);
    if (removable.empty()) break;
    const ElementId a = removable.front();
    out.trace.push_back({WitnessStep::Kind::RemovedMinimal, to_original[a], to_original[a]});
    Deletion del = delete_element(current, a);
    std::vector<ElementId> remap(del.new_to_old.size());
    for (ElementId i = 0; i < remap.size(); ++i) remap[i] = to_original[del.new_to_old[i]];
    to_original = std::move(remap);
    current = std::move(del.poset);
    // Removing a minimal element keeps the surviving covers, so N-freeness
    // carries over, and a chain remainder would force p to be a chain.
    if (!is_n_free(current) || is_chain(current)) {
      throw std::logic_error("removal left an N or a chain; recursion invariant broken");
    }
  }

  const auto pair = autonomous_minimal_pair(current);
  if (!pair) {
    throw std::logic_error("no autonomous pair of minimal elements in an N-free non-chain");
  }
  out.x = to_original[pair->first];
  out.y = to_original[pair->second];
  out.trace.push_back({WitnessStep::Kind::AutonomousPair, out.x, out.y});
  return out;
}

std::vector<GoodTriple> good_triples(const Poset& p) {
  std::vector<GoodTriple> out;
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : elements_of(p.incomparable_to(x))) {
      for (ElementId z : elements_of(p.above(x) & p.incomparable_to(y))) {
        const Mask outside = p.all() & ~(bit(x) | bit(y) | bit(z));
        if ((p.above(x) & outside) == (p.above(y) & outside) &&
            (p.below(x) & outside) == (p.below(y) & outside)) {
          out.push_back({x, y, z});
        }
      }
    }
  }
  return out;
}

}  // namespace gbp
