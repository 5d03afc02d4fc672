#pragma once

// Counting formulas for sums of posets, the minimal-element removal that
// preserves greedy before-counts, and the recursive search for a pair that
// every greedy extension splits evenly.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gbp/greedy.hpp"
#include "gbp/poset.hpp"
#include "gbp/ratio.hpp"

namespace gbp {

// jump count -> number of greedy extensions with that many jumps
using JumpProfile = std::map<std::size_t, BigInt>;

JumpProfile jump_profile(const Poset& p, std::uint64_t cap = kDefaultCap);

// (sum of parts)! / prod(parts!)
BigInt multinomial(std::span<const std::size_t> parts);

// Greedy count of the disjoint sum of `components`, from their jump
// profiles. A component with s jumps contributes s + 1 blocks, and the
// blocks of different components interleave freely.
BigInt count_disjoint_sum(std::span<const Poset> components, std::uint64_t cap = kDefaultCap);
BigInt count_disjoint_sum(std::span<const JumpProfile> profiles);
// Product of the components' greedy counts.
BigInt count_linear_sum(std::span<const Poset> components, std::uint64_t cap = kDefaultCap);
// m!
BigInt count_chain_sum(std::size_t m);

// Minimal, non-maximal a whose upper covers all have a as their only lower
// cover, ascending.
std::vector<ElementId> removable_minimals(const Poset& p);

// L with a removed, in the indices of delete_element(p, a).
// Throws PreconditionViolated unless a is removable and l is greedy in p.
LinearExtension project_extension(const Poset& p, ElementId a, const LinearExtension& l);
// Inverse of project_extension: a goes immediately before its first upper
// cover in `reduced`, which uses the indices of delete_element(p, a).
LinearExtension lift_extension(const Poset& p, ElementId a, const LinearExtension& reduced);

// First pair of minimal elements, lexicographically, forming an autonomous
// antichain.
std::optional<Pair> autonomous_minimal_pair(const Poset& p);

struct WitnessStep {
  enum class Kind { RemovedMinimal, AutonomousPair };
  Kind kind;
  // original index of the removed element, or the pair found
  ElementId first;
  ElementId second;
};

struct WitnessPair {
  ElementId x = 0, y = 0;
  std::vector<WitnessStep> trace;
};

// Repeatedly removes the least removable minimal element; when none is left
// the remaining poset has an autonomous pair of minimal elements, which is
// returned in original indices. Throws NotNFree or IsChain.
WitnessPair half_balanced_witness(const Poset& p);

struct GoodTriple {
  ElementId x, y, z;
  friend bool operator==(const GoodTriple&, const GoodTriple&) = default;
};

// All (x, y, z) with x < z, y incomparable to x and z, and {x, y} autonomous
// once z is removed; lexicographic.
std::vector<GoodTriple> good_triples(const Poset& p);

}  // namespace gbp
