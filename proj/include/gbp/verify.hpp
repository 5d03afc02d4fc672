#pragma once

// Named invariant suites run by `gbp verify <suite>`. Each suite draws its
// instances from the seeded generators and reports one verdict per property.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbp/poset.hpp"
#include "gbp/ratio.hpp"

namespace gbp {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;
  // Reportable observations that are not failures.
  std::vector<std::string> findings;

  bool passed() const;
};

struct SuiteOptions {
  std::optional<std::size_t> instances;  // suite default when unset
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_n;
};

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);
// Throws PreconditionViolated for an unknown suite name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});

// Every permutation of the elements that passes is_greedy, ascending.
std::vector<std::vector<ElementId>> greedy_by_permutation_filter(const Poset& p);

struct Width2Sweep {
  std::size_t max_n = 0;
  std::vector<std::size_t> instances_by_n;  // index n
  std::size_t instances = 0;
  std::optional<Ratio> min_level;
  std::optional<Poset> argmin;
  std::size_t below_third = 0;
  std::optional<Poset> first_below_third;
  // A labeled N was met and its best level is exactly 1/3.
  bool n_attains_third = false;
  bool consistent = true;
  std::string inconsistency;
};

// All labeled posets of width 2 with 2 <= n <= max_n.
Width2Sweep sweep_width2(std::size_t max_n);

// First labeled poset (n ascending) whose greedy extensions do not all
// reverse into greedy extensions of the dual.
std::optional<Poset> find_non_reversible(std::size_t max_n);

}  // namespace gbp
