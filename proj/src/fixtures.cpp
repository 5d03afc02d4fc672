#include "gbp/fixtures.hpp"

#include <array>

namespace gbp::fixtures {

Poset n_poset() {
  const std::array<Pair, 3> covers{{{0, 1}, {2, 1}, {2, 3}}};
  return build_poset(4, covers);
}

Poset n_plus_point() {
  const std::array<Pair, 3> covers{{{0, 2}, {0, 3}, {1, 3}}};
  return Poset::from_pairs(5, covers, {"a", "b", "c", "d", "e"});
}

Poset v_poset() {
  const std::array<Pair, 2> covers{{{0, 2}, {1, 2}}};
  return build_poset(3, covers);
}

Poset chain2_plus_point() {
  const std::array<Pair, 1> covers{{{0, 1}}};
  return build_poset(3, covers);
}

}  // namespace gbp::fixtures
