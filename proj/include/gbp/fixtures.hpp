#pragma once

#include "gbp/poset.hpp"

namespace gbp::fixtures {

// a < b > c < d with a, d incomparable: covers 0<1, 2<1, 2<3.
Poset n_poset();

// Covers 0<2, 0<3, 1<3 (an N read as a=0, b=1, c=2, d=3) plus the isolated
// element 4. Eleven greedy extensions.
Poset n_plus_point();

// 0 < 2 and 1 < 2.
Poset v_poset();

// 0 < 1 plus the isolated element 2.
Poset chain2_plus_point();

}  // namespace gbp::fixtures
