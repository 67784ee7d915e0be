#pragma once

#include <vector>

#include "rlat/algebra.hpp"

namespace rlat::fixtures {

/// {0,a,b,c,1}: a and b incomparable, a v b = c < 1, mult = meet.
Algebra ex5();
/// Three-element Goedel chain.
Algebra c3();
/// Three-element Lukasiewicz chain.
Algebra l3();
/// Four-element Boolean algebra.
Algebra b4();
Algebra b2();

/// C3, EX5, B4, L3.
std::vector<Algebra> all();

}  // namespace rlat::fixtures
