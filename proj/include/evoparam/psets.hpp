#pragma once

#include <string>
#include <vector>

#include "evoparam/tree.hpp"

namespace evoparam::psets {

// add/sub/mul/protected-div over the given variables, ERC uniform in [-1,1].
// Protected division returns 1 on a zero divisor.
PrimitiveSet arithmetic(const std::vector<std::string>& variables, bool with_erc = true);

// and/or/xor/not over b0..b{n-1}.
PrimitiveSet parity(int n_bits);

// and/or/not/if over a0..a{k-1}, d0..d{2^k-1}.
PrimitiveSet multiplexer(int addr_bits);

// if-food-ahead/prog2/prog3 with action terminals move, turn-left,
// turn-right. Not value-evaluable; interpreted by the ant simulator.
PrimitiveSet ant();

} // namespace evoparam::psets
