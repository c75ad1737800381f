#pragma once

#include <cstddef>
#include <string_view>

#include "frobsyz/polynomial.hpp"

namespace frobsyz {

/// Parses `2*x^2*y - (x+y)^3 + 1`. Integer literals are reduced mod p,
/// `*` is required between factors, `^` takes a non-negative integer.
/// Errors are ParseError with positions offset by (line, column).
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line = 1,
                            std::size_t column = 1);

}  // namespace frobsyz
