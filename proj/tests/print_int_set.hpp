#pragma once

#include <ostream>

#include "hsumset/int_set.hpp"

namespace hsumset {

// Readable gtest failure messages.
inline void PrintTo(const IntSet& a, std::ostream* os) { *os << '{' << to_string(a) << '}'; }

}  // namespace hsumset
