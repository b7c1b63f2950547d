#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace symnorm {

using Rat = mpq_class;
using Int = long long;

Rat make_rat(Int num, Int den = 1);

// Accepts "p", "p/q", "-p/q"; the result is canonical.
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& q);

bool is_integer(const Rat& q);
Rat floor_rat(const Rat& q);
Rat ceil_rat(const Rat& q);
// 0 when q is an integer, 1 otherwise.
int frac_flag(const Rat& q);

// Throws std::overflow_error when q is not an integer fitting in Int.
Int to_int(const Rat& q);
Int floor_int(const Rat& q);
Int ceil_int(const Rat& q);

}  // namespace symnorm
