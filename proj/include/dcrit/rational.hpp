#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace dcrit {

// Exact arithmetic only. The whole engine works over Q; there is no
// floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Canonical "p/q" (or "p" when q == 1) string, matching the report schema.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Parses "p" or "p/q" with an optional leading sign. Throws on q == 0 or
// malformed input. Result is canonicalized (lowest terms, q > 0).
Rat rat_parse(const std::string& s);

inline Rat rat_of(long n) { return Rat(n); }

} // namespace dcrit
