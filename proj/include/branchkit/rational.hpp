// Exact rational scalar type and string conversions shared by the whole kit.
#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace branchkit {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "num", "num/den" or a decimal-free integer string. Throws on junk.
Rat rat_parse(const std::string& s);

// Canonical "num" or "num/den" rendering (den > 0, gcd = 1).
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

using QVec = std::vector<Rat>;

inline Rat rat_parse(const char* s) { return rat_parse(std::string(s)); }

}  // namespace branchkit
