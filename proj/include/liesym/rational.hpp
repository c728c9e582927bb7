#pragma once

#include <gmpxx.h>

#include <string>

namespace liesym {

// Exact arbitrary-precision rational. Always kept in lowest terms.
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// r^n for integer n (n<0 requires r!=0).
Rat rat_pow(const Rat& r, long n);

// Lowest-terms decimal-free rendering: "3", "-1/2".
std::string rat_str(const Rat& r);

}  // namespace liesym
