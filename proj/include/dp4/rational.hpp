#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace dp4 {

// Exact rational numbers. All arithmetic in this project is exact; there is
// no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p", or "p/q".
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& r);

// Exact square root, if r is the square of a rational.
std::optional<Rat> rat_sqrt(const Rat& r);

}  // namespace dp4
