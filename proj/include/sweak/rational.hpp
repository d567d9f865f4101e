#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace sweak {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Parses "p", "-p", "p/q" (exact; no floats).
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r(s);
  return r;
}

inline std::string rat_str(const Rat& r) { return r.str(); }

}  // namespace sweak
