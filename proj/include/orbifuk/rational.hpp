/**
 * rational.hpp — exact rational scalar type.
 *
 * All arithmetic in the engine is exact over ℚ. The scalar is Boost's
 * cpp_rational; expression templates mean intermediate results must always
 * be assigned to a concrete Rat, never captured with auto.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace orbifuk {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rat_str(const Rat& r) { return r.str(); }

inline int rat_sign(const Rat& r) { return r.sign(); }

// (-1)^n as a rational, for the ubiquitous Koszul-style signs.
inline Rat sign_pow(long long n) {
  return ((n % 2 + 2) % 2 == 0) ? Rat(1) : Rat(-1);
}

}  // namespace orbifuk
