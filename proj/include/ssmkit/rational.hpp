#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ssmkit {

// Exact rational scalar used for every coefficient in the kit.
using Rat = mpq_class;
using Int = mpz_class;

// Raised when a mathematical identity the code relies on fails to hold
// (non-exact division, non-integer symmetrization, missed stabilization...).
// Carries a human-readable witness of the failure.
struct math_error : std::runtime_error {
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed arguments (bad dimensions, invalid column sets, ...).
struct arg_error : std::invalid_argument {
  explicit arg_error(const std::string& what) : std::invalid_argument(what) {}
};

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int factorial(long n) {
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace ssmkit
