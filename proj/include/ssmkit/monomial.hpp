#pragma once

#include <array>
#include <cstdint>
#include <cstring>

#include "ssmkit/rational.hpp"
#include "ssmkit/vartable.hpp"

namespace ssmkit {

// Packed exponent vector.  Byte 0 caches the total degree so that a plain
// memcmp over the whole array realizes graded order first, then
// lexicographic order on the exponent vector — the canonical term order.
struct Mono {
  static constexpr int kBytes = kMaxVars + 2;  // degree byte + exponents + pad
  std::array<uint8_t, kBytes> b{};

  int deg() const { return b[0]; }
  int exp(int var) const { return b[var + 1]; }

  void set_exp(int var, int e) {
    b[0] = static_cast<uint8_t>(b[0] - b[var + 1] + e);
    b[var + 1] = static_cast<uint8_t>(e);
  }

  // Adds d to one exponent; d may be negative but must keep the slot >= 0.
  void bump(int var, int d) {
    b[var + 1] = static_cast<uint8_t>(b[var + 1] + d);
    b[0] = static_cast<uint8_t>(b[0] + d);
  }

  bool divisible_by(const Mono& o) const {
    for (int i = 1; i < kBytes; ++i)
      if (b[i] < o.b[i]) return false;
    return true;
  }

  static Mono mul(const Mono& x, const Mono& y) {
    Mono r;
    unsigned total = 0;
    for (int i = 1; i < kBytes; ++i) {
      unsigned s = static_cast<unsigned>(x.b[i]) + y.b[i];
      if (s > 255) throw math_error("Mono: exponent overflow");
      r.b[i] = static_cast<uint8_t>(s);
      total += s;
    }
    if (total > 255) throw math_error("Mono: degree overflow");
    r.b[0] = static_cast<uint8_t>(total);
    return r;
  }

  friend int cmp(const Mono& x, const Mono& y) {
    return std::memcmp(x.b.data(), y.b.data(), kBytes);
  }
  friend bool operator<(const Mono& x, const Mono& y) { return cmp(x, y) < 0; }
  friend bool operator==(const Mono& x, const Mono& y) { return cmp(x, y) == 0; }
};

}  // namespace ssmkit
