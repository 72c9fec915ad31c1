#pragma once

#include <string>
#include <vector>

#include "ssmkit/rational.hpp"

namespace ssmkit {

// Integer vectors index Schur symbols before normalization.
using IntVec = std::vector<int>;

// Weakly decreasing positive parts; the empty partition is {}.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);  // validates

  int weight() const {
    int w = 0;
    for (int p : parts) w += p;
    return w;
  }
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const {  // 1-based, 0 beyond the length
    return (i >= 1 && i <= length()) ? parts[i - 1] : 0;
  }

  bool contains(const Partition& inner) const;
  Partition transpose() const;

  std::string str() const;

  bool operator==(const Partition&) const = default;
};

// Canonical order: weight ascending, then parts lexicographically ascending.
struct PartLess {
  bool operator()(const Partition& a, const Partition& b) const {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts < b.parts;
  }
};

// a strictly below b in dominance order (same weight assumed).
bool dominance_lt(const Partition& a, const Partition& b);

// All partitions of weight exactly w with length <= maxlen and parts
// <= maxpart (negative bound = unbounded), in canonical order.
std::vector<Partition> partitions_of_weight(int w, int maxlen = -1,
                                            int maxpart = -1);
// All partitions of weight 0..wmax, canonical order.
std::vector<Partition> partitions_up_to_weight(int wmax, int maxlen = -1,
                                               int maxpart = -1);

}  // namespace ssmkit
