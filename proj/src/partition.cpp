#include "ssmkit/partition.hpp"

#include <algorithm>

namespace ssmkit {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw arg_error("Partition: parts must be weakly decreasing positive");
  }
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (part(i) < inner.part(i)) return false;
  return true;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int c = 1; c <= part(1); ++c) {
    int h = 0;
    while (h < length() && parts[h] >= c) ++h;
    t.push_back(h);
  }
  return Partition(std::move(t));
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

bool dominance_lt(const Partition& a, const Partition& b) {
  if (a == b) return false;
  int len = std::max(a.length(), b.length());
  int pa = 0, pb = 0;
  for (int i = 1; i <= len; ++i) {
    pa += a.part(i);
    pb += b.part(i);
    if (pa > pb) return false;
  }
  return true;
}

namespace {

void gen_parts(int rem, int maxpart, int maxlen, std::vector<int>& acc,
               std::vector<Partition>& out) {
  if (rem == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (maxlen == 0) return;
  for (int p = std::min(rem, maxpart); p >= 1; --p) {
    acc.push_back(p);
    gen_parts(rem - p, p, maxlen - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of_weight(int w, int maxlen, int maxpart) {
  if (w < 0) return {};
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_parts(w, maxpart < 0 ? w : maxpart,
            maxlen < 0 ? w : maxlen, acc, out);
  std::sort(out.begin(), out.end(), PartLess{});
  return out;
}

std::vector<Partition> partitions_up_to_weight(int wmax, int maxlen,
                                               int maxpart) {
  std::vector<Partition> out;
  for (int w = 0; w <= wmax; ++w)
    for (auto& p : partitions_of_weight(w, maxlen, maxpart))
      out.push_back(std::move(p));
  return out;
}

}  // namespace ssmkit
