#ifndef NILCOH_GRADED_HPP
#define NILCOH_GRADED_HPP

#include <map>
#include <utility>
#include <vector>

#include "nilcoh/numeric.hpp"

namespace nilcoh {

struct GradedKeyLess {
  bool operator()(const std::pair<std::vector<Rat>, int>& a,
                  const std::pair<std::vector<Rat>, int>& b) const {
    if (a.second != b.second) return a.second < b.second;
    for (size_t i = 0; i < a.first.size() && i < b.first.size(); ++i) {
      int c = cmp(a.first[i], b.first[i]);
      if (c != 0) return c < 0;
    }
    return a.first.size() < b.first.size();
  }
};

// finitely supported dimension table indexed by (lattice point, degree)
struct GradedDims {
  std::map<std::pair<std::vector<Rat>, int>, long long, GradedKeyLess> entries;
  int bound = -1;  // truncation radius when one applies

  void add(const std::vector<Rat>& key, int degree, long long v) {
    if (v == 0) return;
    entries[{key, degree}] += v;
  }
  long long at(const std::vector<Rat>& key, int degree) const {
    auto it = entries.find({key, degree});
    return it == entries.end() ? 0 : it->second;
  }
  long long total() const {
    long long t = 0;
    for (const auto& [k, v] : entries) t += v;
    return t;
  }
  bool operator==(const GradedDims& o) const { return entries == o.entries; }
};

}  // namespace nilcoh

#endif
