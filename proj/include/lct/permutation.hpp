#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "lct/geometry.hpp"

namespace lct {

// Bijection on point labels 0..m-1; map[i] is the source index placed at
// position i.
struct Permutation {
  std::vector<int> map;

  int m() const { return static_cast<int>(map.size()); }

  static Permutation identity(int m) {
    Permutation p;
    p.map.resize(m);
    std::iota(p.map.begin(), p.map.end(), 0);
    return p;
  }

  static Permutation reversal(int m) {
    Permutation p = identity(m);
    std::reverse(p.map.begin(), p.map.end());
    return p;
  }

  Permutation inverse() const {
    Permutation p;
    p.map.resize(map.size());
    for (int i = 0; i < m(); ++i) p.map[map[i]] = i;
    return p;
  }

  // (a * b) applies b first, then a.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation p;
    p.map.reserve(a.map.size());
    for (int i = 0; i < a.m(); ++i) p.map.push_back(b.map[a.map[i]]);
    return p;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.map == b.map; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.map < b.map; }

  PointConfig apply(const PointConfig& cfg) const {
    PointConfig out;
    out.points.reserve(map.size());
    for (int src : map) out.points.push_back(cfg.points[src]);
    return out;
  }
};

inline std::string to_string(const Permutation& p) {
  std::string s;
  for (int i = 0; i < p.m(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.map[i]);
  }
  return s;
}

// All permutations of m labels in lexicographic order.
inline std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(m);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.map.begin(), p.map.end()));
  return out;
}

}  // namespace lct
