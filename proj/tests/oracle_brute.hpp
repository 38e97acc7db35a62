// Test-only reference implementations, kept deliberately independent of the
// library: maps are std::map<int,int> built by recursive extension rather
// than radix decoding, and every predicate is restated from its definition.
#ifndef CHAINSEMI_TESTS_ORACLE_BRUTE_HPP_
#define CHAINSEMI_TESTS_ORACLE_BRUTE_HPP_

#include <cstdint>
#include <cstdlib>
#include <map>
#include <vector>

namespace oracle {

using Map = std::map<int, int>;

inline void extend_maps(int n, int point, Map current, std::vector<Map>& out) {
  if (point > n) {
    out.push_back(current);
    return;
  }
  extend_maps(n, point + 1, current, out);  // point stays undefined
  for (int v = 1; v <= n; ++v) {
    current[point] = v;
    extend_maps(n, point + 1, current, out);
    current.erase(point);
  }
}

inline std::vector<Map> all_maps(int n) {
  std::vector<Map> out;
  extend_maps(n, 1, {}, out);
  return out;
}

inline bool contraction(const Map& m) {
  for (const auto& [x, xv] : m) {
    for (const auto& [y, yv] : m) {
      if (std::abs(xv - yv) > std::abs(x - y)) return false;
    }
  }
  return true;
}

inline bool order_preserving(const Map& m) {
  for (const auto& [x, xv] : m) {
    for (const auto& [y, yv] : m) {
      if (x <= y && xv > yv) return false;
    }
  }
  return true;
}

inline bool order_reversing(const Map& m) {
  for (const auto& [x, xv] : m) {
    for (const auto& [y, yv] : m) {
      if (x <= y && xv < yv) return false;
    }
  }
  return true;
}

inline Map compose(const Map& a, const Map& b) {
  Map out;
  for (const auto& [x, v] : a) {
    auto it = b.find(v);
    if (it != b.end()) out[x] = it->second;
  }
  return out;
}

inline std::uint64_t encode(const Map& m, int n) {
  std::uint64_t id = 0;
  std::uint64_t weight = 1;
  for (int i = 1; i <= n; ++i) {
    auto it = m.find(i);
    id += weight * static_cast<std::uint64_t>(it == m.end() ? 0 : it->second);
    weight *= static_cast<std::uint64_t>(n + 1);
  }
  return id;
}

inline bool in_family(const char* family, const Map& m, int n) {
  const std::string f = family;
  if (f == "p") return true;
  if (!contraction(m)) return false;
  if (f == "cp") return true;
  if (f == "ocp") return order_preserving(m);
  if (f == "orcp") return order_preserving(m) || order_reversing(m);
  const bool full = static_cast<int>(m.size()) == n;
  if (f == "ct") return full;
  if (f == "oct") return full && order_preserving(m);
  return false;
}

inline std::vector<std::uint64_t> family_ids(const char* family, int n) {
  std::vector<std::uint64_t> ids;
  for (const Map& m : all_maps(n)) {
    if (in_family(family, m, n)) ids.push_back(encode(m, n));
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace oracle

#endif  // CHAINSEMI_TESTS_ORACLE_BRUTE_HPP_
