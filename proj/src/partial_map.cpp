#include "chainsemi/partial_map.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace chainsemi {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::out_of_range: return "OutOfRange";
    case errc::duplicate_point: return "DuplicatePoint";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::empty_domain: return "EmptyDomain";
    case errc::id_out_of_range: return "IdOutOfRange";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::family_unsupported: return "FamilyUnsupported";
    case errc::not_member: return "NotMember";
    case errc::height_too_small: return "HeightTooSmall";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::not_strongly_regular: return "NotStronglyRegular";
    case errc::hypothesis_not_met: return "HypothesisNotMet";
    case errc::io_error: return "IoError";
    case errc::config_invalid: return "ConfigInvalid";
  }
  return "UnknownError";
}

PartialMap::PartialMap(int n) : n_(n), entries_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > kMaxChainSize) {
    throw Error(errc::out_of_range,
                "chain size must be in 1.." + std::to_string(kMaxChainSize) +
                    ", got " + std::to_string(n));
  }
}

point_type PartialMap::value(point_type pt) const {
  if (pt < 1 || pt > n_) {
    throw Error(errc::out_of_range, "point " + std::to_string(pt) +
                                        " outside chain [" + std::to_string(n_) + "]");
  }
  return entries_[static_cast<std::size_t>(pt - 1)];
}

std::vector<point_type> PartialMap::domain() const {
  std::vector<point_type> out;
  for (int i = 0; i < n_; ++i) {
    if (entries_[static_cast<std::size_t>(i)] != 0) out.push_back(i + 1);
  }
  return out;
}

std::vector<point_type> PartialMap::image() const {
  std::set<point_type> vals;
  for (point_type v : entries_) {
    if (v != 0) vals.insert(v);
  }
  return {vals.begin(), vals.end()};
}

std::vector<point_type> PartialMap::fixed_points() const {
  std::vector<point_type> out;
  for (int i = 0; i < n_; ++i) {
    if (entries_[static_cast<std::size_t>(i)] == i + 1) out.push_back(i + 1);
  }
  return out;
}

int PartialMap::height() const { return static_cast<int>(image().size()); }

bool PartialMap::is_empty_map() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](point_type v) { return v == 0; });
}

bool PartialMap::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (entries_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const PartialMap& a, const PartialMap& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return canonical_id(a) <=> canonical_id(b);
}

PartialMap make(int n, const std::vector<std::pair<point_type, point_type>>& pairs) {
  PartialMap m(n);
  for (auto [pt, val] : pairs) {
    if (pt < 1 || pt > n || val < 1 || val > n) {
      throw Error(errc::out_of_range,
                  "(" + std::to_string(pt) + " -> " + std::to_string(val) +
                      ") outside chain [" + std::to_string(n) + "]");
    }
    auto& slot = m.entries_[static_cast<std::size_t>(pt - 1)];
    if (slot != 0) {
      throw Error(errc::duplicate_point,
                  "point " + std::to_string(pt) + " assigned twice");
    }
    slot = val;
  }
  return m;
}

PartialMap identity(int n) {
  std::vector<std::pair<point_type, point_type>> pairs;
  for (int i = 1; i <= n; ++i) pairs.emplace_back(i, i);
  return make(n, pairs);
}

PartialMap identity_on(int n, const std::vector<point_type>& points) {
  std::vector<std::pair<point_type, point_type>> pairs;
  for (point_type p : points) pairs.emplace_back(p, p);
  return make(n, pairs);
}

PartialMap compose(const PartialMap& a, const PartialMap& b) {
  if (a.n_ != b.n_) {
    throw Error(errc::size_mismatch, "chain sizes " + std::to_string(a.n_) +
                                         " and " + std::to_string(b.n_));
  }
  PartialMap out(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    point_type v = a.entries_[static_cast<std::size_t>(i)];
    out.entries_[static_cast<std::size_t>(i)] =
        v == 0 ? 0 : b.entries_[static_cast<std::size_t>(v - 1)];
  }
  return out;
}

map_id canonical_id(const PartialMap& m) {
  map_id id = 0;
  const auto base = static_cast<map_id>(m.chain_size() + 1);
  for (auto it = m.entries_.rbegin(); it != m.entries_.rend(); ++it) {
    id = id * base + static_cast<map_id>(*it);
  }
  return id;
}

map_id map_space_size(int n) {
  map_id total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<map_id>(n + 1);
  return total;
}

PartialMap decode(int n, map_id id) {
  PartialMap m(n);
  if (id >= map_space_size(n)) {
    throw Error(errc::id_out_of_range, std::to_string(id) + " >= (n+1)^n for n=" +
                                           std::to_string(n));
  }
  const auto base = static_cast<map_id>(n + 1);
  for (int i = 0; i < n; ++i) {
    m.entries_[static_cast<std::size_t>(i)] = static_cast<point_type>(id % base);
    id /= base;
  }
  return m;
}

PropertySet classify(const PartialMap& m) {
  PropertySet p;
  const auto dom = m.domain();
  p.contraction = p.order_preserving = p.order_reversing = p.isometry =
      p.order_decreasing = true;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const point_type x = dom[i];
    const point_type xv = m.value(x);
    if (xv > x) p.order_decreasing = false;
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      const point_type y = dom[j];  // x < y
      const point_type yv = m.value(y);
      const int dist = y - x;
      const int img_dist = std::abs(xv - yv);
      if (img_dist > dist) p.contraction = false;
      if (img_dist != dist) p.isometry = false;
      if (xv > yv) p.order_preserving = false;
      if (xv < yv) p.order_reversing = false;
    }
  }
  p.idempotent = compose(m, m) == m;
  p.full = static_cast<int>(dom.size()) == m.chain_size();
  return p;
}

bool is_idempotent_via_fixpoints(const PartialMap& m) {
  return m.image() == m.fixed_points();
}

std::vector<point_type> KernelPartition::domain() const {
  std::vector<point_type> out;
  for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool KernelPartition::blocks_elementwise_ordered() const {
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (blocks[i].back() >= blocks[i + 1].front()) return false;
  }
  return true;
}

KernelPartition kernel(const PartialMap& m) {
  const auto dom = m.domain();
  if (dom.empty()) {
    throw Error(errc::empty_domain, "the empty map has no kernel partition");
  }
  // Group domain points by image value; points arrive in ascending order,
  // so each block stays sorted.
  std::vector<std::vector<point_type>> by_image(
      static_cast<std::size_t>(m.chain_size() + 1));
  for (point_type x : dom) by_image[static_cast<std::size_t>(m.value(x))].push_back(x);

  KernelPartition k;
  for (point_type v = 1; v <= m.chain_size(); ++v) {
    auto& block = by_image[static_cast<std::size_t>(v)];
    if (!block.empty()) {
      k.blocks.push_back(std::move(block));
      k.images.push_back(v);
    }
  }
  // Reorder by minimum element (grouping by image value orders by image).
  std::vector<std::size_t> order(k.blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return k.blocks[a].front() < k.blocks[b].front();
  });
  KernelPartition sorted;
  for (std::size_t i : order) {
    sorted.blocks.push_back(std::move(k.blocks[i]));
    sorted.images.push_back(k.images[i]);
  }
  return sorted;
}

}  // namespace chainsemi
