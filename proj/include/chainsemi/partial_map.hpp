#ifndef CHAINSEMI_PARTIAL_MAP_HPP_
#define CHAINSEMI_PARTIAL_MAP_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "error.hpp"

namespace chainsemi {

// Points of the chain [n] = {1, ..., n}.
using point_type = int;

// Canonical encoding of a partial map: the base-(n+1) number whose i-th
// digit is the image of point i, with 0 for undefined. This is the sort
// and persistence key everywhere.
using map_id = std::uint64_t;

// Largest chain size for which (n+1)^n fits in 64 bits.
inline constexpr int kMaxChainSize = 15;

//! A partial self-map of the chain [n]. Immutable value type; all
//! operations on it are pure functions.
class PartialMap {
 public:
  //! The fully undefined (empty) map on [n].
  explicit PartialMap(int n);

  int chain_size() const noexcept { return n_; }

  //! 0 when the point is undefined, otherwise the image in 1..n.
  point_type value(point_type pt) const;

  bool defined(point_type pt) const { return value(pt) != 0; }

  std::vector<point_type> domain() const;
  std::vector<point_type> image() const;   // sorted, duplicate-free
  std::vector<point_type> fixed_points() const;

  //! h(alpha) = |image|.
  int height() const;

  bool is_empty_map() const;
  bool is_identity() const;

  friend bool operator==(const PartialMap&, const PartialMap&) = default;

  //! Orders by chain size, then canonical id.
  friend std::strong_ordering operator<=>(const PartialMap& a,
                                          const PartialMap& b);

 private:
  int n_;
  std::vector<point_type> entries_;  // entries_[i] = image of point i+1, 0 = undefined

  friend PartialMap make(int, const std::vector<std::pair<point_type, point_type>>&);
  friend PartialMap compose(const PartialMap&, const PartialMap&);
  friend PartialMap decode(int, map_id);
  friend map_id canonical_id(const PartialMap&);
};

//! Builds the map on [n] with exactly the given (point, value) assignments.
//! Throws out_of_range / duplicate_point.
PartialMap make(int n, const std::vector<std::pair<point_type, point_type>>& pairs);
PartialMap identity(int n);
//! The identity restricted to the given points.
PartialMap identity_on(int n, const std::vector<point_type>& points);

//! Left-to-right composition: x(ab) = (xa)b. Throws size_mismatch.
PartialMap compose(const PartialMap& a, const PartialMap& b);

map_id canonical_id(const PartialMap& m);
//! Exact inverse of canonical_id. Throws id_out_of_range.
PartialMap decode(int n, map_id id);
//! (n+1)^n, the number of partial maps on [n].
map_id map_space_size(int n);

//! The elementary predicates, all quantified over the domain (vacuously
//! true on the empty map).
struct PropertySet {
  bool contraction = false;       // |xa - ya| <= |x - y|
  bool order_preserving = false;  // x <= y implies xa <= ya
  bool order_reversing = false;   // x <= y implies xa >= ya
  bool isometry = false;          // |xa - ya| = |x - y|
  bool order_decreasing = false;  // xa <= x
  bool idempotent = false;        // aa = a
  bool full = false;              // dom a = [n]

  friend bool operator==(const PropertySet&, const PropertySet&) = default;
};

PropertySet classify(const PartialMap& m);

//! True iff im(a) equals the fixed-point set of a; agrees with aa = a on
//! every partial map.
bool is_idempotent_via_fixpoints(const PartialMap& m);

//! The kernel classes of a map, ordered by minimum element, with the
//! image value of each block alongside.
struct KernelPartition {
  std::vector<std::vector<point_type>> blocks;  // each sorted ascending
  std::vector<point_type> images;               // images[i] = image of blocks[i]

  int height() const { return static_cast<int>(blocks.size()); }
  std::vector<point_type> domain() const;  // union of blocks, sorted

  //! max A_i < min A_{i+1} for all consecutive blocks.
  bool blocks_elementwise_ordered() const;

  friend bool operator==(const KernelPartition&, const KernelPartition&) = default;
};

//! Throws empty_domain on the empty map.
KernelPartition kernel(const PartialMap& m);

}  // namespace chainsemi

#endif  // CHAINSEMI_PARTIAL_MAP_HPP_
