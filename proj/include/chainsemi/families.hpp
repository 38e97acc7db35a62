#ifndef CHAINSEMI_FAMILIES_HPP_
#define CHAINSEMI_FAMILIES_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "partial_map.hpp"

namespace chainsemi {

//! The semigroup families: all partial maps, partial contractions, their
//! order preserving / order preserving-or-reversing restrictions, and the
//! full-domain (total) contraction variants.
enum class Family : std::uint8_t { P = 0, CP = 1, OCP = 2, ORCP = 3, CT = 4, OCT = 5 };

inline constexpr Family kAllFamilies[] = {Family::P,    Family::CP, Family::OCP,
                                          Family::ORCP, Family::CT, Family::OCT};

std::string family_name(Family f);             // lower-case: "cp", "orcp", ...
std::optional<Family> family_from_name(const std::string& name);

//! The direct parent in the containment order (OCP in ORCP in CP in P;
//! OCT in CT in CP). P has none.
std::optional<Family> family_parent(Family f);

//! True iff the map satisfies the family's defining predicate.
bool member(Family f, const PartialMap& m);

//! An enumerated family: elements sorted ascending by canonical id with a
//! membership index. Closure under composition is verified by
//! verify_closure, never assumed.
struct ElementSet {
  Family family;
  int n;
  std::vector<PartialMap> elements;
  std::unordered_map<map_id, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  bool contains(map_id id) const { return index.count(id) != 0; }
  //! Throws not_member when the id is not in the set.
  std::size_t position_of(map_id id) const;
  std::vector<map_id> ids() const;
};

ElementSet element_set_from_ids(Family f, int n, const std::vector<map_id>& ids);

struct EnumerationOptions {
  int max_n = 6;  // budget cap on the (n+1)^n filter
  int threads = 0;
  std::optional<std::filesystem::path> cache_dir;
};

//! Filters all (n+1)^n candidate maps by the family predicate. Cached to
//! disk keyed by (family, n) when a cache directory is configured.
//! Throws budget_exceeded when n exceeds the configured cap.
ElementSet enumerate_family(Family f, int n, const EnumerationOptions& opts = {});

struct ClosureResult {
  bool closed = false;
  //! Canonical ids of the first violating pair in lexicographic order.
  std::optional<std::pair<map_id, map_id>> violation;
};

//! Checks compose(a, b) stays in the family for every ordered pair.
ClosureResult verify_closure(const ElementSet& set, int threads = 0);

// --- element cache (binary format shared with the CLI) ---
// Layout: 8-byte magic "CSEMI001", family tag byte, n byte, count as
// little-endian uint64, then the canonical ids as little-endian uint64.

std::filesystem::path cache_file_path(const std::filesystem::path& dir, Family f, int n);
void write_element_cache(const std::filesystem::path& file, Family f, int n,
                         const std::vector<map_id>& ids);
//! Throws io_error on a missing, malformed, or mislabelled file.
std::vector<map_id> read_element_cache(const std::filesystem::path& file, Family f, int n);

}  // namespace chainsemi

#endif  // CHAINSEMI_FAMILIES_HPP_
