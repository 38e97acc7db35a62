#ifndef CHAINSEMI_TRANSVERSALS_HPP_
#define CHAINSEMI_TRANSVERSALS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "partial_map.hpp"

namespace chainsemi {

//! One representative per kernel block.
struct Transversal {
  KernelPartition kernel;
  std::vector<point_type> points;  // sorted ascending

  //! The representative chosen from blocks[i].
  point_type representative(std::size_t block_index) const;

  friend bool operator==(const Transversal&, const Transversal&) = default;
};

//! All product-of-blocks representative choices, sorted lexicographically
//! by their sorted point sequences.
std::vector<Transversal> all_transversals(const KernelPartition& k);

//! T is an integer interval.
bool is_convex(const Transversal& t);
//! T is an interval relative to the domain: every domain point between
//! two members of T lies in T.
bool is_relatively_convex(const Transversal& t);
//! The induced map block -> representative is a contraction:
//! |t_i - t_j| <= min cross-block distance for every block pair.
bool is_admissible(const Transversal& t);

enum class LemmaCheck {
  relatively_convex_nonexistence,  // ordered blocks, a big interior block
  admissible_existence,            // ordered blocks, singleton interior blocks
};

struct LemmaReport {
  bool confirmed = false;
  //! For a confirmed existence check: the found transversal. For a refuted
  //! nonexistence check: the offending transversal.
  std::optional<Transversal> witness;
  std::size_t transversals_checked = 0;
  std::string detail;
};

//! Exhaustively checks the requested conclusion on one kernel. Throws
//! hypothesis_not_met when the kernel does not satisfy the check's
//! precondition (p >= 3, blocks elementwise ordered, and an interior block
//! of size >= 2 resp. all interior blocks singletons).
LemmaReport lemma_witness(const KernelPartition& k, LemmaCheck which);

//! Checks that the image of the convex set {lo..hi} (which must lie inside
//! dom m) is an integer interval; the witness detail lists the image.
//! Throws hypothesis_not_met when {lo..hi} is not inside the domain.
LemmaReport convex_image_report(const PartialMap& m, point_type lo, point_type hi);

}  // namespace chainsemi

#endif  // CHAINSEMI_TRANSVERSALS_HPP_
