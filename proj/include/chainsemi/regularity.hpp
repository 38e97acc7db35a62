#ifndef CHAINSEMI_REGULARITY_HPP_
#define CHAINSEMI_REGULARITY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "green_star.hpp"
#include "transversals.hpp"

namespace chainsemi {

//! Result of the regularity / strong-regularity checks for one element.
//! The verdict is relative to the ambient element set the witness search
//! ran over.
struct RegularityVerdict {
  PartialMap element;
  Family ambient;
  bool regular = false;
  std::optional<PartialMap> inverse_witness;  // least-id b with aba = a
  bool strongly_regular = false;
  std::optional<Transversal> convex_transversal;  // least when present
};

//! Searches the ambient set in canonical order for b with aba = a.
//! Throws not_member when the element is outside the set.
RegularityVerdict is_regular(const PartialMap& m, const ElementSet& ambient);

//! One regular flag per element of the set, by exhaustive witness search
//! inside the set.
std::vector<bool> regular_flags(const ElementSet& set, const CayleyTable& table);

//! The height >= 3 regularity criterion for order preserving or reversing
//! contractions: the element restricted to the inner boundary points and
//! the singleton interiors is an isometry — a translation x -> x + d
//! (order preserving branch) or a reflection x -> c - x (order reversing
//! branch), anchored at max A_1 and min A_p.
//! Throws not_member for maps outside ORCP_n and height_too_small below
//! height 3.
bool regular_char_orcp(const PartialMap& m);

//! Alternate reading of the order-reversing branch (interior blocks at the
//! mirrored image values shifted by the boundary offset). Disagrees with
//! regular_char_orcp exactly on reversing elements with asymmetric images;
//! the L1.5 claim measures the disagreement.
bool regular_char_orcp_mirrored_shift(const PartialMap& m);

//! Regular and the kernel admits a convex transversal. Throws not_member /
//! empty_domain.
RegularityVerdict is_strongly_regular(const PartialMap& m, const ElementSet& ambient);

//! The strongly regular elements of an ORCP element set, sorted. The empty
//! map is excluded (it has no kernel partition, hence no transversal).
//! Throws family_unsupported unless the set's family is ORCP.
ElementSet sreg(const ElementSet& orcp);

//! Both readings of the idempotent normal form for strongly regular
//! idempotents of height >= 2: images consecutive, interior blocks
//! singletons, and the boundary blocks anchored either at their image
//! (statement version) or one below it (proof version).
struct IdempotentFormCheck {
  bool statement_version = false;  // max A_1 = x_1 and min A_p = x_p
  bool proof_version = false;      // max A_1 = x_1 - 1 and min A_p = x_p
};

IdempotentFormCheck idempotent_form_versions(const PartialMap& m);

//! The statement version of the normal form. Throws not_idempotent,
//! not_strongly_regular, and hypothesis_not_met for height < 2.
bool verify_idempotent_form(const PartialMap& m, const ElementSet& orcp);

//! Structured results of the strong-regularity closure checks. Products
//! that collapse to the empty map are tallied separately (the empty map is
//! outside SReg by construction); the pass conditions are zero-adjoined.
struct SRegClosureReport {
  int n = 0;
  std::size_t sreg_size = 0;
  std::size_t idempotent_count = 0;

  // (a) products of idempotent pairs
  std::size_t idem_pairs = 0;
  std::size_t idem_pair_empty_products = 0;
  std::size_t idem_pair_empty_with_disjoint_fixpoints = 0;
  std::vector<std::pair<map_id, map_id>> idem_pair_failures;  // nonempty, not SReg

  // (b) the three equivalent regularity conditions, evaluated independently
  bool hall_idempotent_products_regular = false;
  bool hall_regulars_form_subsemigroup = false;
  bool hall_idempotent_closure_regular = false;
  std::vector<map_id> hall_witness;  // first violators of failing conditions

  // (c) closure and internal regularity of SReg
  std::size_t closure_pairs = 0;
  std::size_t closure_empty_products = 0;
  std::vector<std::pair<map_id, map_id>> closure_failures;  // nonempty, escapes SReg
  std::vector<map_id> no_internal_witness;  // elements not regular within SReg

  bool idempotent_products_ok() const { return idem_pair_failures.empty(); }
  bool hall_conditions_agree() const {
    return hall_idempotent_products_regular == hall_regulars_form_subsemigroup &&
           hall_regulars_form_subsemigroup == hall_idempotent_closure_regular;
  }
  bool closure_ok() const {
    return closure_failures.empty() && no_internal_witness.empty();
  }
};

SRegClosureReport verify_sreg_closure(const ElementSet& orcp, int threads = 0);

//! A pair of regular elements whose product is not regular, scanning pairs
//! in canonical order; absent when no such pair exists.
std::optional<std::pair<PartialMap, PartialMap>> product_of_regulars_counterexample(
    const ElementSet& set, int threads = 0);

}  // namespace chainsemi

#endif  // CHAINSEMI_REGULARITY_HPP_
