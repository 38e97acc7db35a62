#ifndef CHAINSEMI_GREEN_STAR_HPP_
#define CHAINSEMI_GREEN_STAR_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "families.hpp"

namespace chainsemi {

enum class Relation { L, R, H, D, Lstar, Rstar, Hstar, Dstar, Jstar };
enum class Method { oracle, characterization };
enum class Side { left, right };

std::string relation_name(Relation r);
std::optional<Relation> relation_from_name(const std::string& name);

//! A partition of an element set. Classes hold positions into the base
//! set; each class is sorted ascending and the classes are sorted by their
//! least member, so two partitions are equal iff the vectors are equal.
struct RelationClasses {
  Family family;
  int n;
  Relation relation;
  Method method;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;  // position -> class index

  std::size_t size() const { return classes.size(); }
  bool same_partition(const RelationClasses& other) const {
    return classes == other.classes;
  }
};

RelationClasses classes_from_keys(const ElementSet& set, Relation rel, Method method,
                                  const std::vector<std::string>& keys);

//! Composition table of a closed element set: entry (i, j) is the position
//! of elements[i] * elements[j]. Building it doubles as a closure check
//! (a product outside the set throws not_member).
struct CayleyTable {
  std::size_t count = 0;
  std::vector<std::uint32_t> products;  // row-major

  std::size_t product(std::size_t i, std::size_t j) const {
    return products[i * count + j];
  }
};

CayleyTable build_cayley_table(const ElementSet& set, int threads = 0);

//! The partition of S induced by one-sided multiplication by a fixed
//! element: for the right version x ~ y iff ax = ay. Stored as a
//! least-index coloring so equality of partitions is vector equality.
struct TranslationFingerprint {
  std::vector<std::uint32_t> coloring;

  friend bool operator==(const TranslationFingerprint&,
                         const TranslationFingerprint&) = default;
  friend auto operator<=>(const TranslationFingerprint& a,
                          const TranslationFingerprint& b) {
    return a.coloring <=> b.coloring;
  }
};

TranslationFingerprint right_translation_fingerprint(const CayleyTable& table,
                                                     std::size_t element);
TranslationFingerprint left_translation_fingerprint(const CayleyTable& table,
                                                    std::size_t element);

//! Green's relations of the oversemigroup of all partial maps, traced on
//! the given set: L groups by equal image, R by equal kernel, H by both,
//! and D is the join of L and R computed by equivalence closure.
RelationClasses classic_classes(const ElementSet& set, Relation rel);

struct StarOptions {
  int max_oracle_n = 4;
  int max_jstar_n = 3;
  int threads = 0;
};

//! Starred relations by the cancellation-condition oracle: L*/R* group
//! equal translation fingerprints, H* is the intersection, D* the
//! equivalence closure of the union. Requires the identity to be a member
//! (so the monoid completion adds nothing). Throws budget_exceeded when n
//! exceeds the oracle cap.
RelationClasses star_classes_oracle(const ElementSet& set, Relation rel,
                                    const StarOptions& opts = {});

//! Starred relations by the structural characterizations: equal image /
//! equal kernel / both / equal height. Throws family_unsupported outside
//! CP, OCP, ORCP.
RelationClasses star_classes_char(const ElementSet& set, Relation rel);

//! The principal *-ideal of the element at `position`: the least subset
//! containing it that is saturated by the D*-classes of all two-sided
//! products. Returns element positions, sorted.
std::vector<std::size_t> principal_star_ideal(const ElementSet& set,
                                              const CayleyTable& table,
                                              const RelationClasses& dstar,
                                              std::size_t position);

//! Independent route for the same ideal: fixpoint closure under two-sided
//! products plus L*- and R*-class saturation (no D* involved).
std::vector<std::size_t> principal_star_ideal_by_saturation(
    const ElementSet& set, const CayleyTable& table, const RelationClasses& lstar,
    const RelationClasses& rstar, std::size_t position);

//! J* classes: elements grouped by equality of principal *-ideals.
//! Throws budget_exceeded when n exceeds the J* cap.
RelationClasses jstar_classes(const ElementSet& set, const StarOptions& opts = {});

struct AbundanceVerdict {
  Side side;
  bool abundant = false;
  //! The first idempotent-free class in class order (absent when abundant).
  std::optional<std::vector<map_id>> witness_class;
  //! For each class, whether it contains an idempotent.
  std::vector<bool> class_has_idempotent;
};

//! Left: every L*-class contains an idempotent; right: every R*-class.
AbundanceVerdict abundance(const ElementSet& set, Side side,
                           Method method = Method::characterization,
                           const StarOptions& opts = {});

//! Positions of the idempotents of each class, empty when none.
std::vector<bool> classes_with_idempotent(const ElementSet& set,
                                          const RelationClasses& classes);

}  // namespace chainsemi

#endif  // CHAINSEMI_GREEN_STAR_HPP_
