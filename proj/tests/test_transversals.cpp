#include "chainsemi/transversals.hpp"

#include <doctest.h>

#include "chainsemi/families.hpp"

using namespace chainsemi;

namespace {

KernelPartition boundary_kernel_4() {
  // blocks {1},{2,3},{4} with images 1,2,3
  return kernel(make(4, {{1, 1}, {2, 2}, {3, 2}, {4, 3}}));
}

Transversal transversal_of(const KernelPartition& k, std::vector<point_type> points) {
  std::sort(points.begin(), points.end());
  return Transversal{k, std::move(points)};
}

}  // namespace

TEST_SUITE("transversals") {

TEST_CASE("all_transversals lists the product of block choices") {
  const auto ts = all_transversals(boundary_kernel_4());
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].points == std::vector<point_type>{1, 2, 4});
  CHECK(ts[1].points == std::vector<point_type>{1, 3, 4});

  const KernelPartition single = kernel(make(2, {{1, 1}, {2, 1}}));
  const auto singles = all_transversals(single);
  REQUIRE(singles.size() == 2);
  CHECK(singles[0].points == std::vector<point_type>{1});
  CHECK(singles[1].points == std::vector<point_type>{2});

  // block sizes 2, 1, 3 -> 6 transversals
  const KernelPartition k = kernel(make(6, {{1, 1}, {2, 1}, {3, 2}, {4, 3}, {5, 3}, {6, 3}}));
  CHECK(all_transversals(k).size() == 6);
}

TEST_CASE("convexity is the integer interval test") {
  const KernelPartition k = kernel(make(3, {{1, 1}, {2, 2}, {3, 2}}));
  CHECK(is_convex(transversal_of(k, {1, 2})));
  CHECK_FALSE(is_convex(transversal_of(k, {1, 3})));
  const KernelPartition single = kernel(make(5, {{5, 5}}));
  CHECK(is_convex(transversal_of(single, {5})));
}

TEST_CASE("relative convexity quantifies over domain points") {
  const KernelPartition k = boundary_kernel_4();
  CHECK_FALSE(is_relatively_convex(transversal_of(k, {1, 2, 4})));  // misses 3
  CHECK_FALSE(is_relatively_convex(transversal_of(k, {1, 3, 4})));  // misses 2

  // domain {1,3}: nothing lies strictly between, so {1,3} qualifies
  const KernelPartition sparse = kernel(make(3, {{1, 1}, {3, 3}}));
  CHECK(is_relatively_convex(transversal_of(sparse, {1, 3})));
  CHECK_FALSE(is_convex(transversal_of(sparse, {1, 3})));
}

TEST_CASE("admissibility is the cross-block contraction condition") {
  const KernelPartition k = boundary_kernel_4();
  CHECK_FALSE(is_admissible(transversal_of(k, {1, 2, 4})));  // |2-4| > dist 1
  CHECK_FALSE(is_admissible(transversal_of(k, {1, 3, 4})));  // |1-3| > dist 1

  const KernelPartition sparse = kernel(make(3, {{1, 1}, {3, 3}}));
  CHECK(is_admissible(transversal_of(sparse, {1, 3})));  // |1-3| = dist
}

TEST_CASE("convex implies relatively convex implies admissible") {
  for (const PartialMap& m : enumerate_family(Family::CP, 4).elements) {
    if (m.is_empty_map()) continue;
    for (const Transversal& t : all_transversals(kernel(m))) {
      if (is_convex(t)) {
        CHECK(is_relatively_convex(t));
        CHECK(is_admissible(t));
      }
    }
  }
}

TEST_CASE("the reverse implications fail somewhere") {
  bool rel_convex_not_convex = false;
  bool admissible_not_convex = false;
  for (const PartialMap& m : enumerate_family(Family::CP, 4).elements) {
    if (m.is_empty_map()) continue;
    for (const Transversal& t : all_transversals(kernel(m))) {
      if (is_relatively_convex(t) && !is_convex(t)) rel_convex_not_convex = true;
      if (is_admissible(t) && !is_convex(t)) admissible_not_convex = true;
    }
  }
  CHECK(rel_convex_not_convex);
  CHECK(admissible_not_convex);
}

TEST_CASE("no relatively convex transversal under the big-interior hypothesis") {
  const LemmaReport report =
      lemma_witness(boundary_kernel_4(), LemmaCheck::relatively_convex_nonexistence);
  CHECK(report.confirmed);
  CHECK(report.transversals_checked == 2);
}

TEST_CASE("hypothesis gating") {
  // only two blocks
  const KernelPartition two = kernel(make(3, {{1, 1}, {2, 2}, {3, 2}}));
  CHECK_THROWS_WITH_AS(lemma_witness(two, LemmaCheck::relatively_convex_nonexistence),
                       doctest::Contains("HypothesisNotMet"), Error);
  // all interior blocks singletons: wrong hypothesis for nonexistence
  const KernelPartition id4 = kernel(identity(4));
  CHECK_THROWS_WITH_AS(lemma_witness(id4, LemmaCheck::relatively_convex_nonexistence),
                       doctest::Contains("HypothesisNotMet"), Error);
  // big interior block: wrong hypothesis for admissible existence
  CHECK_THROWS_WITH_AS(lemma_witness(boundary_kernel_4(), LemmaCheck::admissible_existence),
                       doctest::Contains("HypothesisNotMet"), Error);
  // interleaved blocks are not elementwise ordered
  const KernelPartition tangled = kernel(make(4, {{1, 1}, {3, 1}, {2, 2}, {4, 3}}));
  CHECK_THROWS_WITH_AS(lemma_witness(tangled, LemmaCheck::relatively_convex_nonexistence),
                       doctest::Contains("HypothesisNotMet"), Error);
}

TEST_CASE("admissible transversal exists when interior blocks are singletons") {
  const KernelPartition k = kernel(make(4, {{1, 1}, {2, 2}, {3, 3}, {4, 3}}));
  const LemmaReport report = lemma_witness(k, LemmaCheck::admissible_existence);
  CHECK(report.confirmed);
  REQUIRE(report.witness.has_value());
  CHECK(is_admissible(*report.witness));

  for (const PartialMap& m : enumerate_family(Family::CP, 4).elements) {
    if (m.is_empty_map()) continue;
    const KernelPartition km = kernel(m);
    if (km.height() < 3 || !km.blocks_elementwise_ordered()) continue;
    bool singleton_interior = true;
    for (std::size_t i = 1; i + 1 < km.blocks.size(); ++i) {
      singleton_interior &= km.blocks[i].size() == 1;
    }
    if (!singleton_interior) continue;
    CHECK(lemma_witness(km, LemmaCheck::admissible_existence).confirmed);
  }
}

TEST_CASE("images of convex domain subsets are intervals") {
  const PartialMap m = make(4, {{1, 1}, {2, 2}, {3, 2}, {4, 3}});
  const LemmaReport r = convex_image_report(m, 2, 3);
  CHECK(r.confirmed);
  CHECK(r.detail == "image of {2..3} is {2}");
  CHECK(convex_image_report(m, 1, 4).confirmed);

  CHECK_THROWS_WITH_AS(convex_image_report(make(3, {{1, 1}, {3, 3}}), 1, 3),
                       doctest::Contains("HypothesisNotMet"), Error);

  // a non-contraction violating the conclusion, to show the check can refuse
  CHECK_FALSE(convex_image_report(make(3, {{1, 1}, {2, 3}}), 1, 2).confirmed);
}

}  // TEST_SUITE
