#include "chainsemi/regularity.hpp"

#include <algorithm>

#include "chainsemi/parallel.hpp"

namespace chainsemi {

RegularityVerdict is_regular(const PartialMap& m, const ElementSet& ambient) {
  ambient.position_of(canonical_id(m));  // throws not_member when outside
  RegularityVerdict verdict{m, ambient.family, false, std::nullopt, false, std::nullopt};
  for (const PartialMap& b : ambient.elements) {
    if (compose(compose(m, b), m) == m) {
      verdict.regular = true;
      verdict.inverse_witness = b;
      break;
    }
  }
  return verdict;
}

std::vector<bool> regular_flags(const ElementSet& set, const CayleyTable& table) {
  std::vector<char> flags(set.size(), 0);
  parallel_chunks(set.size(), 0, [&](std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t b = 0; b < set.size(); ++b) {
        if (table.product(table.product(a, b), a) == a) {
          flags[a] = 1;
          break;
        }
      }
    }
  });
  return {flags.begin(), flags.end()};
}

namespace {

void check_orcp_height3(const PartialMap& m) {
  const PropertySet props = classify(m);
  if (!(props.contraction && (props.order_preserving || props.order_reversing))) {
    throw Error(errc::not_member,
                "element is not an order preserving or reversing contraction");
  }
  if (m.height() < 3) {
    throw Error(errc::height_too_small,
                "criterion needs height >= 3, got " + std::to_string(m.height()));
  }
}

template <typename InteriorImage>
bool interior_matches(const KernelPartition& k, InteriorImage image_of) {
  for (std::size_t i = 1; i + 1 < k.blocks.size(); ++i) {
    if (k.blocks[i].size() != 1 || k.blocks[i].front() != image_of(i)) return false;
  }
  return true;
}

// order preserving branch, shared by both readings:
// min A_p - x_p = max A_1 - x_1 = d and interior blocks A_i = {x_i + d}.
bool preserving_branch(const KernelPartition& k) {
  const int d = k.blocks.front().back() - k.images.front();
  return k.blocks.back().front() - k.images.back() == d &&
         interior_matches(k, [&](std::size_t i) { return k.images[i] + d; });
}

}  // namespace

bool regular_char_orcp(const PartialMap& m) {
  check_orcp_height3(m);
  const KernelPartition k = kernel(m);
  if (preserving_branch(k)) return true;
  // order reversing branch: the restriction to the inner boundary points and
  // singleton interiors is the reflection x -> c - x, anchored by
  // max A_1 + x_1 = min A_p + x_p = c with interior blocks A_i = {c - x_i}.
  const int c = k.blocks.front().back() + k.images.front();
  return k.blocks.back().front() + k.images.back() == c &&
         interior_matches(k, [&](std::size_t i) { return c - k.images[i]; });
}

bool regular_char_orcp_mirrored_shift(const PartialMap& m) {
  check_orcp_height3(m);
  const KernelPartition k = kernel(m);
  if (preserving_branch(k)) return true;
  // Alternate reading of the reversing branch: interior blocks at the
  // mirrored image values shifted by the boundary offset,
  // min A_p - x_1 = max A_1 - x_p = d and A_i = {x_{p-i+1} + d}. Coincides
  // with the reflection-anchored reading only when the image set is
  // symmetric; kept so the claim harness can report where they differ.
  const std::size_t p = k.blocks.size();
  const int d = k.blocks.back().front() - k.images.front();
  return k.blocks.front().back() - k.images.back() == d &&
         interior_matches(k, [&](std::size_t i) { return k.images[p - i - 1] + d; });
}

RegularityVerdict is_strongly_regular(const PartialMap& m, const ElementSet& ambient) {
  if (m.is_empty_map()) {
    throw Error(errc::empty_domain, "the empty map has no transversal");
  }
  RegularityVerdict verdict = is_regular(m, ambient);
  if (!verdict.regular) return verdict;
  for (const Transversal& t : all_transversals(kernel(m))) {
    if (is_convex(t)) {
      verdict.strongly_regular = true;
      verdict.convex_transversal = t;
      break;
    }
  }
  return verdict;
}

namespace {

bool has_convex_transversal(const PartialMap& m) {
  for (const Transversal& t : all_transversals(kernel(m))) {
    if (is_convex(t)) return true;
  }
  return false;
}

}  // namespace

ElementSet sreg(const ElementSet& orcp) {
  if (orcp.family != Family::ORCP) {
    throw Error(errc::family_unsupported,
                "strongly regular elements are defined inside orcp, got " +
                    family_name(orcp.family));
  }
  const CayleyTable table = build_cayley_table(orcp);
  const auto regular = regular_flags(orcp, table);
  std::vector<map_id> ids;
  for (std::size_t i = 0; i < orcp.size(); ++i) {
    const PartialMap& m = orcp.elements[i];
    if (m.is_empty_map() || !regular[i]) continue;
    if (has_convex_transversal(m)) ids.push_back(canonical_id(m));
  }
  return element_set_from_ids(Family::ORCP, orcp.n, ids);
}

IdempotentFormCheck idempotent_form_versions(const PartialMap& m) {
  IdempotentFormCheck check;
  const KernelPartition k = kernel(m);
  const std::size_t p = k.blocks.size();
  bool consecutive = true;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    if (k.images[i + 1] != k.images[i] + 1) consecutive = false;
  }
  bool interior_singletons = true;
  for (std::size_t i = 1; i + 1 < p; ++i) {
    if (k.blocks[i].size() != 1 || k.blocks[i].front() != k.images[i]) {
      interior_singletons = false;
    }
  }
  const bool shape = consecutive && interior_singletons &&
                     k.blocks.back().front() == k.images.back();
  check.statement_version = shape && k.blocks.front().back() == k.images.front();
  check.proof_version = shape && k.blocks.front().back() == k.images.front() - 1;
  return check;
}

bool verify_idempotent_form(const PartialMap& m, const ElementSet& orcp) {
  if (!is_idempotent_via_fixpoints(m)) {
    throw Error(errc::not_idempotent, "element is not idempotent");
  }
  if (!is_strongly_regular(m, orcp).strongly_regular) {
    throw Error(errc::not_strongly_regular, "element is not strongly regular");
  }
  if (m.height() < 2) {
    throw Error(errc::hypothesis_not_met, "normal form applies to height >= 2");
  }
  return idempotent_form_versions(m).statement_version;
}

SRegClosureReport verify_sreg_closure(const ElementSet& orcp, int threads) {
  if (orcp.family != Family::ORCP) {
    throw Error(errc::family_unsupported, "expects an orcp element set");
  }
  const CayleyTable table = build_cayley_table(orcp, threads);
  const auto regular = regular_flags(orcp, table);

  SRegClosureReport report;
  report.n = orcp.n;

  std::vector<char> in_sreg(orcp.size(), 0);
  std::vector<std::size_t> sreg_positions;
  for (std::size_t i = 0; i < orcp.size(); ++i) {
    const PartialMap& m = orcp.elements[i];
    if (!m.is_empty_map() && regular[i] && has_convex_transversal(m)) {
      in_sreg[i] = 1;
      sreg_positions.push_back(i);
    }
  }
  report.sreg_size = sreg_positions.size();

  std::vector<std::size_t> idem_positions;
  for (std::size_t i : sreg_positions) {
    if (is_idempotent_via_fixpoints(orcp.elements[i])) idem_positions.push_back(i);
  }
  report.idempotent_count = idem_positions.size();

  const auto id_of = [&](std::size_t pos) { return canonical_id(orcp.elements[pos]); };
  const auto disjoint_fixpoints = [&](std::size_t a, std::size_t b) {
    const auto fa = orcp.elements[a].fixed_points();
    const auto fb = orcp.elements[b].fixed_points();
    for (point_type x : fa) {
      if (std::binary_search(fb.begin(), fb.end(), x)) return false;
    }
    return true;
  };

  // (a) products of strongly regular idempotent pairs
  for (std::size_t e : idem_positions) {
    for (std::size_t f : idem_positions) {
      ++report.idem_pairs;
      const std::size_t prod = table.product(e, f);
      if (orcp.elements[prod].is_empty_map()) {
        ++report.idem_pair_empty_products;
        if (disjoint_fixpoints(e, f)) ++report.idem_pair_empty_with_disjoint_fixpoints;
      } else if (!in_sreg[prod]) {
        report.idem_pair_failures.emplace_back(id_of(e), id_of(f));
      }
    }
  }

  // (c) closure of SReg and regularity with witnesses inside SReg
  for (std::size_t x : sreg_positions) {
    for (std::size_t y : sreg_positions) {
      ++report.closure_pairs;
      const std::size_t prod = table.product(x, y);
      if (orcp.elements[prod].is_empty_map()) {
        ++report.closure_empty_products;
      } else if (!in_sreg[prod]) {
        report.closure_failures.emplace_back(id_of(x), id_of(y));
      }
    }
  }
  const auto regular_within = [&](std::size_t a, const std::vector<char>& mask) {
    for (std::size_t b = 0; b < orcp.size(); ++b) {
      if (mask[b] && table.product(table.product(a, b), a) == a) return true;
    }
    return false;
  };
  for (std::size_t a : sreg_positions) {
    if (!regular_within(a, in_sreg)) report.no_internal_witness.push_back(id_of(a));
  }

  // (b) the three conditions, each evaluated from scratch on the
  // zero-adjoined set T = SReg + empty map.
  std::vector<char> in_t = in_sreg;
  const std::size_t empty_pos = orcp.position_of(canonical_id(PartialMap(orcp.n)));
  in_t[empty_pos] = 1;

  std::vector<std::size_t> t_idempotents;
  for (std::size_t i = 0; i < orcp.size(); ++i) {
    if (in_t[i] && is_idempotent_via_fixpoints(orcp.elements[i])) {
      t_idempotents.push_back(i);
    }
  }
  // (i) every product of two idempotents of T is regular in T
  report.hall_idempotent_products_regular = true;
  for (std::size_t e : t_idempotents) {
    for (std::size_t f : t_idempotents) {
      if (!regular_within(table.product(e, f), in_t)) {
        if (report.hall_idempotent_products_regular) {
          report.hall_witness.push_back(id_of(e));
          report.hall_witness.push_back(id_of(f));
        }
        report.hall_idempotent_products_regular = false;
      }
    }
  }
  // (ii) the regular elements of T form a regular subsemigroup
  {
    std::vector<char> reg_mask(orcp.size(), 0);
    std::vector<std::size_t> reg_positions;
    for (std::size_t i = 0; i < orcp.size(); ++i) {
      if (in_t[i] && regular_within(i, in_t)) {
        reg_mask[i] = 1;
        reg_positions.push_back(i);
      }
    }
    bool ok = true;
    for (std::size_t a : reg_positions) {
      for (std::size_t b : reg_positions) {
        if (!reg_mask[table.product(a, b)]) {
          if (ok) report.hall_witness.push_back(id_of(table.product(a, b)));
          ok = false;
        }
      }
    }
    for (std::size_t a : reg_positions) {
      if (!regular_within(a, reg_mask)) {
        if (ok) report.hall_witness.push_back(id_of(a));
        ok = false;
      }
    }
    report.hall_regulars_form_subsemigroup = ok;
  }
  // (iii) the subsemigroup generated by the idempotents of T is regular
  {
    std::vector<char> gen_mask(orcp.size(), 0);
    std::vector<std::size_t> work = t_idempotents;
    for (std::size_t e : t_idempotents) gen_mask[e] = 1;
    while (!work.empty()) {
      const std::size_t a = work.back();
      work.pop_back();
      for (std::size_t b = 0; b < orcp.size(); ++b) {
        if (!gen_mask[b]) continue;
        for (std::size_t prod : {table.product(a, b), table.product(b, a)}) {
          if (!gen_mask[prod]) {
            gen_mask[prod] = 1;
            work.push_back(prod);
          }
        }
      }
    }
    bool ok = true;
    for (std::size_t a = 0; a < orcp.size(); ++a) {
      if (gen_mask[a] && !regular_within(a, gen_mask)) {
        if (ok) report.hall_witness.push_back(id_of(a));
        ok = false;
      }
    }
    report.hall_idempotent_closure_regular = ok;
  }
  return report;
}

std::optional<std::pair<PartialMap, PartialMap>> product_of_regulars_counterexample(
    const ElementSet& set, int threads) {
  const CayleyTable table = build_cayley_table(set, threads);
  const auto regular = regular_flags(set, table);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!regular[i]) continue;
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (regular[j] && !regular[table.product(i, j)]) {
        return std::make_pair(set.elements[i], set.elements[j]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace chainsemi
