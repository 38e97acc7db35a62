#include "chainsemi/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace chainsemi {

std::string status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped_budget: return "skipped_budget";
    case ClaimStatus::hypothesis_not_met: return "hypothesis_not_met";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimResult& c) {
    return c.status == ClaimStatus::fail;
  });
}

std::size_t VerificationReport::count(ClaimStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(),
                    [s](const ClaimResult& c) { return c.status == s; }));
}

// --- workspace ---

Workspace::Workspace(Config config) : config_(std::move(config)) {
  config_.validate();
}

const ElementSet& Workspace::elements(Family f, int n) {
  const auto key = std::make_pair(static_cast<int>(f), n);
  auto it = elements_.find(key);
  if (it == elements_.end()) {
    EnumerationOptions opts{config_.max_enum_n, config_.threads, config_.cache_dir};
    it = elements_.emplace(key, std::make_unique<ElementSet>(enumerate_family(f, n, opts)))
             .first;
  }
  return *it->second;
}

const CayleyTable& Workspace::table(Family f, int n) {
  const auto key = std::make_pair(static_cast<int>(f), n);
  auto it = tables_.find(key);
  if (it == tables_.end()) {
    it = tables_
             .emplace(key, std::make_unique<CayleyTable>(
                               build_cayley_table(elements(f, n), config_.threads)))
             .first;
  }
  return *it->second;
}

const std::vector<bool>& Workspace::regulars(Family f, int n) {
  const auto key = std::make_pair(static_cast<int>(f), n);
  auto it = regulars_.find(key);
  if (it == regulars_.end()) {
    it = regulars_
             .emplace(key, std::make_unique<std::vector<bool>>(
                               regular_flags(elements(f, n), table(f, n))))
             .first;
  }
  return *it->second;
}

const RelationClasses& Workspace::star(Family f, int n, Relation rel, Method method) {
  const auto key = std::make_tuple(static_cast<int>(f), n, static_cast<int>(rel),
                                   static_cast<int>(method));
  auto it = classes_.find(key);
  if (it == classes_.end()) {
    StarOptions opts{config_.max_oracle_n, config_.max_jstar_n, config_.threads};
    RelationClasses cls = method == Method::oracle
                              ? star_classes_oracle(elements(f, n), rel, opts)
                              : star_classes_char(elements(f, n), rel);
    it = classes_.emplace(key, std::make_unique<RelationClasses>(std::move(cls))).first;
  }
  return *it->second;
}

const RelationClasses& Workspace::jstar(Family f, int n) {
  const auto key = std::make_pair(static_cast<int>(f), n);
  auto it = jstar_.find(key);
  if (it == jstar_.end()) {
    StarOptions opts{config_.max_oracle_n, config_.max_jstar_n, config_.threads};
    it = jstar_
             .emplace(key, std::make_unique<RelationClasses>(
                               jstar_classes(elements(f, n), opts)))
             .first;
  }
  return *it->second;
}

const ElementSet& Workspace::sreg_set(int n) {
  auto it = sreg_.find(n);
  if (it == sreg_.end()) {
    it = sreg_.emplace(n, std::make_unique<ElementSet>(sreg(elements(Family::ORCP, n))))
             .first;
  }
  return *it->second;
}

const SRegClosureReport& Workspace::sreg_report(int n) {
  auto it = sreg_reports_.find(n);
  if (it == sreg_reports_.end()) {
    it = sreg_reports_
             .emplace(n, std::make_unique<SRegClosureReport>(verify_sreg_closure(
                             elements(Family::ORCP, n), config_.threads)))
             .first;
  }
  return *it->second;
}

// --- claim handlers ---

namespace {

using Handler = std::function<void(Workspace&, const ClaimRequest&, ClaimResult&)>;

struct ClaimSpec {
  std::string statement;
  Handler run;
};

bool theorem_family(Family f) {
  return f == Family::CP || f == Family::OCP || f == Family::ORCP;
}

void require(bool condition, const std::string& why) {
  if (!condition) throw Error(errc::hypothesis_not_met, why);
}

std::vector<PartialMap> right_abundance_boundary_maps() {
  // The four maps with kernel {1},{2,3},{4} on the 4-chain whose common
  // R*-class has no idempotent.
  return {make(4, {{1, 1}, {2, 2}, {3, 2}, {4, 3}}),
          make(4, {{1, 3}, {2, 2}, {3, 2}, {4, 1}}),
          make(4, {{1, 2}, {2, 3}, {3, 3}, {4, 4}}),
          make(4, {{1, 4}, {2, 3}, {3, 3}, {4, 2}})};
}

void partition_mismatch_witness(const RelationClasses& a, const RelationClasses& b,
                                const ElementSet& set, ClaimResult& out) {
  const std::size_t limit = std::min(a.classes.size(), b.classes.size());
  for (std::size_t c = 0; c < limit; ++c) {
    if (a.classes[c] != b.classes[c]) {
      for (std::size_t pos : a.classes[c]) {
        out.witness.push_back(canonical_id(set.elements[pos]));
      }
      out.detail = "first differing class index " + std::to_string(c);
      return;
    }
  }
  out.detail = "class counts " + std::to_string(a.classes.size()) + " vs " +
               std::to_string(b.classes.size());
}

Handler star_agreement(Relation rel) {
  return [rel](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(theorem_family(out.family), "characterizations cover cp, ocp, orcp");
    const auto& oracle = ws.star(out.family, out.n, rel, Method::oracle);
    const auto& characterization = ws.star(out.family, out.n, rel, Method::characterization);
    out.method = "both";
    if (oracle.same_partition(characterization)) {
      out.status = ClaimStatus::pass;
      out.detail = std::to_string(oracle.classes.size()) + " classes";
    } else {
      out.status = ClaimStatus::fail;
      partition_mismatch_witness(oracle, characterization,
                                 ws.elements(out.family, out.n), out);
    }
  };
}

Method pick_abundance_method(const Workspace& ws, const ClaimRequest& request, int n) {
  if (request.method == Method::oracle && n <= ws.config().max_oracle_n) {
    return Method::oracle;
  }
  return Method::characterization;
}

//! Runs the abundance check with the preferred engine; when a cross-check
//! is requested and affordable, the other engine must agree or the result
//! is nullopt with the failure already recorded.
std::optional<AbundanceVerdict> run_abundance(Workspace& ws,
                                              const ClaimRequest& request,
                                              ClaimResult& out, Side side) {
  require(theorem_family(out.family), "characterizations cover cp, ocp, orcp");
  const Method method = pick_abundance_method(ws, request, out.n);
  StarOptions opts{ws.config().max_oracle_n, ws.config().max_jstar_n,
                   ws.config().threads};
  const auto& set = ws.elements(out.family, out.n);
  AbundanceVerdict verdict = abundance(set, side, method, opts);
  out.method = method == Method::oracle ? "oracle" : "characterization";
  if (request.compare_methods && out.n <= ws.config().max_oracle_n) {
    const Method other =
        method == Method::oracle ? Method::characterization : Method::oracle;
    AbundanceVerdict cross = abundance(set, side, other, opts);
    out.method = "both";
    if (cross.abundant != verdict.abundant ||
        cross.witness_class != verdict.witness_class) {
      out.status = ClaimStatus::fail;
      out.detail = "oracle and characterization verdicts differ";
      return std::nullopt;
    }
  }
  return verdict;
}

Handler left_abundance_handler() {
  return [](Workspace& ws, const ClaimRequest& request, ClaimResult& out) {
    const auto verdict = run_abundance(ws, request, out, Side::left);
    if (!verdict) return;
    out.status = verdict->abundant ? ClaimStatus::pass : ClaimStatus::fail;
    out.detail = std::to_string(verdict->class_has_idempotent.size()) + " lstar classes";
    if (!verdict->abundant && verdict->witness_class) {
      out.witness = *verdict->witness_class;
    }
  };
}

Handler right_abundance_fails_handler() {
  return [](Workspace& ws, const ClaimRequest& request, ClaimResult& out) {
    require(out.n >= 4, "right abundance only fails from n = 4");
    const auto maybe_verdict = run_abundance(ws, request, out, Side::right);
    if (!maybe_verdict) return;
    const AbundanceVerdict& verdict = *maybe_verdict;
    if (verdict.abundant) {
      out.status = ClaimStatus::fail;
      out.detail = "right abundant, expected an idempotent-free rstar class";
      return;
    }
    out.witness = *verdict.witness_class;
    if (out.n == 4) {
      std::vector<map_id> expected;
      for (const PartialMap& m : right_abundance_boundary_maps()) {
        if (member(out.family, m)) expected.push_back(canonical_id(m));
      }
      std::sort(expected.begin(), expected.end());
      if (out.witness != expected) {
        out.status = ClaimStatus::fail;
        out.detail = "witness class differs from the boundary kernel class";
        return;
      }
      out.detail = "witness class matches the boundary kernel class";
    } else {
      out.detail = "idempotent-free rstar class found";
    }
    out.status = ClaimStatus::pass;
  };
}

Handler right_abundance_holds_handler() {
  return [](Workspace& ws, const ClaimRequest& request, ClaimResult& out) {
    require(out.n <= 3, "right abundance holds only up to n = 3");
    const auto verdict = run_abundance(ws, request, out, Side::right);
    if (!verdict) return;
    out.status = verdict->abundant ? ClaimStatus::pass : ClaimStatus::fail;
    out.detail = std::to_string(verdict->class_has_idempotent.size()) + " rstar classes";
    if (!verdict->abundant && verdict->witness_class) {
      out.witness = *verdict->witness_class;
    }
  };
}

Handler ideal_routes_agree_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(theorem_family(out.family), "covers cp, ocp, orcp");
    const auto& set = ws.elements(out.family, out.n);
    if (out.n > ws.config().max_jstar_n) {
      throw Error(errc::budget_exceeded, "jstar budget");
    }
    const auto& dstar = ws.star(out.family, out.n, Relation::Dstar, Method::oracle);
    const auto& lstar = ws.star(out.family, out.n, Relation::Lstar, Method::oracle);
    const auto& rstar = ws.star(out.family, out.n, Relation::Rstar, Method::oracle);
    const auto& table = ws.table(out.family, out.n);

    // Exhaustive for n <= 3; one representative per D*-class beyond that.
    std::vector<std::size_t> positions;
    if (out.n <= 3) {
      positions.resize(set.size());
      for (std::size_t i = 0; i < set.size(); ++i) positions[i] = i;
    } else {
      for (const auto& cls : dstar.classes) positions.push_back(cls.front());
    }
    for (std::size_t pos : positions) {
      const auto by_dstar = principal_star_ideal(set, table, dstar, pos);
      const auto by_saturation =
          principal_star_ideal_by_saturation(set, table, lstar, rstar, pos);
      if (by_dstar != by_saturation) {
        out.status = ClaimStatus::fail;
        out.witness = {canonical_id(set.elements[pos])};
        out.detail = "ideal routes disagree";
        return;
      }
    }
    out.status = ClaimStatus::pass;
    out.method = "oracle";
    out.detail = "checked " + std::to_string(positions.size()) +
                 (out.n <= 3 ? " elements (exhaustive)" : " class representatives");
  };
}

Handler ideal_height_monotone_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(theorem_family(out.family), "covers cp, ocp, orcp");
    const auto& set = ws.elements(out.family, out.n);
    if (out.n > ws.config().max_jstar_n) {
      throw Error(errc::budget_exceeded, "jstar budget");
    }
    const auto& dstar = ws.star(out.family, out.n, Relation::Dstar, Method::oracle);
    const auto& table = ws.table(out.family, out.n);
    out.method = "oracle";
    for (const auto& cls : dstar.classes) {
      const std::size_t rep = cls.front();
      const int h = set.elements[rep].height();
      for (std::size_t pos : principal_star_ideal(set, table, dstar, rep)) {
        if (set.elements[pos].height() > h) {
          out.status = ClaimStatus::fail;
          out.witness = {canonical_id(set.elements[rep]),
                         canonical_id(set.elements[pos])};
          out.detail = "ideal member exceeds the generator's height";
          return;
        }
      }
    }
    out.status = ClaimStatus::pass;
    out.detail = std::to_string(dstar.classes.size()) + " principal ideals checked";
  };
}

Handler dstar_equals_jstar_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(theorem_family(out.family), "covers cp, ocp, orcp");
    const auto& dstar = ws.star(out.family, out.n, Relation::Dstar, Method::oracle);
    const auto& jstar = ws.jstar(out.family, out.n);
    out.method = "oracle";
    if (jstar.same_partition(dstar)) {
      out.status = ClaimStatus::pass;
      out.detail = std::to_string(jstar.classes.size()) + " classes";
    } else {
      out.status = ClaimStatus::fail;
      partition_mismatch_witness(dstar, jstar, ws.elements(out.family, out.n), out);
    }
  };
}

Handler closure_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    const auto& set = ws.elements(out.family, out.n);
    const ClosureResult result = verify_closure(set, ws.config().threads);
    out.status = result.closed ? ClaimStatus::pass : ClaimStatus::fail;
    out.detail = std::to_string(set.size()) + " elements";
    if (result.violation) {
      out.witness = {result.violation->first, result.violation->second};
    }
  };
}

Handler containment_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    const auto parent = family_parent(out.family);
    require(parent.has_value(), "the family of all partial maps has no parent");
    const auto& set = ws.elements(out.family, out.n);
    for (const PartialMap& m : set.elements) {
      if (!member(*parent, m)) {
        out.status = ClaimStatus::fail;
        out.witness = {canonical_id(m)};
        out.detail = "element escapes " + family_name(*parent);
        return;
      }
    }
    out.status = ClaimStatus::pass;
    out.detail = family_name(out.family) + " inside " + family_name(*parent) + ", " +
                 std::to_string(set.size()) + " elements";
  };
}

// Lemma-style transversal sweeps share this scaffold: filter the kernels
// that satisfy a hypothesis, run a check on each, and report
// hypothesis_not_met when nothing qualifies.
Handler kernel_sweep_handler(
    std::function<bool(const PartialMap&, const KernelPartition&)> hypothesis,
    LemmaCheck check) {
  return [hypothesis, check](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(out.family != Family::P, "covers contraction families only");
    const auto& set = ws.elements(out.family, out.n);
    std::size_t applicable = 0;
    for (const PartialMap& m : set.elements) {
      if (m.is_empty_map()) continue;
      const KernelPartition k = kernel(m);
      if (!hypothesis(m, k)) continue;
      ++applicable;
      const LemmaReport report = lemma_witness(k, check);
      if (!report.confirmed) {
        out.status = ClaimStatus::fail;
        out.witness = {canonical_id(m)};
        out.detail = report.detail;
        return;
      }
    }
    require(applicable > 0, "no element satisfies the hypothesis at this n");
    out.status = ClaimStatus::pass;
    out.detail = std::to_string(applicable) + " kernels checked";
  };
}

bool ordered_with_big_interior(const KernelPartition& k) {
  if (k.height() < 3 || !k.blocks_elementwise_ordered()) return false;
  for (std::size_t i = 1; i + 1 < k.blocks.size(); ++i) {
    if (k.blocks[i].size() >= 2) return true;
  }
  return false;
}

bool ordered_with_singleton_interior(const KernelPartition& k) {
  if (k.height() < 3 || !k.blocks_elementwise_ordered()) return false;
  for (std::size_t i = 1; i + 1 < k.blocks.size(); ++i) {
    if (k.blocks[i].size() != 1) return false;
  }
  return true;
}

Handler convex_image_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(out.family != Family::P, "holds for contraction families only");
    const auto& set = ws.elements(out.family, out.n);
    std::size_t intervals = 0;
    for (const PartialMap& m : set.elements) {
      for (point_type lo = 1; lo <= out.n; ++lo) {
        if (!m.defined(lo)) continue;
        for (point_type hi = lo; hi <= out.n && m.defined(hi); ++hi) {
          ++intervals;
          const LemmaReport report = convex_image_report(m, lo, hi);
          if (!report.confirmed) {
            out.status = ClaimStatus::fail;
            out.witness = {canonical_id(m)};
            out.detail = report.detail;
            return;
          }
        }
      }
    }
    out.status = ClaimStatus::pass;
    out.detail = std::to_string(intervals) + " convex domain subsets checked";
  };
}

Handler regularity_criterion_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(out.family == Family::ORCP,
            "the criterion's ambient semigroup is orcp");
    const auto& set = ws.elements(out.family, out.n);
    const auto& brute = ws.regulars(out.family, out.n);
    std::size_t checked = 0, variant_disagreements = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set.elements[i].height() < 3) continue;
      ++checked;
      if (regular_char_orcp_mirrored_shift(set.elements[i]) != brute[i]) {
        ++variant_disagreements;
      }
      if (regular_char_orcp(set.elements[i]) != brute[i]) {
        out.status = ClaimStatus::fail;
        out.witness = {canonical_id(set.elements[i])};
        out.detail = brute[i] ? "criterion misses a regular element"
                              : "criterion accepts a non-regular element";
        return;
      }
    }
    require(checked > 0, "no element of height >= 3 at this n");
    out.status = ClaimStatus::pass;
    out.detail = std::to_string(checked) +
                 " elements of height >= 3 checked; mirrored-shift variant wrong on " +
                 std::to_string(variant_disagreements);
  };
}

Handler nonregular_products_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(theorem_family(out.family), "covers cp, ocp, orcp");
    require(out.n >= 3, "all elements are regular below n = 3");
    const auto& set = ws.elements(out.family, out.n);
    const auto& regular = ws.regulars(out.family, out.n);
    const auto& table = ws.table(out.family, out.n);

    std::size_t nonregular = set.size();
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (!regular[i]) {
        nonregular = i;
        break;
      }
    }
    if (nonregular == set.size()) {
      out.status = ClaimStatus::fail;
      out.detail = "every element is regular";
      return;
    }
    std::size_t pair_a = set.size(), pair_b = set.size();
    for (std::size_t i = 0; i < set.size() && pair_a == set.size(); ++i) {
      if (!regular[i]) continue;
      for (std::size_t j = 0; j < set.size(); ++j) {
        if (regular[j] && !regular[table.product(i, j)]) {
          pair_a = i;
          pair_b = j;
          break;
        }
      }
    }
    if (pair_a == set.size()) {
      out.status = ClaimStatus::fail;
      out.detail = "no pair of regular elements with a non-regular product";
      return;
    }
    out.witness = {canonical_id(set.elements[nonregular]),
                   canonical_id(set.elements[pair_a]),
                   canonical_id(set.elements[pair_b]),
                   canonical_id(set.elements[table.product(pair_a, pair_b)])};
    if (out.n == 3) {
      // The boundary pair on the 3-chain: (1,3 fixed) times (1 fixed, 2,3 -> 2).
      const PartialMap a = make(3, {{1, 1}, {3, 3}});
      const PartialMap b = make(3, {{1, 1}, {2, 2}, {3, 2}});
      const PartialMap expected_product = make(3, {{1, 1}, {3, 2}});
      const std::size_t pa = set.position_of(canonical_id(a));
      const std::size_t pb = set.position_of(canonical_id(b));
      const std::size_t prod = table.product(pa, pb);
      const bool ok = regular[pa] && regular[pb] && !regular[prod] &&
                      set.elements[prod] == expected_product;
      if (!ok) {
        out.status = ClaimStatus::fail;
        out.detail = "the known boundary pair does not behave as expected";
        return;
      }
      out.detail = "non-regular element and product counterexample found; "
                   "boundary pair verified";
    } else {
      out.detail = "non-regular element and product counterexample found";
    }
    out.status = ClaimStatus::pass;
  };
}

Handler hall_conditions_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(out.family == Family::ORCP, "strongly regular elements live in orcp");
    const SRegClosureReport& report = ws.sreg_report(out.n);
    std::ostringstream detail;
    detail << "idempotent-products-regular=" << report.hall_idempotent_products_regular
           << " regulars-subsemigroup=" << report.hall_regulars_form_subsemigroup
           << " idempotent-closure-regular=" << report.hall_idempotent_closure_regular;
    out.detail = detail.str();
    if (report.hall_conditions_agree()) {
      out.status = ClaimStatus::pass;
    } else {
      out.status = ClaimStatus::fail;
      out.witness = report.hall_witness;
    }
  };
}

Handler idempotent_form_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(out.family == Family::ORCP, "strongly regular elements live in orcp");
    const ElementSet& sr = ws.sreg_set(out.n);
    std::size_t tested = 0, statement_ok = 0, proof_ok = 0, low_height = 0;
    for (const PartialMap& m : sr.elements) {
      if (!is_idempotent_via_fixpoints(m)) continue;
      if (m.height() < 2) {
        ++low_height;
        continue;
      }
      ++tested;
      const IdempotentFormCheck check = idempotent_form_versions(m);
      statement_ok += check.statement_version;
      proof_ok += check.proof_version;
      if (!check.statement_version && out.witness.empty()) {
        out.witness = {canonical_id(m)};
      }
    }
    std::ostringstream detail;
    detail << tested << " idempotents of height >= 2; statement form " << statement_ok
           << "; one-below variant " << proof_ok << "; height-1 skipped " << low_height;
    out.detail = detail.str();
    out.status = statement_ok == tested ? ClaimStatus::pass : ClaimStatus::fail;
  };
}

Handler idempotent_products_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(out.family == Family::ORCP, "strongly regular elements live in orcp");
    const SRegClosureReport& report = ws.sreg_report(out.n);
    std::ostringstream detail;
    detail << report.idem_pairs << " idempotent pairs; "
           << report.idem_pair_empty_products << " empty products ("
           << report.idem_pair_empty_with_disjoint_fixpoints
           << " with disjoint fixed-point sets)";
    out.detail = detail.str();
    if (report.idempotent_products_ok()) {
      out.status = ClaimStatus::pass;
    } else {
      out.status = ClaimStatus::fail;
      for (const auto& [a, b] : report.idem_pair_failures) {
        out.witness.push_back(a);
        out.witness.push_back(b);
      }
    }
  };
}

Handler sreg_subsemigroup_handler() {
  return [](Workspace& ws, const ClaimRequest&, ClaimResult& out) {
    require(out.family == Family::ORCP, "strongly regular elements live in orcp");
    const SRegClosureReport& report = ws.sreg_report(out.n);
    std::ostringstream detail;
    detail << report.sreg_size << " strongly regular elements; " << report.closure_pairs
           << " pairs; " << report.closure_empty_products << " empty products";
    out.detail = detail.str();
    if (report.closure_ok()) {
      out.status = ClaimStatus::pass;
    } else {
      out.status = ClaimStatus::fail;
      for (const auto& [a, b] : report.closure_failures) {
        out.witness.push_back(a);
        out.witness.push_back(b);
      }
      for (map_id id : report.no_internal_witness) out.witness.push_back(id);
    }
  };
}

const std::map<std::string, ClaimSpec>& claim_table() {
  static const std::map<std::string, ClaimSpec> table = [] {
    std::map<std::string, ClaimSpec> t;
    t["containment"] = {"every element lies in the parent family", containment_handler()};
    t["closure"] = {"the family is closed under composition", closure_handler()};
    t["THM2.1.i"] = {"lstar by cancellation oracle equals lstar by equal image",
                     star_agreement(Relation::Lstar)};
    t["THM2.1.ii"] = {"rstar by cancellation oracle equals rstar by equal kernel",
                      star_agreement(Relation::Rstar)};
    t["THM2.1.iii"] = {"hstar by cancellation oracle equals hstar by image and kernel",
                       star_agreement(Relation::Hstar)};
    t["THM2.1.iv"] = {"dstar by cancellation oracle equals dstar by equal height",
                      star_agreement(Relation::Dstar)};
    t["L2.2"] = {"both principal *-ideal routes produce the same ideals",
                 ideal_routes_agree_handler()};
    t["L2.3"] = {"principal *-ideal membership never increases height",
                 ideal_height_monotone_handler()};
    t["C2.4"] = {"dstar and jstar induce the same partition",
                 dstar_equals_jstar_handler()};
    t["L2.5"] = {"every lstar class contains an idempotent (left abundance)",
                 left_abundance_handler()};
    t["L2.6"] = {"an idempotent-free rstar class exists (right abundance fails)",
                 right_abundance_fails_handler()};
    t["R2.7"] = {"every rstar class contains an idempotent (right abundance)",
                 right_abundance_holds_handler()};
    t["L1.1"] = {"ordered kernels with a big interior block have no relatively "
                 "convex transversal",
                 kernel_sweep_handler(
                     [](const PartialMap&, const KernelPartition& k) {
                       return ordered_with_big_interior(k);
                     },
                     LemmaCheck::relatively_convex_nonexistence)};
    t["L1.2"] = {"order-compatible kernels with a big interior block have no "
                 "relatively convex transversal",
                 kernel_sweep_handler(
                     [](const PartialMap& m, const KernelPartition& k) {
                       return member(Family::ORCP, m) && ordered_with_big_interior(k);
                     },
                     LemmaCheck::relatively_convex_nonexistence)};
    t["L1.3"] = {"ordered kernels with singleton interior blocks have an "
                 "admissible transversal",
                 kernel_sweep_handler(
                     [](const PartialMap&, const KernelPartition& k) {
                       return ordered_with_singleton_interior(k);
                     },
                     LemmaCheck::admissible_existence)};
    t["L1.4"] = {"images of convex domain subsets are intervals",
                 convex_image_handler()};
    t["L1.5"] = {"the height >= 3 regularity criterion matches brute-force "
                 "regularity",
                 regularity_criterion_handler()};
    t["R3.1"] = {"non-regular elements exist and regularity is not closed under "
                 "products",
                 nonregular_products_handler()};
    t["P3.2"] = {"the three equivalent regularity conditions agree on the strongly "
                 "regular elements",
                 hall_conditions_handler()};
    t["L3.3"] = {"strongly regular idempotents have the boundary-anchored staircase "
                 "form",
                 idempotent_form_handler()};
    t["L3.4"] = {"nonempty products of strongly regular idempotents are strongly "
                 "regular",
                 idempotent_products_handler()};
    t["T3.5"] = {"the strongly regular elements form a regular subsemigroup (zero "
                 "adjoined)",
                 sreg_subsemigroup_handler()};
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<std::string>& claim_registry() {
  static const std::vector<std::string> order = {
      "containment", "closure",   "THM2.1.i", "THM2.1.ii", "THM2.1.iii",
      "THM2.1.iv",   "L2.2",      "L2.3",     "C2.4",      "L2.5",
      "L2.6",        "R2.7",      "L1.1",     "L1.2",      "L1.3",
      "L1.4",        "L1.5",      "R3.1",     "P3.2",      "L3.3",
      "L3.4",        "T3.5"};
  return order;
}

bool is_known_claim(const std::string& id) { return claim_table().count(id) != 0; }

std::string claim_statement(const std::string& id) {
  auto it = claim_table().find(id);
  if (it == claim_table().end()) {
    throw Error(errc::out_of_range, "unknown claim id " + id);
  }
  return it->second.statement;
}

VerificationReport run_claims(Workspace& ws, const ClaimRequest& request) {
  std::vector<std::string> ids = request.claim_ids;
  if (ids.empty()) ids = claim_registry();
  for (const std::string& id : ids) {
    if (!is_known_claim(id)) {
      throw Error(errc::out_of_range, "unknown claim id " + id);
    }
  }
  std::vector<Family> families = request.families;
  if (families.empty()) families = ws.config().families;

  VerificationReport report;
  for (const std::string& id : ids) {
    const ClaimSpec& spec = claim_table().at(id);
    for (Family family : families) {
      for (int n = request.n_min; n <= request.n_max; ++n) {
        ClaimResult result;
        result.claim_id = id;
        result.statement = spec.statement;
        result.family = family;
        result.n = n;
        result.method = "-";
        const auto start = std::chrono::steady_clock::now();
        try {
          spec.run(ws, request, result);
        } catch (const Error& e) {
          switch (e.code()) {
            case errc::budget_exceeded:
              result.status = ClaimStatus::skipped_budget;
              result.detail = e.what();
              break;
            case errc::hypothesis_not_met:
            case errc::family_unsupported:
              result.status = ClaimStatus::hypothesis_not_met;
              result.detail = e.what();
              break;
            default:
              throw;
          }
        }
        const auto stop = std::chrono::steady_clock::now();
        result.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        report.claims.push_back(std::move(result));
      }
    }
  }
  return report;
}

}  // namespace chainsemi
