#ifndef CHAINSEMI_CLAIMS_HPP_
#define CHAINSEMI_CLAIMS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "config.hpp"
#include "green_star.hpp"
#include "regularity.hpp"

namespace chainsemi {

enum class ClaimStatus { pass, fail, skipped_budget, hypothesis_not_met };

std::string status_name(ClaimStatus s);

struct ClaimResult {
  std::string claim_id;
  std::string statement;
  Family family;
  int n = 0;
  std::string method;  // engine(s) used: oracle / characterization / both / -
  ClaimStatus status = ClaimStatus::fail;
  std::vector<map_id> witness;
  std::string detail;
  std::int64_t runtime_ms = 0;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;

  bool all_passed() const;
  std::size_t count(ClaimStatus s) const;
};

//! The claim ids, in registry (= report) order.
const std::vector<std::string>& claim_registry();
bool is_known_claim(const std::string& id);
std::string claim_statement(const std::string& id);

//! Memoizing computation context shared by the claims of one run. All
//! getters are lazy; references stay valid for the workspace lifetime.
class Workspace {
 public:
  explicit Workspace(Config config);

  const Config& config() const { return config_; }

  const ElementSet& elements(Family f, int n);
  const CayleyTable& table(Family f, int n);
  const std::vector<bool>& regulars(Family f, int n);
  const RelationClasses& star(Family f, int n, Relation rel, Method method);
  const RelationClasses& jstar(Family f, int n);
  const ElementSet& sreg_set(int n);
  const SRegClosureReport& sreg_report(int n);

 private:
  Config config_;
  std::map<std::pair<int, int>, std::unique_ptr<ElementSet>> elements_;
  std::map<std::pair<int, int>, std::unique_ptr<CayleyTable>> tables_;
  std::map<std::pair<int, int>, std::unique_ptr<std::vector<bool>>> regulars_;
  std::map<std::tuple<int, int, int, int>, std::unique_ptr<RelationClasses>> classes_;
  std::map<std::pair<int, int>, std::unique_ptr<RelationClasses>> jstar_;
  std::map<int, std::unique_ptr<ElementSet>> sreg_;
  std::map<int, std::unique_ptr<SRegClosureReport>> sreg_reports_;
};

struct ClaimRequest {
  std::vector<std::string> claim_ids;  // empty = the whole registry
  std::vector<Family> families;        // empty = the config's families
  int n_min = 1;
  int n_max = 4;
  Method method = Method::characterization;  // engine preference where a choice exists
  bool compare_methods = false;              // "both": cross-check engines where possible
};

//! Runs every requested claim for every (family, n) combination, in
//! registry order. Unknown claim ids throw hypothesis-independent
//! out_of_range; infeasible combinations are reported, never thrown.
VerificationReport run_claims(Workspace& ws, const ClaimRequest& request);

}  // namespace chainsemi

#endif  // CHAINSEMI_CLAIMS_HPP_
