#include "chainsemi/formats.hpp"

#include <iomanip>
#include <set>
#include <sstream>

namespace chainsemi {

namespace {
constexpr const char* kSchema = "chainsemi/1";
}

std::string dump_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

nlohmann::ordered_json enumeration_json(const ElementSet& set) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["family"] = family_name(set.family);
  j["n"] = set.n;
  j["count"] = set.size();
  j["ids"] = set.ids();
  return j;
}

std::string enumeration_csv(const ElementSet& set) {
  std::ostringstream os;
  os << "canonical_id\n";
  for (map_id id : set.ids()) os << id << "\n";
  return os.str();
}

nlohmann::ordered_json classes_json(const ElementSet& set,
                                    const RelationClasses& classes) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["family"] = family_name(set.family);
  j["n"] = set.n;
  j["relation"] = relation_name(classes.relation);
  j["method"] = classes.method == Method::oracle ? "oracle" : "characterization";
  j["class_count"] = classes.classes.size();
  const auto has_idem = classes_with_idempotent(set, classes);
  nlohmann::ordered_json out_classes = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    nlohmann::ordered_json entry;
    std::set<int> heights;
    std::vector<map_id> ids;
    for (std::size_t pos : classes.classes[c]) {
      heights.insert(set.elements[pos].height());
      ids.push_back(canonical_id(set.elements[pos]));
    }
    if (heights.size() == 1) {
      entry["height"] = *heights.begin();
    } else {
      entry["height"] = nullptr;
      entry["heights"] = heights;
    }
    entry["size"] = classes.classes[c].size();
    entry["has_idempotent"] = static_cast<bool>(has_idem[c]);
    entry["ids"] = ids;
    out_classes.push_back(std::move(entry));
  }
  j["classes"] = std::move(out_classes);
  return j;
}

std::string classes_csv(const ElementSet& set, const RelationClasses& classes) {
  std::ostringstream os;
  os << "class_index,canonical_id\n";
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    for (std::size_t pos : classes.classes[c]) {
      os << c << "," << canonical_id(set.elements[pos]) << "\n";
    }
  }
  return os.str();
}

nlohmann::ordered_json report_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const ClaimResult& c : report.claims) {
    nlohmann::ordered_json entry;
    entry["claim_id"] = c.claim_id;
    entry["statement"] = c.statement;
    entry["family"] = family_name(c.family);
    entry["n"] = c.n;
    entry["method"] = c.method;
    entry["status"] = status_name(c.status);
    entry["witness"] = c.witness;
    entry["detail"] = c.detail;
    claims.push_back(std::move(entry));
  }
  j["claims"] = std::move(claims);
  nlohmann::ordered_json summary;
  summary["pass"] = report.count(ClaimStatus::pass);
  summary["fail"] = report.count(ClaimStatus::fail);
  summary["skipped_budget"] = report.count(ClaimStatus::skipped_budget);
  summary["hypothesis_not_met"] = report.count(ClaimStatus::hypothesis_not_met);
  j["summary"] = std::move(summary);
  return j;
}

std::string report_table(const VerificationReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "CLAIM" << std::setw(7) << "FAMILY"
     << std::setw(4) << "N" << std::setw(18) << "METHOD" << std::setw(20) << "STATUS"
     << std::setw(9) << "MS" << "DETAIL" << "\n";
  os << std::string(100, '-') << "\n";
  for (const ClaimResult& c : report.claims) {
    os << std::left << std::setw(12) << c.claim_id << std::setw(7)
       << family_name(c.family) << std::setw(4) << c.n << std::setw(18) << c.method
       << std::setw(20) << status_name(c.status) << std::setw(9) << c.runtime_ms
       << c.detail << "\n";
  }
  os << std::string(100, '-') << "\n";
  os << "pass " << report.count(ClaimStatus::pass) << ", fail "
     << report.count(ClaimStatus::fail) << ", skipped_budget "
     << report.count(ClaimStatus::skipped_budget) << ", hypothesis_not_met "
     << report.count(ClaimStatus::hypothesis_not_met) << "\n";
  return os.str();
}

}  // namespace chainsemi
